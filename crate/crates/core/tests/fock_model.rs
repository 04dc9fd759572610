use num_complex::Complex64;
use proptest::prelude::*;
use wirtinger_core::fock::{
    build_gauge_generator, build_molecule, charge_density, gauge_response, linear_theta, verify_bilinear_statistics,
    verify_one_boson_per_generator, BilinearOperator, FockLayout, FockState, Ladder, ModeId, Profile, Species,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn creations_anticommute(modes in prop::collection::vec(0usize..12, 1..6), swap_at in 0usize..5) {
        let build = |seq: &[usize]| seq.iter().fold(FockState::vacuum(), |s, &k| s.create(k));
        let state = build(&modes);
        let mut distinct = modes.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() < modes.len() {
            prop_assert!(state.is_empty());
        } else {
            prop_assert_eq!(state.len(), 1);
            if swap_at + 1 < modes.len() {
                let mut swapped = modes.clone();
                swapped.swap(swap_at, swap_at + 1);
                prop_assert!(build(&swapped).add(&state).is_empty());
            }
        }
    }

    #[test]
    fn annihilation_undoes_creation(modes in prop::collection::btree_set(0usize..12, 1..6), extra in 0usize..12) {
        let state = modes.iter().fold(FockState::vacuum(), |s, &k| s.create(k));
        if !modes.contains(&extra) {
            let there_and_back = state.create(extra).annihilate(extra);
            prop_assert!(there_and_back.distance(&state) < 1e-15);
        }
    }

    #[test]
    fn generator_is_linear_in_theta(a in prop::collection::vec(-2.0f64..2.0, 4), b in prop::collection::vec(-2.0f64..2.0, 4), alpha in 0usize..3) {
        let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let ga = build_gauge_generator(&a, alpha, 2, 4).unwrap();
        let gb = build_gauge_generator(&b, alpha, 2, 4).unwrap();
        let gs = build_gauge_generator(&sum, alpha, 2, 4).unwrap();
        prop_assert!(gs.distance(&ga.add(&gb)) < 1e-14);
    }
}

#[test]
fn mode_order_is_site_internal_species() {
    let layout = FockLayout::new(3, 4).unwrap();
    assert_eq!(layout.mode_count(), 24);
    let modes: Vec<ModeId> = (0..layout.mode_count()).map(|k| layout.mode(k)).collect();
    assert!(modes.windows(2).all(|w| w[0] < w[1]));
    for (k, m) in modes.iter().enumerate() {
        assert_eq!(layout.index(*m), k);
    }
    assert_eq!(modes[1], ModeId { site: 0, internal: 1, species: Species::Antiparticle });
}

#[test]
fn zero_theta_gives_zero_generator() {
    assert!(build_gauge_generator(&[0.0; 4], 0, 2, 4).unwrap().is_zero());
}

#[test]
fn global_invariance_across_sizes() {
    for n in 2..=3u16 {
        for l in [4u16, 6] {
            let mol = build_molecule((l as f64 - 1.0) / 2.0, Profile::DEFAULT, n, l).unwrap();
            assert!(mol.particle_numbers().iter().all(|&k| k == 2 * n as u32));
            for alpha in 0..(n * n - 1) as usize {
                let r = gauge_response(&mol, &vec![1.3; l as usize], alpha, n, l).unwrap();
                assert!(r.norm() < 1e-12, "n={n} L={l} alpha={alpha}");
            }
        }
    }
}

#[test]
fn gradient_response_law() {
    for l in [4u16, 6] {
        let mol = build_molecule(1.5, Profile::DEFAULT, 2, l).unwrap();
        for alpha in 0..3 {
            let r1 = gauge_response(&mol, &linear_theta(0.0, 0.2, l), alpha, 2, l).unwrap();
            let r2 = gauge_response(&mol, &linear_theta(0.0, 0.4, l), alpha, 2, l).unwrap();
            let offset = gauge_response(&mol, &linear_theta(-0.7, 0.2, l), alpha, 2, l).unwrap();
            assert!(r1.norm() > 1e-6);
            assert!((r2.norm() / r1.norm() - 2.0).abs() < 1e-10);
            assert!(offset.distance(&r1) < 1e-12);
        }
    }
}

#[test]
fn delta_profile_feels_no_gradient() {
    let mol = build_molecule(2.0, Profile::Delta, 2, 4).unwrap();
    let r = gauge_response(&mol, &linear_theta(0.0, 1.0, 4), 0, 2, 4).unwrap();
    assert!(r.norm() < 1e-12);
    let boxed = build_molecule(0.5, Profile::Box { half_width: 1 }, 2, 4);
    assert!(boxed.is_err());
    assert!(build_molecule(2.0, Profile::Box { half_width: 1 }, 2, 4).is_ok());
}

#[test]
fn responses_per_generator() {
    let mol = build_molecule(1.5, Profile::DEFAULT, 2, 4).unwrap();
    let slope = linear_theta(0.0, 0.3, 4);
    assert_eq!(verify_one_boson_per_generator(&mol, &slope, &[0, 1, 2], 2, 4, 1e-8).unwrap().rank, 3);
    assert_eq!(verify_one_boson_per_generator(&mol, &slope, &[0, 0, 2], 2, 4, 1e-8).unwrap().rank, 2);
    assert_eq!(verify_one_boson_per_generator(&mol, &[0.5; 4], &[0, 1, 2], 2, 4, 1e-8).unwrap().rank, 0);
}

#[test]
fn random_bilinears_close_under_commutation() {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let mut b1 = BilinearOperator::hopping(0, 1, c(0.3, -0.2));
    b1.add_term(Ladder::Create(2), Ladder::Create(3), c(1.1, 0.0));
    b1.add_term(Ladder::Annihilate(1), Ladder::Annihilate(4), c(-0.4, 0.7));
    let mut b2 = BilinearOperator::hopping(3, 0, c(0.9, 0.1));
    b2.add_term(Ladder::Annihilate(2), Ladder::Annihilate(5), c(0.2, 0.2));
    b2.add_term(Ladder::Create(4), Ladder::Annihilate(4), c(-1.0, 0.0));
    let r = verify_bilinear_statistics(&b1, &b2).unwrap();
    assert!(!r.disjoint);
    assert!(r.commutator_norm > 1e-3);
    assert!(r.commutator_residual < 1e-12);
    assert!(r.anticommutator_residual > 1e-3);

    let far = charge_density(3, 0, 2, 4).unwrap();
    let near = charge_density(0, 2, 2, 4).unwrap();
    let d = verify_bilinear_statistics(&near, &far).unwrap();
    assert!(d.disjoint);
    assert_eq!(d.commutator_norm, 0.0);
}
