use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use wirtinger_core::internal::{build_sun_generators, build_u2_example, verify_internal_invariance, verify_structure_constants, SunBasis};
use wirtinger_core::lorentz::{
    build_single_particle_operator, multiplicative_part, real_quadratic_form, set_variables, verify_commutation_table,
    verify_invariance, GeneratorSet, Variant,
};
use wirtinger_core::GaussianRational;

#[test]
fn corrected_tables_close_for_small_n() {
    for n in 1..=3 {
        let g = GeneratorSet::build(n, Variant::Corrected).unwrap();
        let report = verify_commutation_table(&g);
        assert_eq!(report.len(), 45);
        assert!(report.all_pass(), "n={n}: {:?}", report.failing_labels());
        let o = build_single_particle_operator(n).unwrap();
        assert!(verify_invariance(&o, &g).all_pass());
    }
}

#[test]
fn printed_failure_set_is_stable() {
    let first = verify_commutation_table(&GeneratorSet::build(1, Variant::AsPrinted).unwrap()).failing_labels();
    let again = verify_commutation_table(&GeneratorSet::build(1, Variant::AsPrinted).unwrap()).failing_labels();
    let wider = verify_commutation_table(&GeneratorSet::build(2, Variant::AsPrinted).unwrap()).failing_labels();
    assert_eq!(first, again);
    assert_eq!(first, wider);
    assert!(!first.is_empty());
    assert_eq!(first.len(), 10);
}

fn float_inertia(m: &[Vec<num_rational::BigRational>]) -> (usize, usize) {
    let d = m.len();
    let dense = DMatrix::from_fn(d, d, |r, c| m[r][c].to_f64().unwrap());
    let eig = SymmetricEigen::new(dense);
    let pos = eig.eigenvalues.iter().filter(|&&e| e > 1e-9).count();
    let neg = eig.eigenvalues.iter().filter(|&&e| e < -1e-9).count();
    (pos, neg)
}

#[test]
fn potential_inertia_matches_eigensolver() {
    for n in 1..=3 {
        let o = build_single_particle_operator(n).unwrap();
        let form = real_quadratic_form(&multiplicative_part(&o), &set_variables(n, 1)).unwrap();
        let n = n as usize;
        assert_eq!(float_inertia(&form), (4 * n, 4 * n));
        assert_eq!(wirtinger_core::lorentz::potential_signature(n as u16).unwrap(), (4 * n, 4 * n));
    }
}

fn to_na(m: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    DMatrix::from_fn(m.len(), m.len(), |r, c| m[r][c])
}

#[test]
fn structure_constants_match_matrix_traces() {
    for n in 2..=3u16 {
        let basis = SunBasis::new(n).unwrap();
        let f = basis.structure_constants();
        let mats: Vec<_> = (0..basis.len()).map(|a| to_na(&basis.normalized(a))).collect();
        for a in 0..basis.len() {
            assert!((mats[a].trace()).norm() < 1e-12);
            for b in 0..basis.len() {
                let norm = (&mats[a] * &mats[b]).trace();
                assert!((norm - Complex64::new(if a == b { 2.0 } else { 0.0 }, 0.0)).norm() < 1e-12);
                let comm = &mats[a] * &mats[b] - &mats[b] * &mats[a];
                for c in 0..basis.len() {
                    let oracle = ((&comm * &mats[c]).trace() * Complex64::new(0.0, -0.5)).re;
                    assert!((oracle - f[a][b][c]).abs() < 1e-12, "n={n} f[{a}][{b}][{c}]");
                }
            }
        }
        let gens = build_sun_generators(n, &[1]).unwrap();
        assert!(verify_structure_constants(&gens).all_pass());
        assert!(verify_internal_invariance(n).unwrap().all_pass());
    }
}

#[test]
fn su2_structure_constants_are_levi_civita() {
    let f = SunBasis::new(2).unwrap().structure_constants();
    let eps = |a: usize, b: usize, c: usize| -> f64 {
        match (a, b, c) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
            _ => 0.0,
        }
    };
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                assert!((f[a][b][c] - 2.0 * eps(a, b, c)).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn u2_example_labels() {
    let ex = build_u2_example(Variant::Corrected);
    let report = ex.verify();
    assert!(report.all_pass(), "{:?}", report.failing_labels());
    let printed = build_u2_example(Variant::AsPrinted);
    assert!(!printed.verify().all_pass());
    let two = GaussianRational::from_integer(2);
    for (k, b) in ex.basis.iter().enumerate() {
        let lz = wirtinger_core::internal::eigenvalue(b, &ex.lz.apply(b).unwrap()).unwrap();
        assert_eq!(lz, GaussianRational::from_integer(1 - k as i64));
        let l2 = wirtinger_core::internal::eigenvalue(b, &ex.casimir().apply(b).unwrap()).unwrap();
        assert_eq!(l2, two);
    }
}
