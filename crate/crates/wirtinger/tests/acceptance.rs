use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wirtinger::config::{SuiteConfig, SuiteName};
use wirtinger::{run_suite, Status, VerificationReport};
use wirtinger_core::internal::{build_sun_generators, build_u2_example, eigenvalue, verify_internal_invariance, verify_structure_constants};
use wirtinger_core::lorentz::{
    build_single_particle_operator, build_translations, potential_signature, verify_commutation_table, verify_invariance,
    GeneratorSet, Variant,
};
use wirtinger_core::transforms::{
    default_steps, grid_chart, integrate_flow, translation_map, unitary2, verify_homomorphism, RealLayout,
};
use wirtinger_core::{GaussianRational, Monomial, VariableId, WeylOperator};

type G = GaussianRational;

/// One status line per criterion, written past the test harness capture.
fn line(number: u8, name: &str, pass: bool, detail: &str) -> bool {
    let status = if pass { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {number:02} [{name}]: {status} | {detail}");
    pass
}

fn config(suites: &[SuiteName], n: u16) -> SuiteConfig {
    SuiteConfig { n, suites: suites.to_vec(), ..SuiteConfig::default() }
}

fn ids_with<'a>(report: &'a VerificationReport, prefix: &str) -> Vec<&'a str> {
    report.checks.iter().filter(|c| c.id.starts_with(prefix)).map(|c| c.id.as_str()).collect()
}

fn alphabet() -> [VariableId; 6] {
    [
        VariableId::u(1, 1, 1),
        VariableId::v(1, 1, 1),
        VariableId::u(1, 1, 1).bar(),
        VariableId::v(1, 1, 1).bar(),
        VariableId::u(2, 1, 1),
        VariableId::v(2, 1, 1),
    ]
}

fn random_operator(rng: &mut ChaCha8Rng, with_derivs: bool) -> WeylOperator {
    let vars = alphabet();
    let mut op = WeylOperator::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let degree = rng.gen_range(0..=3);
        let mut xs = std::collections::BTreeMap::new();
        let mut ds = std::collections::BTreeMap::new();
        for _ in 0..degree {
            let v = vars[rng.gen_range(0..vars.len())];
            if with_derivs && rng.gen_bool(0.5) {
                *ds.entry(v).or_insert(0u32) += 1;
            } else {
                *xs.entry(v).or_insert(0u32) += 1;
            }
        }
        let c = G::from_parts(rng.gen_range(-4..=4), rng.gen_range(1..=3), rng.gen_range(-4..=4), rng.gen_range(1..=3));
        op.add_term(Monomial::new(xs.into_iter().collect(), ds.into_iter().collect()), c);
    }
    op
}

#[test]
fn criterion_01_weyl_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let triples = 1000;
    let mut mismatches = 0;
    for _ in 0..triples {
        let (a, b, p) = (random_operator(&mut rng, true), random_operator(&mut rng, true), random_operator(&mut rng, false));
        let lhs = a.multiply(&b).apply(&p).unwrap();
        let rhs = a.apply(&b.apply(&p).unwrap()).unwrap();
        if lhs != rhs {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = mismatches == 0 && elapsed < Duration::from_secs(30);
    assert!(line(1, "weyl-oracle", pass, &format!("{triples} triples, {mismatches} mismatches, {elapsed:.2?} (< 30s)")));
}

#[test]
fn criterion_02_lorentz_table() {
    let start = Instant::now();
    let mut detail = Vec::new();
    let mut pass = true;
    for n in 1..=3 {
        let r = verify_commutation_table(&GeneratorSet::build(n, Variant::Corrected).unwrap());
        pass &= r.len() == 45 && r.all_pass();
        detail.push(format!("n={n}: {}/45 exact", r.entries.iter().filter(|e| e.pass).count()));
    }
    let printed = |n| verify_commutation_table(&GeneratorSet::build(n, Variant::AsPrinted).unwrap()).failing_labels();
    let first = printed(1);
    let stable = first == printed(1) && first == printed(2);
    let cfg = SuiteConfig { variant: Variant::AsPrinted, ..config(&[SuiteName::Lorentz], 2) };
    let runs: Vec<Vec<String>> = (0..2)
        .map(|_| run_suite(&cfg).unwrap().failing_ids().into_iter().filter(|id| id.starts_with("lorentz.commutator")).map(String::from).collect())
        .collect();
    let reported = runs[0] == runs[1] && runs[0].len() == first.len();
    let elapsed = start.elapsed();
    pass &= stable && reported && !first.is_empty() && elapsed < Duration::from_secs(60);
    detail.push(format!("as_printed fails {} pairs {:?}, stable={stable}, reported={reported}, {elapsed:.2?} (< 60s)", first.len(), first));
    assert!(line(2, "lorentz-table", pass, &detail.join("; ")));
}

#[test]
fn criterion_03_single_particle_invariance() {
    let mut pass = true;
    let mut detail = Vec::new();
    for n in 1..=3 {
        let o = build_single_particle_operator(n).unwrap();
        let r = verify_invariance(&o, &GeneratorSet::build(n, Variant::Corrected).unwrap());
        pass &= r.len() == 10 && r.all_pass();
        detail.push(format!("n={n}: {}/10 vanish", r.entries.iter().filter(|e| e.pass).count()));
    }
    assert!(line(3, "invariance", pass, &detail.join("; ")));
}

#[test]
fn criterion_04_sun_suite() {
    let mut pass = true;
    let mut detail = Vec::new();
    for n in 2..=3 {
        let gens = build_sun_generators(n, &[1]).unwrap();
        let structure = verify_structure_constants(&gens);
        let invariance = verify_internal_invariance(n).unwrap();
        let d = (n * n - 1) as usize;
        pass &= structure.all_pass() && structure.len() == d * (d - 1) / 2;
        pass &= invariance.all_pass() && invariance.len() == d * 11;
        detail.push(format!(
            "n={n}: {} structure brackets, {} vanishing commutators with O, J, K, P",
            structure.len(),
            invariance.len()
        ));
    }
    assert!(line(4, "sun", pass, &detail.join("; ")));
}

#[test]
fn criterion_05_u2_example() {
    let ex = build_u2_example(Variant::Corrected);
    let casimir = ex.casimir();
    let lz: Vec<G> = ex.basis.iter().map(|b| eigenvalue(b, &ex.lz.apply(b).unwrap()).unwrap()).collect();
    let l2: Vec<G> = ex.basis.iter().map(|b| eigenvalue(b, &casimir.apply(b).unwrap()).unwrap()).collect();
    let expected_lz: Vec<G> = [1, 0, -1].into_iter().map(G::from_integer).collect();
    let pass = lz == expected_lz && l2.iter().all(|v| *v == G::from_integer(2)) && ex.verify().all_pass();
    let show = |v: &[G]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    assert!(line(5, "u2-example", pass, &format!("Lz = ({}), L2 = ({})", show(&lz), show(&l2))));
}

#[test]
fn criterion_06_homomorphism() {
    let vars = [VariableId::example(1), VariableId::example(2)];
    let e = |i: usize| WeylOperator::<Complex64>::var(vars[i]);
    let basis = [e(0).pow(2), e(0).multiply(&e(1)), e(1).pow(2)];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tau = std::f64::consts::TAU;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut u = || unitary2(rng.gen_range(0.0..tau), rng.gen_range(0.0..tau), rng.gen_range(0.0..tau), rng.gen_range(0.0..tau));
        let (a, b) = (u(), u());
        worst = worst.max(verify_homomorphism(&basis, &vars, &a, &b, 1e-10).unwrap().max_error);
    }
    assert!(line(6, "homomorphism", worst < 1e-10, &format!("100 unitary pairs, max |R(BA) - R(B)R(A)| = {worst:e} (< 1e-10)")));
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn criterion_07_translations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut additive = true;
    for _ in 0..25 {
        let mut q = || G::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let x: [G; 4] = std::array::from_fn(|_| q());
        let y: [G; 4] = std::array::from_fn(|_| q());
        let s: [G; 4] = std::array::from_fn(|k| x[k].clone() + y[k].clone());
        let composed = translation_map(&x, 1, 1).unwrap().compose(&translation_map(&y, 1, 1).unwrap()).unwrap();
        additive &= composed == translation_map(&s, 1, 1).unwrap();
    }
    let layout = RealLayout::for_set(1, 1);
    let p = build_translations(1).unwrap();
    let start: Vec<f64> = (0..layout.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let steps = default_steps(1.0);
    let eta = [-1, 1, 1, 1];
    let mut flow_err: f64 = 0.0;
    for mu in 0..4 {
        let flowed = integrate_flow(&p[mu], 1.0, &start, &layout, steps).unwrap();
        let shift: [G; 4] = std::array::from_fn(|k| G::from_integer(if k == mu { eta[mu] } else { 0 }));
        let closed = layout.map_point(&translation_map(&shift, 1, 1).unwrap(), &start).unwrap();
        flow_err = flow_err.max(max_diff(&flowed, &closed));
    }
    let mut commute_err: f64 = 0.0;
    for a in 0..4 {
        for b in a + 1..4 {
            let run = |x: usize, y: usize| {
                let mid = integrate_flow(&p[x], 1.0, &start, &layout, steps).unwrap();
                integrate_flow(&p[y], 1.0, &mid, &layout, steps).unwrap()
            };
            commute_err = commute_err.max(max_diff(&run(a, b), &run(b, a)));
        }
    }
    let pass = additive && flow_err < 1e-8 && commute_err < 1e-7;
    assert!(line(
        7,
        "translations",
        pass,
        &format!("exact additivity={additive}, RK4 vs closed form {flow_err:e} (< 1e-8), flow commutator {commute_err:e} (< 1e-7)")
    ));
}

fn grid_outcome(n: u16, points: usize, seed: u64) -> (usize, usize, f64) {
    let layout = RealLayout::for_set(n, 1);
    let p = build_translations(n).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut good, mut degenerate, mut worst) = (0, 0, 0.0f64);
    for _ in 0..points {
        let pt: Vec<f64> = (0..layout.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        match grid_chart(&pt, &p, &layout) {
            Ok(chart) if chart.complement.len() == 8 * n as usize - 4 => {
                good += 1;
                worst = worst.max(chart.orthogonality_residual());
            }
            _ => degenerate += 1,
        }
    }
    (good, degenerate, worst)
}

#[test]
fn criterion_08_grid_construction() {
    let (good, degenerate, worst) = grid_outcome(1, 100, 8);
    let (good2, degenerate2, worst2) = grid_outcome(2, 100, 8);
    let pass = good == 100 && worst < 1e-12;
    let detail = format!(
        "n=1: {good}/100 points with complement 4 ({degenerate} degenerate), residual {worst:e}; \
         supplementary n=2: {good2}/100 with complement 12 ({degenerate2} degenerate), residual {worst2:e}"
    );
    assert!(line(8, "grid", pass, &detail), "{detail}");
}

#[test]
fn criterion_09_interactions() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for n in 2..=3 {
        let report = run_suite(&config(&[SuiteName::Interactions], n)).unwrap();
        let families = [
            ("interactions.identity.transfer", 3 * n as usize * n as usize * 4),
            ("interactions.total_momentum.P0.J", 2 * n as usize * n as usize),
            ("interactions.total_momentum.P3.V", 1),
            ("interactions.component_momentum", 4),
            ("interactions.v_symmetric", 1),
            ("interactions.sun", n as usize * n as usize - 1),
        ];
        for (prefix, count) in families {
            let found = ids_with(&report, prefix).len();
            if found != count {
                pass = false;
                detail.push(format!("n={n}: {prefix} has {found} checks, expected {count}"));
            }
        }
        pass &= report.all_pass();
        detail.push(format!("n={n}: {}/{} checks pass", report.summary.passed, report.summary.total));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    detail.push(format!("{elapsed:.2?} (< 5 min)"));
    assert!(line(9, "interactions", pass, &detail.join("; ")));
}

#[test]
fn criterion_10_signature() {
    let sig: Vec<(usize, usize)> = (1..=3).map(|n| potential_signature(n).unwrap()).collect();
    let pass = sig == [(4, 4), (8, 8), (12, 12)];
    assert!(line(10, "signature", pass, &format!("inertia for n=1,2,3: {sig:?}")));
}

#[test]
fn criterion_11_gauge_response() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for lattice in [4, 6] {
        let cfg = SuiteConfig { lattice, ..config(&[SuiteName::Gauge], 2) };
        let report = run_suite(&cfg).unwrap();
        let needed = ["gauge.global.T", "gauge.gradient_nonzero.T", "gauge.gradient_linear.T", "gauge.offset.T"];
        for prefix in needed {
            pass &= ids_with(&report, prefix).len() == 3;
        }
        let rank = report.get("gauge.bosons.rank").unwrap();
        pass &= report.all_pass();
        detail.push(format!("L={lattice}: {}/{} pass, {}", report.summary.passed, report.summary.total, rank.residual));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    detail.push(format!("{elapsed:.2?} (< 60s)"));
    assert!(line(11, "gauge-response", pass, &detail.join("; ")));
}

#[test]
fn criterion_12_bilinear_statistics() {
    let report = run_suite(&config(&[SuiteName::Gauge], 2)).unwrap();
    let ids = ids_with(&report, "gauge.statistics");
    let pass = ids.len() == 5 && ids.iter().all(|id| report.get(id).unwrap().status == Status::Pass);
    let detail: Vec<String> = ids.iter().map(|id| format!("{id}: {}", report.get(id).unwrap().residual)).collect();
    assert!(line(12, "bilinear-statistics", pass, &detail.join("; ")));
}

#[test]
fn criterion_13_determinism() {
    let cfg = SuiteConfig { seed: 13, ..SuiteConfig::default() };
    let first = run_suite(&cfg).unwrap().to_json();
    let second = run_suite(&cfg).unwrap().to_json();
    let other = run_suite(&SuiteConfig { seed: 14, ..cfg.clone() }).unwrap().to_json();
    let pass = first == second && first != other;
    assert!(line(13, "determinism", pass, &format!("{} bytes, identical={}, seed-sensitive={}", first.len(), first == second, first != other)));
}
