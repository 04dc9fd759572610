//! The six verification suites and the concurrent runner.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use wirtinger_core::fock::{
    build_gauge_generator, build_molecule, charge_density, gauge_response, linear_theta, verify_bilinear_statistics,
    verify_one_boson_per_generator, BilinearOperator, FockLayout, Ladder, ModeId, Profile, Species,
};
use wirtinger_core::interactions::{
    build_j, build_quartic_v, build_total_operator, hermiticity_residual, swap_sets, verify_momentum_components,
    verify_pair_identities, verify_sun_invariance_of_v, verify_zero_total_momentum, PairPotential,
};
use wirtinger_core::internal::{build_sun_generators, build_u2_example, verify_internal_invariance, verify_structure_constants};
use wirtinger_core::lorentz::{
    build_single_particle_operator, build_translations, corrections, potential_signature, verify_commutation_table,
    verify_invariance, GeneratorSet,
};
use wirtinger_core::report::CommutationEntry;
use wirtinger_core::symcore::to_text;
use wirtinger_core::transforms::{
    default_steps, grid_chart, integrate_flow, translation_map, unitary2, verify_homomorphism, RealLayout,
};
use wirtinger_core::{GaussianRational, VariableId, WeylOperator};

use crate::config::{SuiteConfig, SuiteName};
use crate::report::{fmt_float, from_commutation, sanitize, Check, ReportError, VerificationReport};

/// Random unitary pairs for the homomorphism check.
pub const HOMOMORPHISM_SAMPLES: usize = 100;
/// Random points for the grid-chart check.
pub const GRID_POINTS: usize = 100;
pub const FLOW_TOLERANCE: f64 = 1e-8;
pub const FLOW_COMMUTE_TOLERANCE: f64 = 1e-7;
pub const GRID_TOLERANCE: f64 = 1e-12;
pub const RESPONSE_ZERO: f64 = 1e-12;
pub const RESPONSE_RATIO_TOLERANCE: f64 = 1e-10;
pub const GRAM_TOLERANCE: f64 = 1e-8;
pub const CLOSURE_TOLERANCE: f64 = 1e-12;
pub const NEGATIVE_CONTROL_FLOOR: f64 = 1e-3;

fn suite_rng(cfg: &SuiteConfig, suite: SuiteName) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(suite as u64);
    rng
}

fn error_check(suite: SuiteName, err: impl std::fmt::Display) -> Check {
    Check::new(format!("{suite}.setup.error"), "-", false, err.to_string())
}

pub fn run_lorentz(cfg: &SuiteConfig) -> Vec<Check> {
    let gens = match GeneratorSet::build(cfg.n, cfg.variant) {
        Ok(g) => g,
        Err(e) => return vec![error_check(SuiteName::Lorentz, e)],
    };
    let mut checks = from_commutation("lorentz.commutator", &verify_commutation_table(&gens));
    match build_single_particle_operator(cfg.n) {
        Ok(o) => checks.extend(from_commutation("lorentz.invariance", &verify_invariance(&o, &gens))),
        Err(e) => checks.push(error_check(SuiteName::Lorentz, e)),
    }
    let n = cfg.n as usize;
    if let Ok((pos, neg)) = potential_signature(cfg.n) {
        checks.push(Check::new(
            format!("lorentz.signature.n{}", cfg.n),
            "A-2",
            (pos, neg) == (4 * n, 4 * n),
            format!("inertia ({pos}, {neg}), expected ({}, {})", 4 * n, 4 * n),
        ));
    }
    match corrections() {
        Ok(records) => {
            for r in records {
                checks.push(Check::new(format!("lorentz.correction.{}", r.generator.label()), "A-3", r.solutions == 1, r.describe()));
            }
        }
        Err(e) => checks.push(Check::new("lorentz.correction.search", "A-3", false, format!("{e:?}"))),
    }
    checks
}

pub fn run_internal(cfg: &SuiteConfig) -> Vec<Check> {
    let sets: Vec<u16> = (1..=cfg.sets.max(1)).collect();
    let mut checks = match build_sun_generators(cfg.n, &sets) {
        Ok(g) => from_commutation("internal.structure", &verify_structure_constants(&g)),
        Err(e) => return vec![error_check(SuiteName::Internal, e)],
    };
    match verify_internal_invariance(cfg.n) {
        Ok(r) => checks.extend(from_commutation("internal.invariance", &r)),
        Err(e) => checks.push(error_check(SuiteName::Internal, e)),
    }
    checks
}

pub fn run_example_u2(cfg: &SuiteConfig) -> Vec<Check> {
    let ex = build_u2_example(cfg.variant);
    let mut checks = from_commutation("example_u2.verify", &ex.verify());
    checks.push(Check::new(
        "example_u2.resolution.generators",
        "(6)",
        true,
        format!("ly_sign_flipped={} completion={:?}", ex.ly_sign_flipped, ex.completion).to_lowercase(),
    ));
    checks
}

fn random_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::ratio(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn fmt_point(p: &[f64]) -> String {
    p.iter().map(|x| fmt_float(*x)).collect::<Vec<_>>().join(" ")
}

pub fn run_transforms(cfg: &SuiteConfig) -> Vec<Check> {
    let mut rng = suite_rng(cfg, SuiteName::Transforms);
    let mut checks = Vec::new();
    let n = cfg.n;

    // Degree-2 polynomials in two variables carry the representation.
    let vars = [VariableId::example(1), VariableId::example(2)];
    let e = |i: usize| WeylOperator::<Complex64>::var(vars[i]);
    let basis = [e(0).pow(2), e(0).multiply(&e(1)), e(1).pow(2)];
    let tau = std::f64::consts::TAU;
    let unitary = |rng: &mut ChaCha8Rng| unitary2(rng.gen_range(0.0..tau), rng.gen_range(0.0..tau), rng.gen_range(0.0..tau), rng.gen_range(0.0..tau));
    let pairs: Vec<_> = (0..HOMOMORPHISM_SAMPLES).map(|_| (unitary(&mut rng), unitary(&mut rng))).collect();
    let errors: Vec<f64> = pairs
        .par_iter()
        .map(|(a, b)| verify_homomorphism(&basis, &vars, a, b, cfg.tolerance).map(|c| c.max_error).unwrap_or(f64::INFINITY))
        .collect();
    let worst = errors.iter().cloned().fold(0.0, f64::max);
    checks.push(Check::bounded("transforms.homomorphism.degree2", "(5)", worst, cfg.tolerance));

    let mut add_fail = None;
    let samples = 20;
    for k in 0..samples {
        let x: [GaussianRational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
        let y: [GaussianRational; 4] = std::array::from_fn(|_| random_rational(&mut rng));
        let sum: [GaussianRational; 4] = std::array::from_fn(|i| x[i].clone() + y[i].clone());
        let ok = match (translation_map(&x, n, 1), translation_map(&y, n, 1), translation_map(&sum, n, 1)) {
            (Ok(tx), Ok(ty), Ok(ts)) => tx.compose(&ty).map(|c| c == ts).unwrap_or(false),
            _ => false,
        };
        if !ok && add_fail.is_none() {
            add_fail = Some(format!("sample {k}: x={x:?} y={y:?}"));
        }
    }
    let mut add = Check::new(
        format!("transforms.translation_add.n{n}"),
        "A-5b",
        add_fail.is_none(),
        format!("{samples} exact rational samples"),
    );
    if let Some(cx) = add_fail {
        add = add.with_counterexample(cx);
    }
    checks.push(add);

    let layout = RealLayout::for_set(n, 1);
    let translations = match build_translations(n) {
        Ok(p) => p,
        Err(e) => {
            checks.push(error_check(SuiteName::Transforms, e));
            return checks;
        }
    };
    let start: Vec<f64> = (0..layout.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let steps = default_steps(1.0);
    let eta = [-1i64, 1, 1, 1];
    let flows: Vec<Check> = (0..4usize)
        .into_par_iter()
        .map(|mu| {
            let shift: [GaussianRational; 4] =
                std::array::from_fn(|k| GaussianRational::from_integer(if k == mu { eta[mu] } else { 0 }));
            let flowed = integrate_flow(&translations[mu], 1.0, &start, &layout, steps);
            let closed = translation_map(&shift, n, 1).map_err(Into::into).and_then(|m| layout.map_point(&m, &start));
            let err = match (flowed, closed) {
                (Ok(a), Ok(b)) => max_abs_diff(&a, &b),
                _ => f64::INFINITY,
            };
            Check::bounded(format!("transforms.flow.P{mu}"), "A-5b", err, FLOW_TOLERANCE)
        })
        .collect();
    checks.extend(flows);
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    let commute: Vec<Check> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let run = |first: usize, second: usize| {
                integrate_flow(&translations[first], 1.0, &start, &layout, steps)
                    .and_then(|mid| integrate_flow(&translations[second], 1.0, &mid, &layout, steps))
            };
            let err = match (run(a, b), run(b, a)) {
                (Ok(x), Ok(y)) => max_abs_diff(&x, &y),
                _ => f64::INFINITY,
            };
            Check::bounded(format!("transforms.flow_commute.P{a}.P{b}"), "A-5b", err, FLOW_COMMUTE_TOLERANCE)
        })
        .collect();
    checks.extend(commute);

    let points: Vec<Vec<f64>> = (0..GRID_POINTS).map(|_| (0..layout.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    let expected = 8 * n as usize - 4;
    let outcomes: Vec<Result<f64, String>> = points
        .par_iter()
        .map(|p| match grid_chart(p, &translations, &layout) {
            Ok(chart) if chart.complement.len() == expected => Ok(chart.orthogonality_residual()),
            Ok(chart) => Err(format!("complement {} at {}", chart.complement.len(), fmt_point(p))),
            Err(e) => Err(format!("{e} at {}", fmt_point(p))),
        })
        .collect();
    let failures: Vec<&String> = outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
    let worst = outcomes.iter().filter_map(|o| o.as_ref().ok()).cloned().fold(0.0, f64::max);
    let pass = failures.is_empty() && worst < GRID_TOLERANCE;
    let mut grid = Check::new(
        format!("transforms.grid.n{n}"),
        "grid",
        pass,
        format!(
            "{}/{} points with complement {expected}, worst orthogonality {}",
            GRID_POINTS - failures.len(),
            GRID_POINTS,
            fmt_float(worst)
        ),
    );
    if let Some(first) = failures.first() {
        grid = grid.with_counterexample((*first).clone());
    }
    checks.push(grid);
    checks
}

pub fn run_interactions(cfg: &SuiteConfig) -> Vec<Check> {
    let (dim, sets) = (cfg.n, cfg.sets);
    let mut checks = Vec::new();
    match verify_pair_identities(dim, sets, &GaussianRational::from_integer(1)) {
        Ok(r) => checks.extend(from_commutation("interactions.identity", &r)),
        Err(e) => return vec![error_check(SuiteName::Interactions, e)],
    }
    match verify_momentum_components(dim, sets) {
        Ok(r) => checks.extend(from_commutation("interactions.momentum", &r)),
        Err(e) => checks.push(error_check(SuiteName::Interactions, e)),
    }
    let mut js = Vec::new();
    for m in 1..=sets {
        for n in 1..=sets {
            if m != n {
                for i in 1..=dim {
                    for j in 1..=dim {
                        js.push(build_j(i, j, m, n));
                    }
                }
            }
        }
    }
    let j_checks: Vec<Vec<Check>> = js
        .par_iter()
        .map(|j| {
            let mut out = match verify_zero_total_momentum(j, dim, sets) {
                Ok(r) => from_commutation("interactions.total_momentum", &r),
                Err(e) => vec![error_check(SuiteName::Interactions, e)],
            };
            out.push(Check::new(
                format!("interactions.replay.{}", sanitize(&j.record.describe())),
                "A-14",
                j.replays_exactly(),
                "exact replay",
            ));
            out
        })
        .collect();
    checks.extend(j_checks.into_iter().flatten());

    let all: Vec<u16> = (1..=sets).collect();
    let sun = build_sun_generators(dim, &all);
    for m in 1..=sets {
        for mp in m + 1..=sets {
            let (v, w) = match (build_quartic_v(m, mp, dim), build_quartic_v(mp, m, dim)) {
                (Ok(v), Ok(w)) => (v, w),
                (Err(e), _) | (_, Err(e)) => {
                    checks.push(error_check(SuiteName::Interactions, e));
                    continue;
                }
            };
            let tag = format!("{m}.{mp}");
            checks.push(
                Check::new(format!("interactions.v_symmetric.{tag}"), "A-10", v.operator == w.operator, "V(m,m') - V(m',m)")
                    .with_counterexample(to_text(&(v.operator.clone() - w.operator.clone()))),
            );
            checks.push(
                Check::new(format!("interactions.v_swap.{tag}"), "A-10", swap_sets(&v.operator, m, mp) == v.operator, "set exchange")
                    .with_counterexample(to_text(&(swap_sets(&v.operator, m, mp) - v.operator.clone()))),
            );
            match verify_zero_total_momentum(&v, dim, sets) {
                Ok(r) => checks.extend(from_commutation("interactions.total_momentum", &r)),
                Err(e) => checks.push(error_check(SuiteName::Interactions, e)),
            }
            if let Ok(own) = GeneratorSet::for_sets(dim, &[m], wirtinger_core::lorentz::Variant::Corrected) {
                let entries = (0..4)
                    .map(|mu| CommutationEntry::nonzero(format!("[P{mu}({m}),V({m},{mp})]"), "A-10", own.p(mu).commutator(&v.operator)))
                    .collect();
                let report = wirtinger_core::report::CommutationReport::from_entries(entries);
                checks.extend(from_commutation("interactions.component_momentum", &report));
            }
            match &sun {
                Ok(s) => checks.extend(from_commutation("interactions.sun", &verify_sun_invariance_of_v(&v, s))),
                Err(e) => checks.push(error_check(SuiteName::Interactions, e)),
            }
        }
    }
    match build_total_operator(dim, sets, PairPotential::Quartic) {
        Ok(total) => {
            let r = hermiticity_residual(&total);
            checks.push(
                Check::new("interactions.hermitian.total", "A-10", r.is_zero(), format!("{} residual terms", r.term_count()))
                    .with_counterexample(to_text(&r)),
            );
        }
        Err(e) => checks.push(error_check(SuiteName::Interactions, e)),
    }
    checks
}

/// A random bilinear on the particle modes of sites 0 and 1.
fn random_bilinear(rng: &mut ChaCha8Rng, layout: &FockLayout, n: u16) -> BilinearOperator {
    let mut modes = Vec::new();
    for site in 0..2u16 {
        for m in 1..=n.min(2) {
            modes.push(layout.index(ModeId { site, internal: m, species: Species::Particle }));
        }
    }
    let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let mut out = BilinearOperator::zero();
    for &a in &modes {
        for &b in &modes {
            out.add_term(Ladder::Create(a), Ladder::Annihilate(b), c());
            if a < b {
                out.add_term(Ladder::Create(a), Ladder::Create(b), c());
                out.add_term(Ladder::Annihilate(a), Ladder::Annihilate(b), c());
            }
        }
    }
    out
}

pub fn run_gauge(cfg: &SuiteConfig) -> Vec<Check> {
    let (n, l) = (cfg.n, cfg.lattice);
    let mut rng = suite_rng(cfg, SuiteName::Gauge);
    let mut checks = Vec::new();
    let mol = match build_molecule((l as f64 - 1.0) / 2.0, Profile::DEFAULT, n, l) {
        Ok(m) => m,
        Err(e) => return vec![error_check(SuiteName::Gauge, e)],
    };
    let generators = (n as usize * n as usize) - 1;
    let constant = vec![1.0; l as usize];
    let slope = linear_theta(0.0, 0.25, l);
    let doubled = linear_theta(0.0, 0.5, l);
    let shifted = linear_theta(1.75, 0.25, l);
    let per_alpha: Vec<Vec<Check>> = (0..generators)
        .into_par_iter()
        .map(|alpha| {
            let label = format!("T{}", alpha + 1);
            let response = |theta: &[f64]| gauge_response(&mol, theta, alpha, n, l);
            let (Ok(rc), Ok(r1), Ok(r2), Ok(rs)) = (response(&constant), response(&slope), response(&doubled), response(&shifted)) else {
                return vec![error_check(SuiteName::Gauge, "response construction failed")];
            };
            let ratio = r2.norm() / r1.norm();
            vec![
                Check::bounded(format!("gauge.global.{label}"), "(14)", rc.norm(), RESPONSE_ZERO),
                Check::new(format!("gauge.gradient_nonzero.{label}"), "(13)", r1.norm() > GRAM_TOLERANCE, format!("norm {}", fmt_float(r1.norm()))),
                Check::bounded(format!("gauge.gradient_linear.{label}"), "(13)", (ratio - 2.0).abs(), RESPONSE_RATIO_TOLERANCE),
                Check::bounded(format!("gauge.offset.{label}"), "(15)", rs.distance(&r1), RESPONSE_ZERO),
            ]
        })
        .collect();
    checks.extend(per_alpha.into_iter().flatten());

    let zero = build_gauge_generator(&vec![0.0; l as usize], 0, n, l).map(|g| g.is_zero()).unwrap_or(false);
    checks.push(Check::new("gauge.zero_theta.T1", "(11)", zero, "generator of theta = 0"));

    let alphas: Vec<usize> = (0..generators).collect();
    match verify_one_boson_per_generator(&mol, &slope, &alphas, n, l, GRAM_TOLERANCE) {
        Ok(r) => checks.push(Check::new("gauge.bosons.rank", "(12)", r.rank == generators, format!("gram rank {} of {generators}", r.rank))),
        Err(e) => checks.push(error_check(SuiteName::Gauge, e)),
    }
    let dup = [0usize, 0];
    if let Ok(r) = verify_one_boson_per_generator(&mol, &slope, &dup, n, l, GRAM_TOLERANCE) {
        checks.push(Check::new("gauge.bosons.duplicate", "(12)", r.rank == 1, format!("gram rank {} of 2", r.rank)));
    }

    let stats = |a: &BilinearOperator, b: &BilinearOperator| verify_bilinear_statistics(a, b);
    if let (Ok(near), Ok(far)) = (charge_density(0, 0, n, l), charge_density(l - 1, generators - 1, n, l)) {
        match stats(&near, &far) {
            Ok(r) => checks.push(Check::new(
                "gauge.statistics.disjoint",
                "bilinear",
                r.disjoint && r.commutator_norm == 0.0,
                format!("commutator norm {}", fmt_float(r.commutator_norm)),
            )),
            Err(e) => checks.push(error_check(SuiteName::Gauge, e)),
        }
    }
    let layout = FockLayout { n, l };
    let pairs = [
        ("density", charge_density(0, 0, n, l).ok(), charge_density(0, generators - 1, n, l).ok().map(|d| {
            d.add(&BilinearOperator::hopping(0, layout.index(ModeId { site: 1, internal: 1, species: Species::Particle }), Complex64::new(0.5, 0.25)))
        })),
        ("random", Some(random_bilinear(&mut rng, &layout, n)), Some(random_bilinear(&mut rng, &layout, n))),
    ];
    for (name, a, b) in pairs {
        let (Some(a), Some(b)) = (a, b) else { continue };
        match stats(&a, &b) {
            Ok(r) => {
                checks.push(Check::bounded(format!("gauge.statistics.closure.{name}"), "bilinear", r.commutator_residual, CLOSURE_TOLERANCE));
                checks.push(Check::new(
                    format!("gauge.statistics.anticommutator.{name}"),
                    "bilinear",
                    r.anticommutator_residual > NEGATIVE_CONTROL_FLOOR,
                    format!("{} > {}", fmt_float(r.anticommutator_residual), fmt_float(NEGATIVE_CONTROL_FLOOR)),
                ));
            }
            Err(e) => checks.push(error_check(SuiteName::Gauge, e)),
        }
    }
    checks
}

pub fn run_one(cfg: &SuiteConfig, suite: SuiteName) -> Vec<Check> {
    match suite {
        SuiteName::Lorentz => run_lorentz(cfg),
        SuiteName::Internal => run_internal(cfg),
        SuiteName::ExampleU2 => run_example_u2(cfg),
        SuiteName::Transforms => run_transforms(cfg),
        SuiteName::Interactions => run_interactions(cfg),
        SuiteName::Gauge => run_gauge(cfg),
    }
}

/// Run the configured suites concurrently and aggregate by check id.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, ReportError> {
    let checks: Vec<Check> = cfg.suites.par_iter().flat_map(|&s| run_one(cfg, s)).collect();
    VerificationReport::new(cfg.clone(), checks)
}
