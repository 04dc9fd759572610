//! A small fermionic Fock model on a one-dimensional lattice: extended
//! particle/antiparticle molecules, local SU(n) charge densities and the
//! first-order response of the molecule to a position-dependent rotation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::internal::{InternalError, SunBasis};
use crate::linalg;

/// Amplitudes at or below this magnitude are dropped.
pub const DROP_TOLERANCE: f64 = 1e-14;
/// Largest mode count accepted by the dense statistics check.
pub const MAX_STATISTICS_MODES: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub enum FockError {
    Internal(InternalError),
    TooManyModes(usize),
    ThetaLength { expected: usize, got: usize },
    AlphaOutOfRange(usize),
    ProfileOutsideLattice,
    ZeroState,
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::Internal(e) => write!(f, "{e}"),
            FockError::TooManyModes(m) => write!(f, "{m} modes exceed the 64-bit occupation limit or dense-check limit"),
            FockError::ThetaLength { expected, got } => write!(f, "theta needs {expected} sites, got {got}"),
            FockError::AlphaOutOfRange(a) => write!(f, "generator index {a} out of range"),
            FockError::ProfileOutsideLattice => f.write_str("binding profile support leaves the lattice"),
            FockError::ZeroState => f.write_str("construction produced the zero state"),
        }
    }
}

impl From<InternalError> for FockError {
    fn from(e: InternalError) -> Self {
        FockError::Internal(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Particle,
    Antiparticle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModeId {
    pub site: u16,
    /// `1..=n`.
    pub internal: u16,
    pub species: Species,
}

/// Mode numbering in `(site, internal, species)` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockLayout {
    pub n: u16,
    pub l: u16,
}

impl FockLayout {
    pub fn new(n: u16, l: u16) -> Result<Self, FockError> {
        let layout = FockLayout { n, l };
        if layout.mode_count() > 64 {
            return Err(FockError::TooManyModes(layout.mode_count()));
        }
        Ok(layout)
    }

    pub fn mode_count(&self) -> usize {
        2 * self.n as usize * self.l as usize
    }

    pub fn index(&self, m: ModeId) -> usize {
        let s = match m.species {
            Species::Particle => 0,
            Species::Antiparticle => 1,
        };
        (m.site as usize * self.n as usize + (m.internal as usize - 1)) * 2 + s
    }

    pub fn mode(&self, k: usize) -> ModeId {
        let species = if k.is_multiple_of(2) { Species::Particle } else { Species::Antiparticle };
        let rest = k / 2;
        ModeId { site: (rest / self.n as usize) as u16, internal: (rest % self.n as usize) as u16 + 1, species }
    }
}

/// Sparse amplitudes over occupation bit patterns; bit `k` is mode `k`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FockState {
    amps: BTreeMap<u64, Complex64>,
}

fn sign_below(occ: u64, k: usize) -> f64 {
    let mask = if k == 0 { 0 } else { (1u64 << k) - 1 };
    if (occ & mask).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

impl FockState {
    pub fn zero() -> Self {
        FockState::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(0)
    }

    pub fn basis(occupation: u64) -> Self {
        let mut amps = BTreeMap::new();
        amps.insert(occupation, Complex64::new(1.0, 0.0));
        FockState { amps }
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.amps.iter().map(|(&k, &v)| (k, v))
    }

    pub fn amplitude(&self, occupation: u64) -> Complex64 {
        self.amps.get(&occupation).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    fn add_amp(&mut self, occ: u64, a: Complex64) {
        *self.amps.entry(occ).or_default() += a;
    }

    fn pruned(mut self) -> Self {
        self.amps.retain(|_, a| a.norm() > DROP_TOLERANCE);
        self
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amps.values().map(|a| a.norm_sqr()).sum::<f64>())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps.iter().map(|(k, a)| a.conj() * other.amplitude(*k)).sum()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        FockState { amps: self.amps.iter().map(|(&k, &a)| (k, a * c)).collect() }.pruned()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &a) in &other.amps {
            out.add_amp(k, a);
        }
        out.pruned()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        (n > 0.0).then(|| self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn apply_ladder(&self, op: Ladder) -> Self {
        let mut out = FockState::zero();
        for (&occ, &a) in &self.amps {
            if let Some((next, s)) = op.act(occ) {
                out.add_amp(next, a * s);
            }
        }
        out.pruned()
    }

    pub fn create(&self, k: usize) -> Self {
        self.apply_ladder(Ladder::Create(k))
    }

    pub fn annihilate(&self, k: usize) -> Self {
        self.apply_ladder(Ladder::Annihilate(k))
    }

    /// Particle numbers present in the support.
    pub fn particle_numbers(&self) -> BTreeSet<u32> {
        self.amps.keys().map(|k| k.count_ones()).collect()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }
}

/// A single creation or annihilation operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ladder {
    Create(usize),
    Annihilate(usize),
}

impl Ladder {
    pub fn mode(self) -> usize {
        match self {
            Ladder::Create(k) | Ladder::Annihilate(k) => k,
        }
    }

    fn act(self, occ: u64) -> Option<(u64, f64)> {
        match self {
            Ladder::Create(k) => (occ & (1 << k) == 0).then(|| (occ | (1 << k), sign_below(occ, k))),
            Ladder::Annihilate(k) => (occ & (1 << k) != 0).then(|| (occ & !(1 << k), sign_below(occ, k))),
        }
    }

    fn remap(self, f: &impl Fn(usize) -> usize) -> Self {
        match self {
            Ladder::Create(k) => Ladder::Create(f(k)),
            Ladder::Annihilate(k) => Ladder::Annihilate(f(k)),
        }
    }
}

/// `Σ c · x y` over pairs of ladder operators.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BilinearOperator {
    terms: BTreeMap<(Ladder, Ladder), Complex64>,
}

impl BilinearOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, x: Ladder, y: Ladder, c: Complex64) {
        let e = self.terms.entry((x, y)).or_default();
        *e += c;
        if e.norm() <= DROP_TOLERANCE {
            self.terms.remove(&(x, y));
        }
    }

    /// `c · a†_a a_b`.
    pub fn hopping(a: usize, b: usize, c: Complex64) -> Self {
        let mut out = Self::zero();
        out.add_term(Ladder::Create(a), Ladder::Annihilate(b), c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Ladder, Ladder), &Complex64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self::zero();
        for (&(x, y), &a) in &self.terms {
            out.add_term(x, y, a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(x, y), &a) in &other.terms {
            out.add_term(x, y, a);
        }
        out
    }

    /// Largest coefficient difference.
    pub fn distance(&self, other: &Self) -> f64 {
        let keys: BTreeSet<_> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .map(|k| (self.terms.get(k).copied().unwrap_or_default() - other.terms.get(k).copied().unwrap_or_default()).norm())
            .fold(0.0, f64::max)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|(x, y)| [x.mode(), y.mode()]).collect()
    }

    pub fn apply(&self, state: &FockState) -> FockState {
        let mut out = FockState::zero();
        for (&occ, &a) in &state.amps {
            for (&(x, y), &c) in &self.terms {
                if let Some((mid, s1)) = y.act(occ) {
                    if let Some((end, s2)) = x.act(mid) {
                        out.add_amp(end, a * c * (s1 * s2));
                    }
                }
            }
        }
        out.pruned()
    }

    fn remap(&self, f: &impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero();
        for (&(x, y), &c) in &self.terms {
            out.add_term(x.remap(f), y.remap(f), c);
        }
        out
    }
}

/// Spatial binding profile `f(x − r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Profile {
    Delta,
    Box { half_width: u16 },
    Gaussian { width: f64 },
}

impl Profile {
    pub const DEFAULT: Profile = Profile::Gaussian { width: 1.5 };

    pub fn value(&self, offset: f64) -> f64 {
        match *self {
            Profile::Delta => {
                if libm::fabs(offset) < 0.5 {
                    1.0
                } else {
                    0.0
                }
            }
            Profile::Box { half_width } => {
                if libm::fabs(offset) <= half_width as f64 + 1e-12 {
                    1.0
                } else {
                    0.0
                }
            }
            Profile::Gaussian { width } => libm::exp(-offset * offset / (2.0 * width * width)),
        }
    }

    /// Finite-support profiles must fit on the lattice.
    fn fits(&self, center: f64, l: u16) -> bool {
        let (lo, hi) = (0.0, l as f64 - 1.0);
        match *self {
            Profile::Delta => center >= lo - 0.5 && center < hi + 0.5,
            Profile::Box { half_width } => center - half_width as f64 >= lo && center + half_width as f64 <= hi,
            Profile::Gaussian { .. } => center >= lo && center <= hi,
        }
    }
}

fn mode(layout: &FockLayout, site: u16, internal: u16, species: Species) -> usize {
    layout.index(ModeId { site, internal, species })
}

/// `Π_m A†_m Π_m B†_m |0⟩` with `A†_m = Σ_x f(x − r) a†_{x,m}` and `B†_m` the
/// antiparticle analogue, normalized.
pub fn build_molecule(center: f64, profile: Profile, n: u16, l: u16) -> Result<FockState, FockError> {
    let layout = FockLayout::new(n, l)?;
    if !profile.fits(center, l) {
        return Err(FockError::ProfileOutsideLattice);
    }
    let mut state = FockState::vacuum();
    for species in [Species::Particle, Species::Antiparticle] {
        for m in 1..=n {
            let mut next = FockState::zero();
            for x in 0..l {
                let w = profile.value(x as f64 - center);
                if w != 0.0 {
                    next = next.add(&state.create(mode(&layout, x, m, species)).scale(Complex64::new(w, 0.0)));
                }
            }
            state = next;
        }
    }
    state.normalized().ok_or(FockError::ZeroState)
}

/// Generator matrices `τ = λ / 2` with trace-normalized `λ`.
fn tau(n: u16, alpha: usize) -> Result<Vec<Vec<Complex64>>, FockError> {
    let basis = SunBasis::new(n)?;
    if alpha >= basis.len() {
        return Err(FockError::AlphaOutOfRange(alpha));
    }
    Ok(basis.normalized(alpha).into_iter().map(|r| r.into_iter().map(|z| z * 0.5).collect()).collect())
}

/// Local charge density `a†_x τ a_x − b†_x τᵀ b_x` at one site.
pub fn charge_density(site: u16, alpha: usize, n: u16, l: u16) -> Result<BilinearOperator, FockError> {
    let layout = FockLayout::new(n, l)?;
    let t = tau(n, alpha)?;
    let mut out = BilinearOperator::zero();
    for j in 1..=n {
        for k in 1..=n {
            let c = t[j as usize - 1][k as usize - 1];
            if c.norm() == 0.0 {
                continue;
            }
            let (aj, ak) = (mode(&layout, site, j, Species::Particle), mode(&layout, site, k, Species::Particle));
            out.add_term(Ladder::Create(aj), Ladder::Annihilate(ak), c);
            let (bj, bk) = (mode(&layout, site, j, Species::Antiparticle), mode(&layout, site, k, Species::Antiparticle));
            out.add_term(Ladder::Create(bk), Ladder::Annihilate(bj), -c);
        }
    }
    Ok(out)
}

/// `Σ_x θ(x) ρ^α(x)`.
pub fn build_gauge_generator(theta: &[f64], alpha: usize, n: u16, l: u16) -> Result<BilinearOperator, FockError> {
    if theta.len() != l as usize {
        return Err(FockError::ThetaLength { expected: l as usize, got: theta.len() });
    }
    let mut out = BilinearOperator::zero();
    for (x, &th) in theta.iter().enumerate() {
        if th != 0.0 {
            out = out.add(&charge_density(x as u16, alpha, n, l)?.scale(Complex64::new(th, 0.0)));
        }
    }
    if out.is_zero() {
        // Keep the index check even for θ ≡ 0.
        tau(n, alpha)?;
    }
    Ok(out)
}

/// First-order change `i G(θ) |vacuum⟩`, unnormalized.
pub fn gauge_response(vacuum: &FockState, theta: &[f64], alpha: usize, n: u16, l: u16) -> Result<FockState, FockError> {
    Ok(build_gauge_generator(theta, alpha, n, l)?.apply(vacuum).scale(Complex64::new(0.0, 1.0)))
}

/// `θ(x) = offset + slope · x`.
pub fn linear_theta(offset: f64, slope: f64, l: u16) -> Vec<f64> {
    (0..l).map(|x| offset + slope * x as f64).collect()
}

type Sparse = BTreeMap<(u32, u32), Complex64>;

fn ladder_product_matrix(ops: &[Ladder], s: usize) -> Sparse {
    let mut out = Sparse::new();
    for col in 0..(1u64 << s) {
        let mut occ = col;
        let mut sign = 1.0;
        let mut alive = true;
        for op in ops.iter().rev() {
            match op.act(occ) {
                Some((next, sg)) => {
                    occ = next;
                    sign *= sg;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            out.insert((occ as u32, col as u32), Complex64::new(sign, 0.0));
        }
    }
    out
}

fn operator_matrix(b: &BilinearOperator, s: usize) -> Sparse {
    let mut out = Sparse::new();
    for (&(x, y), &c) in &b.terms {
        for (k, v) in ladder_product_matrix(&[x, y], s) {
            *out.entry(k).or_default() += v * c;
        }
    }
    out
}

fn sparse_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut by_row: BTreeMap<u32, Vec<(u32, Complex64)>> = BTreeMap::new();
    for (&(r, c), &v) in b {
        by_row.entry(r).or_default().push((c, v));
    }
    let mut out = Sparse::new();
    for (&(r, k), &v) in a {
        if let Some(row) = by_row.get(&k) {
            for &(c, w) in row {
                *out.entry((r, c)).or_default() += v * w;
            }
        }
    }
    out
}

fn sparse_combine(a: &Sparse, b: &Sparse, sign: f64) -> Sparse {
    let mut out = a.clone();
    for (&k, &v) in b {
        *out.entry(k).or_default() += v * sign;
    }
    out.retain(|_, v| v.norm() > 0.0);
    out
}

fn sparse_dot(a: &Sparse, b: &Sparse) -> Complex64 {
    let (small, large, flip) = if a.len() <= b.len() { (a, b, false) } else { (b, a, true) };
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, v) in small {
        if let Some(w) = large.get(k) {
            acc += if flip { w.conj() * v } else { v.conj() * w };
        }
    }
    acc
}

fn sparse_norm(a: &Sparse) -> f64 {
    libm::sqrt(a.values().map(|v| v.norm_sqr()).sum::<f64>())
}

/// Matrices of `a†_a a_b`, `a†_a a†_b`, `a_a a_b` (`a < b` for the pairs)
/// and the identity on `s` modes.
fn bilinear_basis(s: usize) -> Vec<Sparse> {
    let mut out = Vec::new();
    for a in 0..s {
        for b in 0..s {
            out.push(ladder_product_matrix(&[Ladder::Create(a), Ladder::Annihilate(b)], s));
        }
    }
    for a in 0..s {
        for b in a + 1..s {
            out.push(ladder_product_matrix(&[Ladder::Create(a), Ladder::Create(b)], s));
            out.push(ladder_product_matrix(&[Ladder::Annihilate(a), Ladder::Annihilate(b)], s));
        }
    }
    out.push(ladder_product_matrix(&[], s));
    out
}

/// Relative Frobenius residual of the least-squares fit of `target` in the
/// span of `basis` (normal equations on the Hilbert–Schmidt Gram matrix).
fn fit_residual(basis: &[Sparse], target: &Sparse) -> f64 {
    let tn = sparse_norm(target);
    if tn == 0.0 {
        return 0.0;
    }
    let k = basis.len();
    let mut gram = alloc::vec![alloc::vec![Complex64::new(0.0, 0.0); k]; k];
    for i in 0..k {
        for j in i..k {
            let g = sparse_dot(&basis[i], &basis[j]);
            gram[i][j] = g;
            gram[j][i] = g.conj();
        }
    }
    let rhs: Vec<Complex64> = basis.iter().map(|b| sparse_dot(b, target)).collect();
    let coeffs = linalg::solve(&gram, &rhs).expect("bilinear basis is independent");
    let mut fit = Sparse::new();
    for (b, c) in basis.iter().zip(coeffs) {
        for (&key, &v) in b {
            *fit.entry(key).or_default() += v * c;
        }
    }
    sparse_norm(&sparse_combine(target, &fit, -1.0)) / tn
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatisticsReport {
    /// Modes in the union of the two supports.
    pub modes: usize,
    pub disjoint: bool,
    /// Frobenius norm of `[B1, B2]` on the restricted space.
    pub commutator_norm: f64,
    /// Relative residual of fitting `[B1, B2]` by bilinears plus a scalar.
    pub commutator_residual: f64,
    /// Same fit for `{B1, B2}`.
    pub anticommutator_residual: f64,
}

/// Closure checks on the Fock space of the union of both supports.
pub fn verify_bilinear_statistics(b1: &BilinearOperator, b2: &BilinearOperator) -> Result<StatisticsReport, FockError> {
    let (s1, s2) = (b1.support(), b2.support());
    let union: Vec<usize> = s1.union(&s2).copied().collect();
    let s = union.len();
    if s > MAX_STATISTICS_MODES {
        return Err(FockError::TooManyModes(s));
    }
    let local = |k: usize| union.binary_search(&k).expect("mode in union");
    let (m1, m2) = (operator_matrix(&b1.remap(&local), s), operator_matrix(&b2.remap(&local), s));
    let (p12, p21) = (sparse_mul(&m1, &m2), sparse_mul(&m2, &m1));
    let comm = sparse_combine(&p12, &p21, -1.0);
    let anti = sparse_combine(&p12, &p21, 1.0);
    let basis = bilinear_basis(s);
    Ok(StatisticsReport {
        modes: s,
        disjoint: s1.is_disjoint(&s2),
        commutator_norm: sparse_norm(&comm),
        commutator_residual: fit_residual(&basis, &comm),
        anticommutator_residual: fit_residual(&basis, &anti),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct OneBosonReport {
    pub alphas: Vec<usize>,
    pub response_norms: Vec<f64>,
    pub gram: Vec<Vec<Complex64>>,
    pub rank: usize,
}

/// Gram rank of the responses for each listed generator index.
pub fn verify_one_boson_per_generator(
    vacuum: &FockState,
    theta: &[f64],
    alphas: &[usize],
    n: u16,
    l: u16,
    tolerance: f64,
) -> Result<OneBosonReport, FockError> {
    let responses: Vec<FockState> =
        alphas.iter().map(|&a| gauge_response(vacuum, theta, a, n, l)).collect::<Result<_, _>>()?;
    let gram: Vec<Vec<Complex64>> = responses.iter().map(|a| responses.iter().map(|b| a.inner(b)).collect()).collect();
    Ok(OneBosonReport {
        alphas: alphas.to_vec(),
        response_norms: responses.iter().map(FockState::norm).collect(),
        rank: linalg::psd_rank(&gram, tolerance),
        gram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_signs() {
        let s = FockState::vacuum().create(3).create(1);
        assert_eq!(s.amplitude(0b1010), Complex64::new(1.0, 0.0));
        let t = FockState::vacuum().create(1).create(3);
        assert_eq!(t.amplitude(0b1010), Complex64::new(-1.0, 0.0));
        assert!(s.create(3).is_empty());
    }

    #[test]
    fn delta_molecule_is_one_basis_state() {
        let m = build_molecule(1.0, Profile::Delta, 1, 4).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.particle_numbers().into_iter().collect::<Vec<_>>(), [2]);
        assert_eq!(build_molecule(9.0, Profile::Delta, 1, 4), Err(FockError::ProfileOutsideLattice));
    }

    #[test]
    fn global_rotation_annihilates_molecule() {
        let m = build_molecule(1.5, Profile::DEFAULT, 2, 4).unwrap();
        assert_eq!(m.particle_numbers().into_iter().collect::<Vec<_>>(), [4]);
        for alpha in 0..3 {
            let r = gauge_response(&m, &[0.7; 4], alpha, 2, 4).unwrap();
            assert!(r.norm() < 1e-12);
        }
    }

    #[test]
    fn gradient_response_is_linear() {
        let m = build_molecule(1.5, Profile::DEFAULT, 2, 4).unwrap();
        let r1 = gauge_response(&m, &linear_theta(0.0, 0.3, 4), 0, 2, 4).unwrap();
        let r2 = gauge_response(&m, &linear_theta(0.0, 0.6, 4), 0, 2, 4).unwrap();
        assert!(r1.norm() > 1e-3);
        assert!(libm::fabs(r2.norm() / r1.norm() - 2.0) < 1e-10);
        let shifted = gauge_response(&m, &linear_theta(2.0, 0.3, 4), 0, 2, 4).unwrap();
        assert!(shifted.distance(&r1) < 1e-12);
    }

    #[test]
    fn statistics_and_rank() {
        let a = charge_density(0, 0, 2, 4).unwrap();
        let b = charge_density(1, 1, 2, 4).unwrap();
        let disjoint = verify_bilinear_statistics(&a, &b).unwrap();
        assert!(disjoint.disjoint && disjoint.commutator_norm == 0.0);
        let c = charge_density(0, 1, 2, 4).unwrap().add(&BilinearOperator::hopping(0, 5, Complex64::new(0.5, 0.2)));
        let overlap = verify_bilinear_statistics(&a, &c).unwrap();
        assert!(overlap.commutator_norm > 0.0);
        assert!(overlap.commutator_residual < 1e-12);
        assert!(overlap.anticommutator_residual > 1e-3);
        let m = build_molecule(1.5, Profile::DEFAULT, 2, 4).unwrap();
        let theta = linear_theta(0.0, 0.25, 4);
        assert_eq!(verify_one_boson_per_generator(&m, &theta, &[0, 1, 2], 2, 4, 1e-8).unwrap().rank, 3);
        assert_eq!(verify_one_boson_per_generator(&m, &theta, &[1, 1], 2, 4, 1e-8).unwrap().rank, 1);
    }
}
