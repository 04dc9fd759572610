//! SU(n) acting on the oscillator alphabet, and the two-variable U(2)
//! example with its angular-momentum labels.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::lorentz::{self, GeneratorSet, LorentzError, Variant};
use crate::report::{CommutationEntry, CommutationReport};
use crate::symcore::{GaussianRational, Kind, Monomial, SymError, VariableId, WeylOperator};

type Op = WeylOperator;
type Matrix = Vec<Vec<GaussianRational>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InternalError {
    InvalidDimension(u16),
    NoSets,
    Lorentz(LorentzError),
}

impl fmt::Display for InternalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InternalError::InvalidDimension(n) => write!(f, "SU(n) needs n >= 2, got {n}"),
            InternalError::NoSets => f.write_str("at least one variable set is required"),
            InternalError::Lorentz(e) => write!(f, "{e}"),
        }
    }
}

impl From<LorentzError> for InternalError {
    fn from(e: LorentzError) -> Self {
        InternalError::Lorentz(e)
    }
}

/// Role of one generator matrix in the generalized Gell-Mann basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisRole {
    Symmetric(u16, u16),
    Antisymmetric(u16, u16),
    /// `diag(1, …, 1, −l, 0, …)` with `l` leading ones.
    Diagonal(u16),
}

/// Generalized Gell-Mann matrices kept in a rational "shape" form.
///
/// The trace-normalized matrix is `sqrt(scale_sq) · shape`; for the
/// off-diagonal matrices `scale_sq = 1`, for the `l`-th diagonal one it is
/// `2 / (l (l + 1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct SunBasis {
    pub n: u16,
    pub roles: Vec<BasisRole>,
    pub shapes: Vec<Matrix>,
    pub scale_sq: Vec<BigRational>,
}

fn zero_matrix(n: usize) -> Matrix {
    alloc::vec![alloc::vec![GaussianRational::zero(); n]; n]
}

impl SunBasis {
    pub fn new(n: u16) -> Result<Self, InternalError> {
        if n < 2 {
            return Err(InternalError::InvalidDimension(n));
        }
        let d = n as usize;
        let mut roles = Vec::new();
        let mut shapes = Vec::new();
        let mut scale_sq = Vec::new();
        for k in 1..d {
            for j in 0..k {
                let mut s = zero_matrix(d);
                s[j][k] = GaussianRational::one();
                s[k][j] = GaussianRational::one();
                roles.push(BasisRole::Symmetric(j as u16 + 1, k as u16 + 1));
                shapes.push(s);
                scale_sq.push(BigRational::one());
                let mut a = zero_matrix(d);
                a[j][k] = GaussianRational::from_parts(0, 1, -1, 1);
                a[k][j] = GaussianRational::i();
                roles.push(BasisRole::Antisymmetric(j as u16 + 1, k as u16 + 1));
                shapes.push(a);
                scale_sq.push(BigRational::one());
            }
            let l = k as i64;
            let mut g = zero_matrix(d);
            for (t, row) in g.iter_mut().enumerate().take(k) {
                row[t] = GaussianRational::one();
            }
            g[k][k] = GaussianRational::from_integer(-l);
            roles.push(BasisRole::Diagonal(k as u16));
            shapes.push(g);
            scale_sq.push(BigRational::new(2.into(), (l * (l + 1)).into()));
        }
        Ok(SunBasis { n, roles, shapes, scale_sq })
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn diagonal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| matches!(self.roles[a], BasisRole::Diagonal(_))).collect()
    }

    pub fn scale(&self, alpha: usize) -> f64 {
        libm::sqrt(self.scale_sq[alpha].to_f64().unwrap_or(f64::NAN))
    }

    /// Trace-normalized matrix in floating point.
    pub fn normalized(&self, alpha: usize) -> Vec<Vec<Complex64>> {
        let s = self.scale(alpha);
        self.shapes[alpha].iter().map(|row| row.iter().map(|c| c.to_complex64() * s).collect()).collect()
    }

    /// `tr(shape_a · shape_b)`.
    pub fn trace_product(&self, a: usize, b: usize) -> GaussianRational {
        trace(&mat_mul(&self.shapes[a], &self.shapes[b]))
    }

    /// Coordinates of a traceless matrix in the shape basis.
    pub fn expand(&self, m: &Matrix) -> Vec<GaussianRational> {
        (0..self.len())
            .map(|g| {
                let norm = self.trace_product(g, g).recip().expect("basis matrices are nonzero");
                trace(&mat_mul(&self.shapes[g], m)) * norm
            })
            .collect()
    }

    /// Shape-basis structure constants: `[s_a, s_b] = i Σ_c f[a][b][c] s_c`.
    pub fn shape_structure_constants(&self) -> Vec<Vec<Vec<GaussianRational>>> {
        let minus_i = GaussianRational::from_parts(0, 1, -1, 1);
        (0..self.len())
            .map(|a| {
                (0..self.len())
                    .map(|b| {
                        let c = commutator(&self.shapes[a], &self.shapes[b]);
                        self.expand(&c).into_iter().map(|x| x * minus_i.clone()).collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Structure constants of the trace-normalized basis.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<f64>>> {
        let f = self.shape_structure_constants();
        (0..self.len())
            .map(|a| {
                (0..self.len())
                    .map(|b| {
                        (0..self.len())
                            .map(|c| f[a][b][c].to_complex64().re * self.scale(a) * self.scale(b) / self.scale(c))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn label(&self, alpha: usize) -> String {
        format!("T{}", alpha + 1)
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    crate::linalg::mat_mul(a, b)
}

fn trace(m: &Matrix) -> GaussianRational {
    (0..m.len()).fold(GaussianRational::zero(), |acc, k| acc + m[k][k].clone())
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    ab.into_iter()
        .zip(ba)
        .map(|(r, s)| r.into_iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

/// Symbol classes carrying the fundamental representation: `(kind, block, conj)`.
const FUNDAMENTAL: [(Kind, u8, bool); 4] =
    [(Kind::U, 1, false), (Kind::V, 1, false), (Kind::U, 2, true), (Kind::V, 2, true)];
/// Symbol classes carrying the conjugate representation.
const CONJUGATE: [(Kind, u8, bool); 4] =
    [(Kind::U, 2, false), (Kind::V, 2, false), (Kind::U, 1, true), (Kind::V, 1, true)];

fn class_names(classes: &[(Kind, u8, bool)]) -> String {
    let names: Vec<String> = classes
        .iter()
        .map(|&(kind, block, conj)| format!("{}{}{block}", if conj { "conj " } else { "" }, kind.letter()))
        .collect();
    names.join(", ")
}

/// Which symbol classes carry the fundamental and conjugate representations.
pub fn representation_assignment() -> String {
    format!("fundamental: {}; conjugate: {}", class_names(&FUNDAMENTAL), class_names(&CONJUGATE))
}

/// Operator realizing the matrix `m` on one variable set:
/// `Σ x_j m_jk ∂x_k` over fundamental classes minus `Σ y_k m_jk ∂y_j` over
/// conjugate classes.
pub fn realize(m: &Matrix, n: u16, set: u16) -> Op {
    let mut out = Op::zero();
    let var = |(kind, block, conj): (Kind, u8, bool), i: usize| VariableId::osc(kind, block, i as u16 + 1, set).with_conj(conj);
    for j in 0..n as usize {
        for k in 0..n as usize {
            let c = &m[j][k];
            if c.is_zero() {
                continue;
            }
            for class in FUNDAMENTAL {
                out.add_term(Monomial::new(alloc::vec![(var(class, j), 1)], alloc::vec![(var(class, k), 1)]), c.clone());
            }
            for class in CONJUGATE {
                out.add_term(Monomial::new(alloc::vec![(var(class, k), 1)], alloc::vec![(var(class, j), 1)]), -c.clone());
            }
        }
    }
    out
}

/// SU(n) generators (shape normalization) summed over the listed sets.
#[derive(Clone, Debug, PartialEq)]
pub struct SunGeneratorSet {
    pub basis: SunBasis,
    pub sets: Vec<u16>,
    pub ops: Vec<Op>,
}

impl SunGeneratorSet {
    pub fn n(&self) -> u16 {
        self.basis.n
    }

    /// Trace-normalized generator with float coefficients.
    pub fn normalized_float(&self, alpha: usize) -> WeylOperator<Complex64> {
        self.ops[alpha].to_float().scale(&Complex64::new(self.basis.scale(alpha), 0.0))
    }
}

pub fn build_sun_generators(n: u16, sets: &[u16]) -> Result<SunGeneratorSet, InternalError> {
    let basis = SunBasis::new(n)?;
    if sets.is_empty() {
        return Err(InternalError::NoSets);
    }
    let ops = basis.shapes.iter().map(|m| sets.iter().map(|&s| realize(m, n, s)).sum()).collect();
    Ok(SunGeneratorSet { basis, sets: sets.to_vec(), ops })
}

/// `[T_a, T_b] = i Σ f_abc T_c` for all `a < b`, compared exactly against the
/// matrix-level constants.
pub fn verify_structure_constants(gens: &SunGeneratorSet) -> CommutationReport {
    let f = gens.basis.shape_structure_constants();
    let mut entries = Vec::new();
    let d = gens.basis.len();
    for a in 0..d {
        for b in a + 1..d {
            let mut expected = Op::zero();
            for (c, op) in gens.ops.iter().enumerate() {
                if !f[a][b][c].is_zero() {
                    expected += op.scale(&(GaussianRational::i() * f[a][b][c].clone()));
                }
            }
            let label = format!("[{},{}]", gens.basis.label(a), gens.basis.label(b));
            entries.push(CommutationEntry::new(label, "A-6", expected, gens.ops[a].commutator(&gens.ops[b])));
        }
    }
    CommutationReport::from_entries(entries)
}

/// `Σ_j u1j v2j` on one set.
pub fn invariant_pairing(n: u16, set: u16) -> Op {
    (1..=n).map(|j| Op::var(VariableId::u(1, j, set)).multiply(&Op::var(VariableId::v(2, j, set)))).sum()
}

/// `[O, T] = 0` and `[G, T] = 0` for the corrected Lorentz generators.
pub fn verify_internal_invariance(n: u16) -> Result<CommutationReport, InternalError> {
    let sun = build_sun_generators(n, &[1])?;
    let lorentz = GeneratorSet::build(n, Variant::Corrected)?;
    let o = lorentz::build_single_particle_operator(n)?;
    let mut entries = Vec::new();
    for (alpha, t) in sun.ops.iter().enumerate() {
        let tl = sun.basis.label(alpha);
        entries.push(CommutationEntry::new(format!("[O,{tl}]"), "A-6", Op::zero(), o.commutator(t)));
        for (g, op) in lorentz.iter() {
            entries.push(CommutationEntry::new(format!("[{g},{tl}]"), "A-6", Op::zero(), op.commutator(t)));
        }
    }
    Ok(CommutationReport::from_entries(entries))
}

/// Eigenvalues of the diagonal generators when `state` is a simultaneous
/// eigenvector; `None` otherwise.
pub fn charge_labels(state: &Op, gens: &SunGeneratorSet) -> Result<Option<Vec<GaussianRational>>, SymError> {
    let mut out = Vec::new();
    for alpha in gens.basis.diagonal_indices() {
        let image = gens.ops[alpha].apply(state)?;
        match eigenvalue(state, &image) {
            Some(c) => out.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// `c` with `image = c · state`, if any.
pub fn eigenvalue(state: &Op, image: &Op) -> Option<GaussianRational> {
    let (m, c0) = state.terms().next()?;
    let c = image.coefficient(m) * c0.recip()?;
    (state.scale(&c) == *image).then_some(c)
}

/// How the two-variable generators were completed with their barred parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completion {
    /// Add the counterpart.
    Plus,
    /// Subtract the counterpart.
    Minus,
}

/// The U(2) example: the two-variable operator, its SU(2) generators and
/// the degree-2 basis with expected `(L², L_z)` labels.
#[derive(Clone, Debug, PartialEq)]
pub struct U2Example {
    pub variant: Variant,
    pub ly_sign_flipped: bool,
    pub completion: Completion,
    pub operator: Op,
    pub lx: Op,
    pub ly: Op,
    pub lz: Op,
    pub basis: [Op; 3],
    pub labels: [(i64, i64); 3],
}

fn eu(i: u16) -> VariableId {
    VariableId::example(i)
}

fn half_pair(c: GaussianRational, a: (u16, u16), sign: i64, b: (u16, u16)) -> Op {
    Op::var_deriv(c.clone(), eu(a.0), eu(a.1)) + Op::var_deriv(c * GaussianRational::from_integer(sign), eu(b.0), eu(b.1))
}

fn example_generators(flip_ly: bool, completion: Completion) -> [Op; 3] {
    let half = GaussianRational::ratio(1, 2);
    let ly_pref = GaussianRational::from_parts(0, 1, if flip_ly { 1 } else { -1 }, 2);
    let holo = [
        half_pair(half.clone(), (2, 1), 1, (1, 2)),
        half_pair(ly_pref, (2, 1), -1, (1, 2)),
        half_pair(half, (1, 1), -1, (2, 2)),
    ];
    holo.map(|h| match completion {
        Completion::Plus => h.hermitian_completion(),
        Completion::Minus => h.real_completion(),
    })
}

fn example_operator() -> Op {
    (1..=2)
        .map(|i| Op::term(GaussianRational::one(), Monomial::new(Vec::new(), alloc::vec![(eu(i), 1), (eu(i).bar(), 1)])))
        .sum()
}

fn su2_closure_holds(l: &[Op; 3]) -> bool {
    let i = GaussianRational::i();
    (0..3).all(|k| l[k].commutator(&l[(k + 1) % 3]) == l[(k + 2) % 3].scale(&i))
}

/// Build the example; the corrected variant is the unique choice of `L_y`
/// sign and completion satisfying su(2) closure and invariance of the
/// two-variable operator.
pub fn build_u2_example(variant: Variant) -> U2Example {
    let operator = example_operator();
    let (flip, completion) = match variant {
        Variant::AsPrinted => (false, Completion::Plus),
        Variant::Corrected => {
            let found: Vec<(bool, Completion)> = [false, true]
                .into_iter()
                .flat_map(|f| [Completion::Plus, Completion::Minus].map(|c| (f, c)))
                .filter(|&(f, c)| {
                    let l = example_generators(f, c);
                    su2_closure_holds(&l) && l.iter().all(|g| operator.commutator(g).is_zero())
                })
                .collect();
            assert_eq!(found.len(), 1, "exactly one completion of the example generators closes");
            found[0]
        }
    };
    let [lx, ly, lz] = example_generators(flip, completion);
    let v = |i| Op::var(eu(i));
    U2Example {
        variant,
        ly_sign_flipped: flip,
        completion,
        operator,
        lx,
        ly,
        lz,
        basis: [v(1).multiply(&v(1)), v(1).multiply(&v(2)), v(2).multiply(&v(2))],
        labels: [(2, 1), (2, 0), (2, -1)],
    }
}

impl U2Example {
    pub fn casimir(&self) -> Op {
        [&self.lx, &self.ly, &self.lz].iter().map(|l| l.multiply(l)).sum()
    }

    /// Closure, invariance of the operator and the eigenvalue labels.
    pub fn verify(&self) -> CommutationReport {
        let mut entries = Vec::new();
        let names = ["Lx", "Ly", "Lz"];
        let l = [&self.lx, &self.ly, &self.lz];
        for k in 0..3 {
            let (a, b, c) = (k, (k + 1) % 3, (k + 2) % 3);
            entries.push(CommutationEntry::new(
                format!("[{},{}]", names[a], names[b]),
                "(6)",
                l[c].scale(&GaussianRational::i()),
                l[a].commutator(l[b]),
            ));
            entries.push(CommutationEntry::new(format!("[O,{}]", names[k]), "(2)", Op::zero(), self.operator.commutator(l[k])));
        }
        let casimir = self.casimir();
        for (k, state) in self.basis.iter().enumerate() {
            let (l2, m) = self.labels[k];
            let lz = self.lz.apply(state).expect("basis states are polynomials");
            entries.push(CommutationEntry::new(
                format!("Lz|{}>", k + 1),
                "(7)",
                state.scale(&GaussianRational::from_integer(m)),
                lz,
            ));
            let l2v = casimir.apply(state).expect("basis states are polynomials");
            entries.push(CommutationEntry::new(
                format!("L2|{}>", k + 1),
                "(7)",
                state.scale(&GaussianRational::from_integer(l2)),
                l2v,
            ));
        }
        CommutationReport::from_entries(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_structure_constants_are_twice_levi_civita() {
        let b = SunBasis::new(2).unwrap();
        let f = b.shape_structure_constants();
        assert_eq!(f[0][1][2], GaussianRational::from_integer(2));
        assert_eq!(f[1][2][0], GaussianRational::from_integer(2));
        assert_eq!(f[1][0][2], GaussianRational::from_integer(-2));
        for a in 0..3 {
            for c in 0..3 {
                assert!(b.trace_product(a, c) == GaussianRational::from_integer(if a == c { 2 } else { 0 }));
            }
        }
    }

    #[test]
    fn generators_close_and_fix_pairing() {
        for n in 2..=3 {
            let g = build_sun_generators(n, &[1]).unwrap();
            assert_eq!(g.ops.len(), (n * n - 1) as usize);
            assert!(verify_structure_constants(&g).all_pass());
            let pair = invariant_pairing(n, 1);
            for t in &g.ops {
                assert!(t.apply(&pair).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn charges() {
        let g = build_sun_generators(2, &[1]).unwrap();
        let u = Op::var(VariableId::u(1, 1, 1));
        assert_eq!(charge_labels(&u, &g).unwrap(), Some(alloc::vec![GaussianRational::one()]));
        assert_eq!(charge_labels(&invariant_pairing(2, 1), &g).unwrap(), Some(alloc::vec![GaussianRational::zero()]));
        let mixed = u + Op::var(VariableId::u(1, 2, 1));
        assert_eq!(charge_labels(&mixed, &g).unwrap(), None);
    }

    #[test]
    fn invariance_and_negative_control() {
        assert!(verify_internal_invariance(2).unwrap().all_pass());
        let g = build_sun_generators(2, &[1]).unwrap();
        let u = Op::var(VariableId::u(1, 1, 1));
        assert!(g.ops.iter().any(|t| !u.commutator(t).is_zero()));
    }

    #[test]
    fn example_labels_and_closure() {
        let ex = build_u2_example(Variant::Corrected);
        assert!(ex.ly_sign_flipped);
        assert_eq!(ex.completion, Completion::Minus);
        assert!(ex.verify().all_pass(), "{:?}", ex.verify().failing_labels());
        let printed = build_u2_example(Variant::AsPrinted).verify();
        assert!(!printed.all_pass());
        assert!(printed.get("Lz|1>").unwrap().pass);
    }
}
