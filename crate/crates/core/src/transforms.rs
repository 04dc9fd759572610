//! Finite group actions: translations and SL(2) maps on the alphabet,
//! representation matrices on polynomial bases, numeric generator flows and
//! the space-time chart built from the translation directions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::linalg;
use crate::lorentz;
use crate::symcore::{Coefficient, GaussianRational, LinearVariableMap, Monomial, SymError, VariableId, WeylOperator};

type Op = WeylOperator;

/// Default RK4 resolution.
pub const DEFAULT_STEPS_PER_UNIT: usize = 1000;

#[derive(Clone, Debug, PartialEq)]
pub enum TransformError {
    Sym(SymError),
    /// Image of this basis element is not in the span of the basis.
    NotClosed(usize),
    DependentBasis,
    NotFirstOrder,
    NotRealField,
    DegeneratePoint,
    Dimension { expected: usize, got: usize },
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::Sym(e) => write!(f, "{e}"),
            TransformError::NotClosed(i) => write!(f, "image of basis element {i} leaves the span"),
            TransformError::DependentBasis => f.write_str("basis polynomials are linearly dependent"),
            TransformError::NotFirstOrder => f.write_str("generator is not first order"),
            TransformError::NotRealField => f.write_str("generator does not induce a real vector field"),
            TransformError::DegeneratePoint => f.write_str("translation directions are dependent at this point"),
            TransformError::Dimension { expected, got } => write!(f, "expected {expected} coordinates, got {got}"),
        }
    }
}

impl From<SymError> for TransformError {
    fn from(e: SymError) -> Self {
        TransformError::Sym(e)
    }
}

fn g(re: GaussianRational, im_sign: i64) -> GaussianRational {
    re * GaussianRational::from_parts(0, 1, im_sign, 1)
}

/// Closed-form translation by `x = (x0, x1, x2, x3)`: block-1 variables are
/// fixed and each block-2 variable is shifted by conjugated block-1
/// variables.
pub fn translation_map(x: &[GaussianRational; 4], n: u16, set: u16) -> Result<LinearVariableMap, SymError> {
    let one = GaussianRational::from_integer(1);
    let mut images = Vec::new();
    for i in 1..=n {
        let (u1, v1) = (VariableId::u(1, i, set), VariableId::v(1, i, set));
        let (u2, v2) = (VariableId::u(2, i, set), VariableId::v(2, i, set));
        images.push((u1, alloc::vec![(u1, one.clone())]));
        images.push((v1, alloc::vec![(v1, one.clone())]));
        let [x0, x1, x2, x3] = x.clone();
        images.push((
            u2,
            alloc::vec![
                (u2, one.clone()),
                (v1.bar(), g(x0.clone(), -1) + g(x3.clone(), -1)),
                (u1.bar(), g(x1.clone(), 1) - x2.clone()),
            ],
        ));
        images.push((
            v2,
            alloc::vec![
                (v2, one.clone()),
                (u1.bar(), g(x0, 1) + g(x3, -1)),
                (v1.bar(), g(x1, -1) - x2),
            ],
        ));
    }
    LinearVariableMap::from_images(images)
}

/// The same `2×2` matrix acting on `(u, v)` of every block and internal
/// index: `(u, v)ᵀ ↦ a (u, v)ᵀ`.
pub fn lorentz_map<C: Coefficient>(a: &[Vec<C>], n: u16, set: u16) -> Result<LinearVariableMap<C>, SymError> {
    let mut images = Vec::new();
    for b in 1..=2u8 {
        for i in 1..=n {
            let (u, v) = (VariableId::u(b, i, set), VariableId::v(b, i, set));
            images.push((u, alloc::vec![(u, a[0][0].clone()), (v, a[0][1].clone())]));
            images.push((v, alloc::vec![(u, a[1][0].clone()), (v, a[1][1].clone())]));
        }
    }
    LinearVariableMap::from_images(images)
}

/// Matrix `R` with `map(basis[i]) = Σ_j basis[j] · R[j][i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationMatrix<C: Coefficient = GaussianRational> {
    pub basis: Vec<WeylOperator<C>>,
    pub matrix: Vec<Vec<C>>,
}

pub fn representation_matrix<C: Coefficient>(
    basis: &[WeylOperator<C>],
    map: &LinearVariableMap<C>,
) -> Result<RepresentationMatrix<C>, TransformError> {
    let images: Vec<WeylOperator<C>> = basis.iter().map(|p| map.substitute(p)).collect::<Result<_, _>>()?;
    let mut monomials: Vec<Monomial> = basis.iter().chain(&images).flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monomials.sort();
    monomials.dedup();
    let coords = |p: &WeylOperator<C>| -> Vec<C> { monomials.iter().map(|m| p.coefficient(m)).collect() };
    let columns: Vec<Vec<C>> = basis.iter().map(coords).collect();
    let a: Vec<Vec<C>> = (0..monomials.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    if linalg::rank(&a) < basis.len() {
        return Err(TransformError::DependentBasis);
    }
    let d = basis.len();
    let mut matrix = alloc::vec![alloc::vec![C::zero(); d]; d];
    for (i, image) in images.iter().enumerate() {
        let x = linalg::solve(&a, &coords(image)).ok_or(TransformError::NotClosed(i))?;
        for (j, xj) in x.into_iter().enumerate() {
            matrix[j][i] = xj;
        }
    }
    Ok(RepresentationMatrix { basis: basis.to_vec(), matrix })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomomorphismCheck {
    pub max_error: f64,
    pub pass: bool,
}

/// Compare `R(BA)` against `R(B) R(A)` entrywise, where `from_matrix`
/// builds each substitution on `vars`.
pub fn verify_homomorphism(
    basis: &[WeylOperator<Complex64>],
    vars: &[VariableId],
    a: &[Vec<Complex64>],
    b: &[Vec<Complex64>],
    tolerance: f64,
) -> Result<HomomorphismCheck, TransformError> {
    let rep = |m: &[Vec<Complex64>]| -> Result<Vec<Vec<Complex64>>, TransformError> {
        Ok(representation_matrix(basis, &LinearVariableMap::from_matrix(vars, m)?)?.matrix)
    };
    let ba = linalg::mat_mul(b, a);
    let lhs = rep(&ba)?;
    let rhs = linalg::mat_mul(&rep(b)?, &rep(a)?);
    let max_error = lhs.iter().flatten().zip(rhs.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    Ok(HomomorphismCheck { max_error, pass: max_error < tolerance })
}

/// `e^{iφ} [[a, −b̄], [b, ā]]` with `a = cos θ e^{iα}`, `b = sin θ e^{iβ}`.
pub fn unitary2(theta: f64, alpha: f64, beta: f64, phi: f64) -> Vec<Vec<Complex64>> {
    let a = Complex64::from_polar(libm::cos(theta), alpha);
    let b = Complex64::from_polar(libm::sin(theta), beta);
    let p = Complex64::from_polar(1.0, phi);
    alloc::vec![alloc::vec![p * a, -p * b.conj()], alloc::vec![p * b, p * a.conj()]]
}

/// Real coordinates `(Re z, Im z)` for each unconjugated variable, in
/// `VariableId` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealLayout {
    pub vars: Vec<VariableId>,
}

impl RealLayout {
    pub fn for_set(n: u16, set: u16) -> Self {
        RealLayout { vars: lorentz::set_variables(n, set) }
    }

    pub fn dim(&self) -> usize {
        2 * self.vars.len()
    }

    fn index(&self, v: VariableId) -> Option<usize> {
        self.vars.binary_search(&v.base()).ok()
    }

    fn value(&self, coords: &[f64], v: VariableId) -> Complex64 {
        let k = self.index(v).expect("variable in layout");
        let z = Complex64::new(coords[2 * k], coords[2 * k + 1]);
        if v.conjugated {
            z.conj()
        } else {
            z
        }
    }

    pub fn point(&self, coords: &[f64]) -> BTreeMap<VariableId, Complex64> {
        self.vars.iter().map(|&v| (v, self.value(coords, v))).collect()
    }

    fn check(&self, coords: &[f64]) -> Result<(), TransformError> {
        if coords.len() == self.dim() {
            Ok(())
        } else {
            Err(TransformError::Dimension { expected: self.dim(), got: coords.len() })
        }
    }

    /// Point image `z_v ↦ Σ c · z_w` under the substitution `map`.
    pub fn map_point<C: Coefficient>(&self, map: &LinearVariableMap<C>, coords: &[f64]) -> Result<Vec<f64>, TransformError> {
        self.check(coords)?;
        let mut out = alloc::vec![0.0; self.dim()];
        for (k, &v) in self.vars.iter().enumerate() {
            let z: Complex64 = map.image(v).iter().map(|(w, c)| c.to_complex() * self.value(coords, *w)).sum();
            out[2 * k] = z.re;
            out[2 * k + 1] = z.im;
        }
        Ok(out)
    }
}

/// The real vector field `ż_b = (iG) z_b` of a first-order generator `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealField {
    layout: RealLayout,
    /// `(target index, source variable or constant, coefficient)`.
    rows: Vec<(usize, Option<VariableId>, Complex64)>,
}

impl RealField {
    pub fn new(generator: &Op, layout: &RealLayout) -> Result<Self, TransformError> {
        if !generator.is_first_order() || generator.terms().any(|(m, _)| m.var_degree() > 1) {
            return Err(TransformError::NotFirstOrder);
        }
        let ig = generator.scale(&GaussianRational::i());
        if ig.hermitian_counterpart() != ig {
            return Err(TransformError::NotRealField);
        }
        let mut rows = Vec::new();
        for (m, c) in ig.terms() {
            let d = m.derivs()[0].0;
            if d.conjugated {
                continue;
            }
            let target = layout.index(d).ok_or(SymError::Unassigned(d))?;
            let source = m.vars().first().map(|&(v, _)| v);
            if let Some(v) = source {
                layout.index(v).ok_or(SymError::Unassigned(v))?;
            }
            rows.push((target, source, c.to_complex64()));
        }
        Ok(RealField { layout: layout.clone(), rows })
    }

    pub fn eval(&self, coords: &[f64]) -> Vec<f64> {
        let mut out = alloc::vec![0.0; self.layout.dim()];
        for &(t, src, c) in &self.rows {
            let z = match src {
                Some(v) => c * self.layout.value(coords, v),
                None => c,
            };
            out[2 * t] += z.re;
            out[2 * t + 1] += z.im;
        }
        out
    }
}

fn axpy(y: &[f64], a: f64, x: &[f64]) -> Vec<f64> {
    y.iter().zip(x).map(|(yi, xi)| yi + a * xi).collect()
}

/// Fixed-step RK4 integration of the field of `i·generator` over `amount`.
pub fn integrate_flow(
    generator: &Op,
    amount: f64,
    start: &[f64],
    layout: &RealLayout,
    steps: usize,
) -> Result<Vec<f64>, TransformError> {
    layout.check(start)?;
    let field = RealField::new(generator, layout)?;
    if steps == 0 || amount == 0.0 {
        return Ok(start.to_vec());
    }
    let h = amount / steps as f64;
    let mut y = start.to_vec();
    for _ in 0..steps {
        let k1 = field.eval(&y);
        let k2 = field.eval(&axpy(&y, h / 2.0, &k1));
        let k3 = field.eval(&axpy(&y, h / 2.0, &k2));
        let k4 = field.eval(&axpy(&y, h, &k3));
        for i in 0..y.len() {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    Ok(y)
}

/// Step count for `amount` at the default resolution.
pub fn default_steps(amount: f64) -> usize {
    let s = libm::ceil(libm::fabs(amount) * DEFAULT_STEPS_PER_UNIT as f64) as usize;
    s.max(1)
}

/// Four translation directions at a point and an orthonormal basis of their
/// Euclidean orthogonal complement.
#[derive(Clone, Debug, PartialEq)]
pub struct GridChart {
    pub point: Vec<f64>,
    pub directions: Vec<Vec<f64>>,
    pub complement: Vec<Vec<f64>>,
}

impl GridChart {
    /// Largest of `|⟨c, d⟩| / |d|` over complement vectors `c` and
    /// directions `d`, and `|⟨c_i, c_j⟩ − δ_ij|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let mut worst: f64 = 0.0;
        for c in &self.complement {
            for d in &self.directions {
                worst = worst.max(libm::fabs(dot(c, d)) / libm::sqrt(dot(d, d)));
            }
        }
        for (i, a) in self.complement.iter().enumerate() {
            for (j, b) in self.complement.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max(libm::fabs(dot(a, b) - target));
            }
        }
        worst
    }
}

/// Relative tolerance below which a direction counts as dependent.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

pub fn grid_chart(point: &[f64], translations: &[Op; 4], layout: &RealLayout) -> Result<GridChart, TransformError> {
    layout.check(point)?;
    let directions: Vec<Vec<f64>> =
        translations.iter().map(|p| Ok(RealField::new(p, layout)?.eval(point))).collect::<Result<_, TransformError>>()?;
    let (_, complement) =
        linalg::orthonormal_complement(&directions, layout.dim(), DEGENERACY_TOLERANCE).ok_or(TransformError::DegeneratePoint)?;
    Ok(GridChart { point: point.to_vec(), directions, complement })
}
