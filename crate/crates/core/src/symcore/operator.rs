//! Normal-ordered polynomial differential operators (the Weyl algebra).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::coefficient::{Coefficient, GaussianRational};
use super::variable::{Family, VariableId};
use super::SymError;

/// Sorted `(variable, exponent)` list with no zero exponents.
pub type Powers = Vec<(VariableId, u32)>;

/// `x^a ∂^b`: multiplication symbols to the left of derivative symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    vars: Powers,
    derivs: Powers,
}

fn normalize(mut p: Powers) -> Powers {
    p.sort_by_key(|a| a.0);
    let mut out: Powers = Vec::with_capacity(p.len());
    for (v, e) in p {
        match out.last_mut() {
            Some(last) if last.0 == v => last.1 += e,
            _ => out.push((v, e)),
        }
    }
    out.retain(|&(_, e)| e != 0);
    out
}

fn merge(a: &[(VariableId, u32)], b: &[(VariableId, u32)]) -> Powers {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn exponent(p: &[(VariableId, u32)], v: VariableId) -> u32 {
    p.binary_search_by(|probe| probe.0.cmp(&v)).map(|k| p[k].1).unwrap_or(0)
}

impl Monomial {
    pub fn new(vars: Powers, derivs: Powers) -> Self {
        Monomial { vars: normalize(vars), derivs: normalize(derivs) }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        Monomial { vars: alloc::vec![(v, 1)], derivs: Vec::new() }
    }

    pub fn deriv(v: VariableId) -> Self {
        Monomial { vars: Vec::new(), derivs: alloc::vec![(v, 1)] }
    }

    pub fn vars(&self) -> &[(VariableId, u32)] {
        &self.vars
    }

    pub fn derivs(&self) -> &[(VariableId, u32)] {
        &self.derivs
    }

    pub fn var_degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    pub fn deriv_degree(&self) -> u32 {
        self.derivs.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.derivs.is_empty()
    }

    pub fn var_exponent(&self, v: VariableId) -> u32 {
        exponent(&self.vars, v)
    }

    pub fn deriv_exponent(&self, v: VariableId) -> u32 {
        exponent(&self.derivs, v)
    }

    /// Flip the conjugation flag of every symbol.
    pub fn conjugate_flags(&self) -> Monomial {
        let flip = |p: &Powers| p.iter().map(|&(v, e)| (v.bar(), e)).collect::<Vec<_>>();
        Monomial::new(flip(&self.vars), flip(&self.derivs))
    }

    pub fn relabel(&self, f: &impl Fn(VariableId) -> VariableId) -> Monomial {
        let map = |p: &Powers| p.iter().map(|&(v, e)| (f(v), e)).collect::<Vec<_>>();
        Monomial::new(map(&self.vars), map(&self.derivs))
    }

    fn symbols(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.vars.iter().chain(self.derivs.iter()).map(|&(v, _)| v)
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

fn falling(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64)
}

/// Finite sum of normal-ordered monomials with nonzero coefficients.
///
/// The zero operator is the empty map; a polynomial is an operator whose
/// terms carry no derivative symbols.
#[derive(Clone, PartialEq, Debug)]
pub struct WeylOperator<C: Coefficient = GaussianRational> {
    terms: BTreeMap<Monomial, C>,
}

/// Operators without derivative symbols.
pub type Polynomial<C = GaussianRational> = WeylOperator<C>;

impl<C: Coefficient> Default for WeylOperator<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> WeylOperator<C> {
    pub fn zero() -> Self {
        WeylOperator { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut op = Self::zero();
        op.add_term(m, c);
        op
    }

    /// Multiplication by the variable `v`.
    pub fn var(v: VariableId) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    /// The derivative symbol `∂/∂v`.
    pub fn deriv(v: VariableId) -> Self {
        Self::term(C::one(), Monomial::deriv(v))
    }

    /// `c · x ∂_d`, the building block of every generator.
    pub fn var_deriv(c: C, x: VariableId, d: VariableId) -> Self {
        Self::term(c, Monomial::new(alloc::vec![(x, 1)], alloc::vec![(d, 1)]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut op = Self::zero();
        for (m, c) in terms {
            op.add_term(m, c);
        }
        op
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// True when every term has derivative degree exactly 1.
    pub fn is_first_order(&self) -> bool {
        !self.terms.is_empty() && self.terms.keys().all(|m| m.deriv_degree() == 1)
    }

    /// Set of `(variable degree, derivative degree)` pairs over all terms.
    pub fn bidegrees(&self) -> BTreeSet<(u32, u32)> {
        self.terms.keys().map(|m| (m.var_degree(), m.deriv_degree())).collect()
    }

    pub fn symbols(&self) -> BTreeSet<VariableId> {
        self.terms.keys().flat_map(|m| m.symbols()).collect()
    }

    pub fn families(&self) -> BTreeSet<Family> {
        self.symbols().into_iter().map(|v| v.family).collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k.clone() * c.clone())))
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> WeylOperator<D> {
        WeylOperator::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_float(&self) -> WeylOperator<Complex64> {
        self.map_coefficients(C::to_complex)
    }

    /// Rename symbols; `f` must be injective for the result to mean anything.
    pub fn relabel(&self, f: impl Fn(VariableId) -> VariableId) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.relabel(&f), c.clone())))
    }

    /// Product in normal form, or `AlphabetMismatch` when the operands draw on
    /// different variable families.
    pub fn try_multiply(&self, other: &Self) -> Result<Self, SymError> {
        let (fa, fb) = (self.families(), other.families());
        if !fa.is_empty() && !fb.is_empty() && fa != fb {
            return Err(SymError::AlphabetMismatch);
        }
        Ok(self.multiply_unchecked(other))
    }

    /// Normal-ordered product.
    ///
    /// Panics when the operands come from different variable families; mixing
    /// them is a programming error.
    pub fn multiply(&self, other: &Self) -> Self {
        match self.try_multiply(other) {
            Ok(p) => p,
            Err(_) => panic!("alphabet mismatch in operator product"),
        }
    }

    fn multiply_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let coeff = ca.clone() * cb.clone();
                monomial_product(ma, mb, |m, k| {
                    out.add_term(m, coeff.clone() * C::from_i64(k));
                });
            }
        }
        out
    }

    /// `ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.multiply(other) - other.multiply(self)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.multiply(other) + other.multiply(self)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// Act on a polynomial: each derivative symbol differentiates `p`
    /// directly, then the multiplication symbols multiply the result.
    pub fn apply(&self, p: &Self) -> Result<Self, SymError> {
        if !p.is_polynomial() {
            return Err(SymError::NotPolynomial);
        }
        let mut out = Self::zero();
        for (mo, co) in &self.terms {
            'poly: for (mp, cp) in &p.terms {
                let mut factor: i64 = 1;
                let mut remaining: Powers = mp.vars.clone();
                for &(d, k) in &mo.derivs {
                    let idx = match remaining.binary_search_by(|probe| probe.0.cmp(&d)) {
                        Ok(idx) => idx,
                        Err(_) => continue 'poly,
                    };
                    let e = remaining[idx].1;
                    if e < k {
                        continue 'poly;
                    }
                    factor *= falling(e, k);
                    remaining[idx].1 = e - k;
                }
                remaining.retain(|&(_, e)| e != 0);
                let vars = merge(&mo.vars, &remaining);
                out.add_term(
                    Monomial { vars, derivs: Vec::new() },
                    co.clone() * cp.clone() * C::from_i64(factor),
                );
            }
        }
        Ok(out)
    }

    /// Swap conjugation flags on every symbol and conjugate every coefficient.
    pub fn hermitian_counterpart(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.conjugate_flags(), c.conj())))
    }

    /// `op + hermitian_counterpart(op)`.
    pub fn hermitian_completion(&self) -> Self {
        self.clone() + self.hermitian_counterpart()
    }

    /// `op − hermitian_counterpart(op)`: the completion whose product with `i`
    /// is a real vector field when `op` is first order.
    pub fn real_completion(&self) -> Self {
        self.clone() - self.hermitian_counterpart()
    }

    /// Evaluate a polynomial at a point given by values of unconjugated
    /// variables; conjugated symbols take the conjugate of their partner.
    pub fn evaluate(&self, point: &BTreeMap<VariableId, Complex64>) -> Result<Complex64, SymError> {
        if !self.is_polynomial() {
            return Err(SymError::NotPolynomial);
        }
        let lookup = |v: VariableId| -> Result<Complex64, SymError> {
            let z = point.get(&v.base()).copied().ok_or(SymError::Unassigned(v))?;
            Ok(if v.conjugated { z.conj() } else { z })
        };
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut value = c.to_complex();
            for &(v, e) in &m.vars {
                value *= lookup(v)?.powu(e);
            }
            total += value;
        }
        Ok(total)
    }
}

/// Expand `(x^a ∂^b)(x^c ∂^d)` into normal form, calling `emit` with each
/// resulting monomial and its integer multiplicity.
///
/// Per variable y, `∂_y^b y^c = Σ_k C(b,k) C(c,k) k! y^{c−k} ∂_y^{b−k}`;
/// distinct symbols commute.
fn monomial_product(a: &Monomial, b: &Monomial, mut emit: impl FnMut(Monomial, i64)) {
    // Variables where a's derivatives meet b's multiplications.
    let overlaps: Vec<(VariableId, u32, u32)> = a
        .derivs
        .iter()
        .filter_map(|&(v, db)| {
            let vc = exponent(&b.vars, v);
            (vc > 0).then_some((v, db, vc))
        })
        .collect();
    let mut ks = alloc::vec![0u32; overlaps.len()];
    loop {
        let mut mult: i64 = 1;
        let mut bvars = b.vars.clone();
        let mut aders = a.derivs.clone();
        for (idx, &(v, db, vc)) in overlaps.iter().enumerate() {
            let k = ks[idx];
            if k > 0 {
                mult *= binomial(db, k) * binomial(vc, k) * falling(k, k);
                if let Ok(p) = bvars.binary_search_by(|probe| probe.0.cmp(&v)) {
                    bvars[p].1 -= k;
                }
                if let Ok(p) = aders.binary_search_by(|probe| probe.0.cmp(&v)) {
                    aders[p].1 -= k;
                }
            }
        }
        bvars.retain(|&(_, e)| e != 0);
        aders.retain(|&(_, e)| e != 0);
        emit(
            Monomial { vars: merge(&a.vars, &bvars), derivs: merge(&aders, &b.derivs) },
            mult,
        );
        // next multi-index
        let mut idx = 0;
        loop {
            if idx == overlaps.len() {
                return;
            }
            let (_, db, vc) = overlaps[idx];
            if ks[idx] < db.min(vc) {
                ks[idx] += 1;
                break;
            }
            ks[idx] = 0;
            idx += 1;
        }
    }
}

impl<C: Coefficient> Add for WeylOperator<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coefficient> AddAssign for WeylOperator<C> {
    fn add_assign(&mut self, rhs: Self) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<C: Coefficient> Sub for WeylOperator<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<C: Coefficient> Neg for WeylOperator<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_terms(self.terms.into_iter().map(|(m, c)| (m, -c)))
    }
}

impl<'a, C: Coefficient> Mul<&'a WeylOperator<C>> for &'a WeylOperator<C> {
    type Output = WeylOperator<C>;
    fn mul(self, rhs: &WeylOperator<C>) -> WeylOperator<C> {
        self.multiply(rhs)
    }
}

impl<C: Coefficient> core::iter::Sum for WeylOperator<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
