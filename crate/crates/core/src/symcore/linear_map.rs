//! Invertible linear substitutions on the variable alphabet.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::coefficient::{Coefficient, GaussianRational};
use super::operator::{Monomial, WeylOperator};
use super::variable::VariableId;
use super::SymError;
use crate::linalg;

/// Linear combination of variables.
pub type LinearForm<C> = Vec<(VariableId, C)>;

/// A linear substitution `x ↦ Σ c_y y` on a finite domain of variables.
///
/// Only images of unconjugated variables are supplied; the image of `x̄` is
/// always the conjugate of the image of `x`. Variables outside the domain are
/// left fixed. Whether arithmetic is exact follows the coefficient type.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearVariableMap<C: Coefficient = GaussianRational> {
    images: BTreeMap<VariableId, LinearForm<C>>,
}

fn conj_form<C: Coefficient>(form: &[(VariableId, C)]) -> LinearForm<C> {
    form.iter().map(|(v, c)| (v.bar(), c.conj())).collect()
}

impl<C: Coefficient> LinearVariableMap<C> {
    pub fn identity() -> Self {
        LinearVariableMap { images: BTreeMap::new() }
    }

    /// Build from images of unconjugated variables. Fails when an image uses
    /// a variable outside the (conjugation-closed) domain or when the square
    /// matrix of the substitution is singular.
    pub fn from_images(images: impl IntoIterator<Item = (VariableId, LinearForm<C>)>) -> Result<Self, SymError> {
        let mut all = BTreeMap::new();
        for (v, form) in images {
            if v.conjugated {
                return Err(SymError::ConjugatedDomain(v));
            }
            let mut merged: BTreeMap<VariableId, C> = BTreeMap::new();
            for (w, c) in form {
                let slot = merged.entry(w).or_insert_with(C::zero);
                *slot = slot.clone() + c;
            }
            let form: LinearForm<C> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            all.insert(v.bar(), conj_form(&form));
            all.insert(v, form);
        }
        let map = LinearVariableMap { images: all };
        map.check_invertible()?;
        Ok(map)
    }

    /// Basis-mixing convention: `vars[j] ↦ Σ_i vars[i] · m[i][j]`, so the
    /// matrix of the degree-one basis is `m` itself and
    /// `from_matrix(B) ∘ from_matrix(A)` substitutes like `from_matrix(BA)`.
    pub fn from_matrix(vars: &[VariableId], m: &[Vec<C>]) -> Result<Self, SymError> {
        Self::from_images(vars.iter().enumerate().map(|(j, &vj)| {
            (vj, vars.iter().enumerate().map(|(i, &vi)| (vi, m[i][j].clone())).collect())
        }))
    }

    /// Row convention `vars[i] ↦ Σ_j m[i][j] · vars[j]`, i.e. `x' = m x`.
    pub fn from_rows(vars: &[VariableId], m: &[Vec<C>]) -> Result<Self, SymError> {
        Self::from_images(vars.iter().enumerate().map(|(i, &vi)| {
            (vi, vars.iter().enumerate().map(|(j, &vj)| (vj, m[i][j].clone())).collect())
        }))
    }

    pub fn domain(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.images.keys().copied()
    }

    pub fn image(&self, v: VariableId) -> LinearForm<C> {
        match self.images.get(&v) {
            Some(form) => form.clone(),
            None => alloc::vec![(v, C::one())],
        }
    }

    fn matrix(&self) -> Result<Vec<Vec<C>>, SymError> {
        let dom: Vec<VariableId> = self.images.keys().copied().collect();
        let index: BTreeMap<VariableId, usize> = dom.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut m = alloc::vec![alloc::vec![C::zero(); dom.len()]; dom.len()];
        for (row, v) in dom.iter().enumerate() {
            for (w, c) in &self.images[v] {
                let col = *index.get(w).ok_or(SymError::ImageOutsideDomain(*w))?;
                m[row][col] = m[row][col].clone() + c.clone();
            }
        }
        Ok(m)
    }

    fn check_invertible(&self) -> Result<(), SymError> {
        if linalg::is_invertible(&self.matrix()?) {
            Ok(())
        } else {
            Err(SymError::NotInvertible)
        }
    }

    fn image_operator(&self, v: VariableId) -> WeylOperator<C> {
        WeylOperator::from_terms(self.image(v).into_iter().map(|(w, c)| (Monomial::var(w), c)))
    }

    /// Replace every variable of `p` by its image.
    pub fn substitute(&self, p: &WeylOperator<C>) -> Result<WeylOperator<C>, SymError> {
        if !p.is_polynomial() {
            return Err(SymError::NotPolynomial);
        }
        let mut powers: BTreeMap<(VariableId, u32), WeylOperator<C>> = BTreeMap::new();
        let mut out = WeylOperator::zero();
        for (m, c) in p.terms() {
            let mut acc = WeylOperator::scalar(c.clone());
            for &(v, e) in m.vars() {
                let pw = powers.entry((v, e)).or_insert_with(|| self.image_operator(v).pow(e));
                acc = acc.multiply(pw);
            }
            out += acc;
        }
        Ok(out)
    }

    /// The map equal to substituting with `self` and then with `then`.
    pub fn compose(&self, then: &Self) -> Result<Self, SymError> {
        let mut dom: Vec<VariableId> = self.domain().chain(then.domain()).filter(|v| !v.conjugated).collect();
        dom.sort();
        dom.dedup();
        let mut images = Vec::new();
        for v in dom {
            let once = self.image_operator(v);
            let twice = then.substitute(&once)?;
            let form = twice
                .terms()
                .map(|(m, c)| (m.vars()[0].0, c.clone()))
                .collect::<Vec<_>>();
            images.push((v, form));
        }
        Self::from_images(images)
    }
}

/// `substitute_linear(p, map)`.
pub fn substitute_linear<C: Coefficient>(p: &WeylOperator<C>, map: &LinearVariableMap<C>) -> Result<WeylOperator<C>, SymError> {
    map.substitute(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GaussianRational;

    fn e(i: u16) -> VariableId {
        VariableId::example(i)
    }

    #[test]
    fn identity_and_swap() {
        let p: WeylOperator = WeylOperator::var(e(1)).pow(2);
        assert_eq!(LinearVariableMap::identity().substitute(&p).unwrap(), p);
        let swap = LinearVariableMap::from_images([
            (e(1), alloc::vec![(e(2), G::from_integer(1))]),
            (e(2), alloc::vec![(e(1), G::from_integer(1))]),
        ])
        .unwrap();
        assert_eq!(swap.substitute(&p).unwrap(), WeylOperator::var(e(2)).pow(2));
    }

    #[test]
    fn conjugates_follow() {
        let map = LinearVariableMap::from_images([(e(1), alloc::vec![(e(1), G::i())])]).unwrap();
        let p: WeylOperator = WeylOperator::var(e(1).bar());
        assert_eq!(map.substitute(&p).unwrap(), WeylOperator::var(e(1).bar()).scale(&(-G::i())));
    }

    #[test]
    fn singular_maps_rejected() {
        let one = G::from_integer(1);
        let r = LinearVariableMap::from_images([
            (e(1), alloc::vec![(e(1), one.clone()), (e(2), one.clone())]),
            (e(2), alloc::vec![(e(1), one.clone()), (e(2), one.clone())]),
        ]);
        assert_eq!(r, Err(SymError::NotInvertible));
        let r = LinearVariableMap::from_images([(e(1), alloc::vec![(e(2), one)])]);
        assert_eq!(r, Err(SymError::ImageOutsideDomain(e(2))));
    }
}
