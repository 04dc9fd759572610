//! Small dense linear algebra over the coefficient rings.
//!
//! Matrices here are tiny (at most a few hundred rows), so plain `Vec<Vec<_>>`
//! storage and textbook elimination are enough.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::symcore::Coefficient;

fn max_magnitude<C: Coefficient>(rows: &[Vec<C>]) -> f64 {
    rows.iter().flatten().map(C::magnitude).fold(0.0, f64::max)
}

/// Gauss–Jordan elimination in place with partial pivoting on magnitude.
/// Returns the pivot column of each reduced row.
fn reduce<C: Coefficient>(rows: &mut [Vec<C>], pivot_cols: usize, scale: f64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .max_by(|&a, &b| rows[a][col].magnitude().total_cmp(&rows[b][col].magnitude()))
            .unwrap();
        if rows[best][col].is_negligible(scale) {
            continue;
        }
        rows.swap(r, best);
        let inv = rows[r][col].recip().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for other in 0..rows.len() {
            if other == r || rows[other][col].is_zero() {
                continue;
            }
            let f = rows[other][col].clone();
            for k in 0..rows[r].len() {
                let sub = f.clone() * rows[r][k].clone();
                rows[other][k] = rows[other][k].clone() - sub;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank<C: Coefficient>(m: &[Vec<C>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let scale = max_magnitude(m);
    let mut rows = m.to_vec();
    let cols = rows[0].len();
    reduce(&mut rows, cols, scale).len()
}

pub fn is_invertible<C: Coefficient>(m: &[Vec<C>]) -> bool {
    m.iter().all(|r| r.len() == m.len()) && rank(m) == m.len()
}

/// Solve `a x = b` where `a` is `rows × cols` with independent columns.
/// Returns `None` when `b` is not in the column span (up to the ring's
/// zero test).
pub fn solve<C: Coefficient>(a: &[Vec<C>], b: &[C]) -> Option<Vec<C>> {
    let cols = a.first().map_or(0, Vec::len);
    let scale = max_magnitude(a).max(b.iter().map(C::magnitude).fold(0.0, f64::max));
    let mut rows: Vec<Vec<C>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = reduce(&mut rows, cols, scale);
    if pivots.len() < cols {
        return None;
    }
    if rows[pivots.len()..].iter().any(|r| !r[cols].is_negligible(scale)) {
        return None;
    }
    let mut x = alloc::vec![C::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][cols].clone();
    }
    Some(x)
}

pub fn mat_mul<C: Coefficient>(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(C::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

pub fn identity<C: Coefficient>(n: usize) -> Vec<Vec<C>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect())
        .collect()
}

/// Inertia `(positive, negative, zero)` of a real symmetric rational matrix,
/// by exact congruence diagonalization (Sylvester's law of inertia).
pub fn symmetric_inertia(m: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Pick a nonzero diagonal pivot if any.
        let diag = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match diag {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish; look for a coupling.
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        // e_i <- e_i + e_j makes a[i][i] = 2 a[i][j] != 0.
                        for k in 0..n {
                            let t = a[j][k].clone();
                            a[i][k] = &a[i][k] + &t;
                        }
                        for k in 0..n {
                            let t = a[k][j].clone();
                            a[k][i] = &a[k][i] + &t;
                        }
                        i
                    }
                    None => {
                        zero += active.len();
                        break;
                    }
                }
            }
        };
        let pivot = a[p][p].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &pivot;
            for &k in &active {
                let t = &f * &a[p][k];
                a[i][k] = &a[i][k] - &t;
            }
            a[i][p] = BigRational::zero();
            a[p][i] = BigRational::zero();
        }
    }
    (pos, neg, zero)
}

pub fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn cnorm(a: &[Complex64]) -> f64 {
    libm::sqrt(a.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

/// Numerical rank of a Hermitian positive semidefinite matrix by diagonally
/// pivoted Cholesky; pivots at or below `tol · max(1, largest diagonal)` end
/// the factorization.
pub fn psd_rank(g: &[Vec<Complex64>], tol: f64) -> usize {
    let n = g.len();
    let mut a: Vec<Vec<Complex64>> = g.to_vec();
    let threshold = tol * a.iter().enumerate().map(|(i, r)| r[i].re).fold(1.0, f64::max);
    let mut rank = 0;
    let mut remaining: Vec<usize> = (0..n).collect();
    while !remaining.is_empty() {
        let (pos, &p) = remaining
            .iter()
            .enumerate()
            .max_by(|x, y| a[*x.1][*x.1].re.total_cmp(&a[*y.1][*y.1].re))
            .unwrap();
        let d = a[p][p].re;
        if d <= threshold {
            break;
        }
        rank += 1;
        remaining.swap_remove(pos);
        for &i in &remaining {
            for &j in &remaining {
                let t = a[i][p] * a[p][j] / d;
                a[i][j] -= t;
            }
        }
    }
    rank
}

/// Relative residual `‖t − P t‖ / ‖t‖` of projecting `target` onto the span
/// of `basis`, using modified Gram–Schmidt with one reorthogonalization pass.
/// Returns 0 for a zero target.
pub fn projection_residual(basis: &[Vec<Complex64>], target: &[Complex64]) -> f64 {
    let tnorm = cnorm(target);
    if tnorm == 0.0 {
        return 0.0;
    }
    let mut ortho: Vec<Vec<Complex64>> = Vec::new();
    for b in basis {
        let mut w = b.clone();
        let start = cnorm(&w);
        if start == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for q in &ortho {
                let c = cdot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
        }
        let nw = cnorm(&w);
        if nw > 1e-10 * start {
            ortho.push(w.into_iter().map(|x| x / nw).collect());
        }
    }
    let mut r = target.to_vec();
    for _ in 0..2 {
        for q in &ortho {
            let c = cdot(q, &r);
            for (ri, qi) in r.iter_mut().zip(q) {
                *ri -= c * qi;
            }
        }
    }
    cnorm(&r) / tnorm
}

/// Real vectors as rows.
pub type Basis = Vec<Vec<f64>>;

/// Orthonormal completion in `R^d`: Gram–Schmidt of `vectors` followed by the
/// standard basis, keeping vectors whose residual exceeds `tol`.
/// Returns `(orthonormal span of vectors, complement basis)` or `None` when
/// `vectors` are dependent at tolerance `tol`.
pub fn orthonormal_complement(vectors: &[Vec<f64>], dim: usize, tol: f64) -> Option<(Basis, Basis)> {
    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }
    fn orthogonalize(w: &mut [f64], against: &[Vec<f64>]) {
        for _ in 0..2 {
            for q in against {
                let c = dot(q, w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
        }
    }
    let mut span: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let scale = libm::sqrt(dot(v, v));
        let mut w = v.clone();
        orthogonalize(&mut w, &span);
        let nw = libm::sqrt(dot(&w, &w));
        if scale == 0.0 || nw <= tol * scale {
            return None;
        }
        span.push(w.into_iter().map(|x| x / nw).collect());
    }
    let mut all = span.clone();
    let mut complement = Vec::new();
    for k in 0..dim {
        if all.len() == dim {
            break;
        }
        let mut w = alloc::vec![0.0; dim];
        w[k] = 1.0;
        orthogonalize(&mut w, &all);
        let nw = libm::sqrt(dot(&w, &w));
        if nw > 1e-6 {
            let q: Vec<f64> = w.into_iter().map(|x| x / nw).collect();
            all.push(q.clone());
            complement.push(q);
        }
    }
    Some((span, complement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::GaussianRational;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        let m = alloc::vec![alloc::vec![q(0), q(1)], alloc::vec![q(1), q(0)]];
        assert_eq!(symmetric_inertia(&m), (1, 1, 0));
        let d = alloc::vec![alloc::vec![q(2), q(0), q(0)], alloc::vec![q(0), q(0), q(0)], alloc::vec![q(0), q(0), q(-3)]];
        assert_eq!(symmetric_inertia(&d), (1, 1, 1));
    }

    #[test]
    fn exact_solve() {
        let g = |v| GaussianRational::from_integer(v);
        let a = alloc::vec![alloc::vec![g(1), g(0)], alloc::vec![g(1), g(1)], alloc::vec![g(0), g(1)]];
        assert_eq!(solve(&a, &[g(2), g(5), g(3)]), Some(alloc::vec![g(2), g(3)]));
        assert_eq!(solve(&a, &[g(2), g(5), g(4)]), None);
        assert!(!is_invertible(&[alloc::vec![g(1), g(2)], alloc::vec![g(2), g(4)]]));
    }

    #[test]
    fn psd_rank_detects_duplicates() {
        let c = |r: f64| Complex64::new(r, 0.0);
        let g = alloc::vec![alloc::vec![c(1.0), c(1.0)], alloc::vec![c(1.0), c(1.0)]];
        assert_eq!(psd_rank(&g, 1e-8), 1);
        let h = alloc::vec![alloc::vec![c(2.0), c(0.0)], alloc::vec![c(0.0), c(1.0)]];
        assert_eq!(psd_rank(&h, 1e-8), 2);
    }
}
