//! Exact linear algebra over the rationals.
//!
//! Everything here is small dense Gaussian elimination; the matrices in this
//! crate never exceed a few dozen rows.

use crate::Q;
use num_traits::{One, Zero};

/// Reduced row echelon form. Returns the nonzero rows and pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..ncols {
                    let delta = f * m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : A x = 0}` where `A` has `ncols` columns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    if rows.is_empty() {
        return (0..ncols).map(|i| unit(ncols, i)).collect();
    }
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[f];
            }
            x
        })
        .collect()
}

/// Solves `A x = b` for square invertible `A`.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(r.iter().map(|row| row[n]).collect())
}

pub fn transpose(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// A linear subspace of `Q^n`, stored with an echelon basis and a basis of
/// its annihilator so that membership is a handful of dot products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim_ambient: usize,
    basis: Vec<Vec<Q>>,
    annihilator: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn span(dim_ambient: usize, vectors: &[Vec<Q>]) -> Self {
        let (basis, _) = rref(vectors);
        let annihilator = nullspace(&basis, dim_ambient);
        Subspace {
            dim_ambient,
            basis,
            annihilator,
        }
    }

    pub fn zero(dim_ambient: usize) -> Self {
        Self::span(dim_ambient, &[])
    }

    pub fn full(dim_ambient: usize) -> Self {
        let vs: Vec<_> = (0..dim_ambient).map(|i| unit(dim_ambient, i)).collect();
        Self::span(dim_ambient, &vs)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.annihilator.iter().all(|n| dot(n, v).is_zero())
    }

    /// Whether `self ∩ span(vectors) = {0}`, assuming `vectors` are independent.
    pub fn meets_trivially(&self, vectors: &[Vec<Q>]) -> bool {
        let mut all = self.basis.clone();
        all.extend_from_slice(vectors);
        rank(&all) == self.dim() + rank(vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn solve_small() {
        let a = vec![v(&[2, -1]), v(&[-1, 2])];
        let x = solve(&a, &v(&[1, 1])).unwrap();
        assert_eq!(x, v(&[1, 1]));
        let singular = vec![v(&[1, 1]), v(&[1, 1])];
        assert!(solve(&singular, &v(&[1, 2])).is_none());
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::span(3, &[v(&[1, 1, 0])]);
        assert!(s.contains(&v(&[2, 2, 0])));
        assert!(!s.contains(&v(&[1, 0, 0])));
        assert!(s.meets_trivially(&[v(&[1, 0, 0])]));
        assert!(!s.meets_trivially(&[v(&[3, 3, 0])]));
        assert_eq!(Subspace::zero(3).dim(), 0);
        assert!(Subspace::zero(3).contains(&v(&[0, 0, 0])));
        assert_eq!(Subspace::full(3).dim(), 3);
    }
}
