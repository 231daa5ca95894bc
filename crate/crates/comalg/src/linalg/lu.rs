//! LU factorization with partial pivoting and a threshold singularity verdict.

use super::matrix::{Matrix, Scalar};
use super::LinalgError;

/// Packed LU factors of a square matrix with partial (row) pivoting.
///
/// Singularity is decided against the largest entry of the *original*
/// matrix: a pivot `p` counts as zero when `|p| ≤ rank_tol · max|entry|`.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix,
    perm: Vec<usize>,
    swaps: usize,
    max_abs_input: f64,
}

impl Lu {
    pub fn factor(m: &Matrix) -> Self {
        assert!(m.is_square(), "LU needs a square matrix");
        let n = m.rows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            // Partial pivot: largest modulus in column k at or below the diagonal.
            let mut piv = k;
            let mut best = lu[(k, k)].norm();
            for i in k + 1..n {
                let v = lu[(i, k)].norm();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if piv != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(piv, j)];
                    lu[(piv, j)] = t;
                }
                perm.swap(k, piv);
                swaps += 1;
            }
            let pivot = lu[(k, k)];
            if pivot.norm() == 0.0 {
                continue;
            }
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in k + 1..n {
                    let sub = factor * lu[(k, j)];
                    lu[(i, j)] -= sub;
                }
            }
        }
        Lu {
            lu,
            perm,
            swaps,
            max_abs_input: m.max_abs(),
        }
    }

    /// Smallest pivot modulus on the diagonal of U.
    pub fn min_pivot(&self) -> f64 {
        (0..self.lu.rows())
            .map(|i| self.lu[(i, i)].norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// True when some pivot falls at or below `rank_tol · max|entry|`.
    pub fn is_singular(&self, rank_tol: f64) -> bool {
        self.min_pivot() <= rank_tol * self.max_abs_input
    }

    /// Solve `M y = b`. Fails with [`LinalgError::Singular`] at the same
    /// threshold as [`Lu::is_singular`].
    pub fn solve(&self, b: &[Scalar], rank_tol: f64) -> Result<Vec<Scalar>, LinalgError> {
        let n = self.lu.rows();
        if b.len() != n {
            return Err(LinalgError::DimensionMismatch {
                expected: n,
                actual: b.len(),
            });
        }
        if self.is_singular(rank_tol) {
            return Err(LinalgError::Singular);
        }
        // Forward substitution on the permuted right-hand side.
        let mut y: Vec<Scalar> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let sub = self.lu[(i, j)] * y[j];
                y[i] -= sub;
            }
        }
        // Back substitution.
        for i in (0..n).rev() {
            for j in i + 1..n {
                let sub = self.lu[(i, j)] * y[j];
                y[i] -= sub;
            }
            y[i] /= self.lu[(i, i)];
        }
        Ok(y)
    }

    /// Determinant: product of pivots with the permutation sign.
    pub fn det(&self) -> Scalar {
        let mut d = Scalar::new(if self.swaps.is_multiple_of(2) { 1.0 } else { -1.0 }, 0.0);
        for i in 0..self.lu.rows() {
            d *= self.lu[(i, i)];
        }
        d
    }
}
