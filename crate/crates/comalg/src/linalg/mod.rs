//! Self-contained dense complex linear algebra.
//!
//! This is the oracle layer for the rest of the crate: LU solves with a
//! pivot-threshold singularity verdict, rank-revealing column-pivoted QR
//! (nullspaces, orthonormal ranges and complements, least squares), and a
//! shifted-QR eigenvalue solver on Hessenberg form. Matrices are tiny
//! (algebra dimensions ≤ ~64), so everything favors clarity and uniform
//! tolerance handling over scale.

mod eig;
mod lu;
mod matrix;
mod qr;

pub use eig::{eigenvalues, left_eigenvectors, EIG_MAX_SWEEPS};
pub use lu::Lu;
pub use matrix::{Matrix, Scalar};
pub use qr::{least_squares, nullspace, ColPivQr};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// The matrix has a pivot below the rank threshold; upstream this is the
    /// verdict that an algebra element is not invertible.
    #[error("matrix is singular at the working tolerance")]
    Singular,
    /// The eigenvalue iteration did not deflate within its sweep budget;
    /// callers retry with a perturbed input.
    #[error("eigenvalue iteration failed to converge within {0} sweeps")]
    ConvergenceFailure(usize),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    /// Input columns that were required to be independent are not.
    #[error("rank-deficient input: rank {rank} < {cols} columns")]
    RankDeficient { rank: usize, cols: usize },
}

/// Greedy minimal-distance matching between two equally sized multisets of
/// complex values. Returns the largest matched distance, so two multisets
/// agree within `tol` iff the result is ≤ `tol`. Dimensions are tiny, so a
/// greedy pairing is enough; optimality beyond correctness is irrelevant.
pub fn multiset_match_distance(a: &[Scalar], b: &[Scalar]) -> f64 {
    assert_eq!(a.len(), b.len(), "multisets must have equal cardinality");
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    // Pair greedily, globally closest first.
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut taken = vec![false; a.len()];
    let mut matched = 0;
    for (d, i, j) in pairs {
        if !taken[i] && !used[j] {
            taken[i] = true;
            used[j] = true;
            worst = worst.max(d);
            matched += 1;
            if matched == a.len() {
                break;
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn multiset_matching_reports_worst_pair_distance() {
        let a = vec![c(1.0, 0.0), c(0.0, 2.0)];
        let b = vec![c(0.0, 2.0 + 1e-9), c(1.0 + 2e-9, 0.0)];
        let d = multiset_match_distance(&a, &b);
        assert!(d <= 3e-9, "distance {d}");
        assert!(d >= 1e-9);
    }

    #[test]
    fn multiset_matching_flags_disagreement() {
        let a = vec![c(1.0, 0.0), c(2.0, 0.0)];
        let b = vec![c(1.0, 0.0), c(3.0, 0.0)];
        assert!(multiset_match_distance(&a, &b) >= 0.99);
    }
}
