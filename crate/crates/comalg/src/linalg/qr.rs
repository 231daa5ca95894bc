//! Column-pivoted Householder QR: rank, orthonormal ranges and complements,
//! nullspaces, least squares.

use super::matrix::{dot_hermitian, vec_norm2, Matrix, Scalar};
use super::LinalgError;

/// `M P = Q R` with Householder reflectors and greedy column pivoting.
/// `q` is the full m×m unitary factor; `r` is m×n upper triangular in the
/// permuted column order; `perm[j]` is the original index of permuted
/// column `j`.
#[derive(Debug, Clone)]
pub struct ColPivQr {
    pub q: Matrix,
    pub r: Matrix,
    pub perm: Vec<usize>,
    max_abs_input: f64,
}

impl ColPivQr {
    pub fn factor(m: &Matrix) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        let mut r = m.clone();
        let mut q = Matrix::identity(rows);
        let mut perm: Vec<usize> = (0..cols).collect();

        for k in 0..rows.min(cols) {
            // Pivot: remaining column with the largest tail norm.
            let mut best_j = k;
            let mut best = -1.0f64;
            for j in k..cols {
                let norm: f64 = (k..rows).map(|i| r[(i, j)].norm_sqr()).sum();
                if norm > best {
                    best = norm;
                    best_j = j;
                }
            }
            if best_j != k {
                for i in 0..rows {
                    let t = r[(i, k)];
                    r[(i, k)] = r[(i, best_j)];
                    r[(i, best_j)] = t;
                }
                perm.swap(k, best_j);
            }

            let tail_norm = best.max(0.0).sqrt();
            if tail_norm == 0.0 {
                continue;
            }

            // Householder vector v = x + phase(x₀)·‖x‖·e₁ maps x to
            // −phase(x₀)·‖x‖·e₁ under H = I − 2vvᴴ/‖v‖².
            let x0 = r[(k, k)];
            let phase = if x0.norm() == 0.0 {
                Scalar::new(1.0, 0.0)
            } else {
                x0 / x0.norm()
            };
            let mut v: Vec<Scalar> = (k..rows).map(|i| r[(i, k)]).collect();
            v[0] += phase * tail_norm;
            let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            if vnorm2 == 0.0 {
                continue;
            }

            // Apply H to the trailing columns of R.
            for j in k..cols {
                let mut proj = Scalar::new(0.0, 0.0);
                for (t, vi) in v.iter().enumerate() {
                    proj += vi.conj() * r[(k + t, j)];
                }
                let coeff = proj * (2.0 / vnorm2);
                for (t, vi) in v.iter().enumerate() {
                    let sub = coeff * vi;
                    r[(k + t, j)] -= sub;
                }
            }
            // Accumulate Q ← Q·H (H is Hermitian).
            for i in 0..rows {
                let mut proj = Scalar::new(0.0, 0.0);
                for (t, vi) in v.iter().enumerate() {
                    proj += q[(i, k + t)] * vi;
                }
                let coeff = proj * (2.0 / vnorm2);
                for (t, vi) in v.iter().enumerate() {
                    let sub = coeff * vi.conj();
                    q[(i, k + t)] -= sub;
                }
            }
            // Clean the annihilated part of the pivot column.
            for i in k + 1..rows {
                r[(i, k)] = Scalar::new(0.0, 0.0);
            }
        }

        ColPivQr {
            q,
            r,
            perm,
            max_abs_input: m.max_abs(),
        }
    }

    /// Numerical rank: diagonal entries of R above `rank_tol · max|entry|`
    /// of the original matrix. Pivoting makes the diagonal non-increasing in
    /// modulus, so the first small entry ends the count.
    pub fn rank(&self, rank_tol: f64) -> usize {
        let threshold = rank_tol * self.max_abs_input;
        let mut rank = 0;
        for k in 0..self.r.rows().min(self.r.cols()) {
            if self.r[(k, k)].norm() > threshold {
                rank += 1;
            } else {
                break;
            }
        }
        rank
    }

    /// Smallest diagonal modulus of R over the full diagonal; an upper bound
    /// on the smallest singular value of a square input.
    pub fn min_diag(&self) -> f64 {
        (0..self.r.rows().min(self.r.cols()))
            .map(|k| self.r[(k, k)].norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Orthonormal basis of the column space (first `rank` columns of Q).
    pub fn range_basis(&self, rank_tol: f64) -> Matrix {
        let r = self.rank(rank_tol);
        self.q.column_block(0, r)
    }

    /// Orthonormal basis of the orthogonal complement of the column space.
    pub fn complement_basis(&self, rank_tol: f64) -> Matrix {
        let r = self.rank(rank_tol);
        self.q.column_block(r, self.q.cols())
    }
}

/// Orthonormal basis of `{v : Mv = 0}` at the given relative rank threshold.
/// Returns an n×k matrix with orthonormal columns (k = n − rank); full-rank
/// input yields an n×0 matrix.
pub fn nullspace(m: &Matrix, rank_tol: f64) -> Matrix {
    let n = m.cols();
    let qr = ColPivQr::factor(m);
    let rank = qr.rank(rank_tol);
    if rank == n {
        return Matrix::zeros(n, 0);
    }
    // R (in permuted order) splits as [R11 R12]; null vectors solve
    // R11 u = −R12[:, f] with a unit in the free coordinate.
    let free = n - rank;
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(free);
    for f in 0..free {
        let mut u = vec![Scalar::new(0.0, 0.0); rank];
        for i in (0..rank).rev() {
            let mut acc = -qr.r[(i, rank + f)];
            for (j, uj) in u.iter().enumerate().take(rank).skip(i + 1) {
                acc -= qr.r[(i, j)] * uj;
            }
            u[i] = acc / qr.r[(i, i)];
        }
        let mut v = vec![Scalar::new(0.0, 0.0); n];
        for (j, &orig) in qr.perm.iter().enumerate() {
            if j < rank {
                v[orig] = u[j];
            } else if j == rank + f {
                v[orig] = Scalar::new(1.0, 0.0);
            }
        }
        columns.push(v);
    }
    orthonormalize_columns(&columns, n)
}

/// Modified Gram-Schmidt on a set of independent vectors.
fn orthonormalize_columns(columns: &[Vec<Scalar>], n: usize) -> Matrix {
    let mut basis: Vec<Vec<Scalar>> = Vec::with_capacity(columns.len());
    for col in columns {
        let mut v = col.clone();
        // Two passes of projection for orthogonality at working precision.
        for _ in 0..2 {
            for b in &basis {
                let proj = dot_hermitian(b, &v);
                for i in 0..n {
                    let sub = proj * b[i];
                    v[i] -= sub;
                }
            }
        }
        let norm = vec_norm2(&v);
        assert!(norm > 0.0, "dependent column reached orthonormalization");
        for z in &mut v {
            *z /= norm;
        }
        basis.push(v);
    }
    Matrix::from_columns(n, &basis)
}

/// Least-squares solution of `J x ≈ rhs` (rows(J) ≥ cols(J)) through the
/// pivoted QR factors, truncating diagonal entries below the rank threshold.
pub fn least_squares(j: &Matrix, rhs: &[Scalar], rank_tol: f64) -> Result<Vec<Scalar>, LinalgError> {
    if rhs.len() != j.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: j.rows(),
            actual: rhs.len(),
        });
    }
    let n = j.cols();
    let qr = ColPivQr::factor(j);
    let rank = qr.rank(rank_tol);
    // Qᴴ·rhs, first `rank` components.
    let qh_rhs = qr.q.conj_transpose().mul_vec(rhs);
    let mut u = vec![Scalar::new(0.0, 0.0); rank];
    for i in (0..rank).rev() {
        let mut acc = qh_rhs[i];
        for (k, uk) in u.iter().enumerate().take(rank).skip(i + 1) {
            acc -= qr.r[(i, k)] * uk;
        }
        u[i] = acc / qr.r[(i, i)];
    }
    let mut x = vec![Scalar::new(0.0, 0.0); n];
    for (jp, &orig) in qr.perm.iter().enumerate() {
        if jp < rank {
            x[orig] = u[jp];
        }
    }
    Ok(x)
}
