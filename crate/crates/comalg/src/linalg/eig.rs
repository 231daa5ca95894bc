//! Eigenvalues of a general complex matrix: Householder reduction to upper
//! Hessenberg form followed by single-shift QR iteration with deflation.
//! The contract is the residual bound `σ_min(M − λI) ≤ tol · ‖M‖`, not the
//! algorithm; with matrices this small the plain explicit-shift sweep is
//! accurate and fast.

use super::matrix::{Matrix, Scalar};
use super::qr::nullspace;
use super::LinalgError;

/// QR sweeps allowed per eigenvalue before reporting a convergence failure.
pub const EIG_MAX_SWEEPS: usize = 64;

/// All eigenvalues with multiplicity (`rows` values) of a square matrix.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<Scalar>, LinalgError> {
    assert!(m.is_square(), "eigenvalues need a square matrix");
    let n = m.rows();
    assert!(n >= 1, "dimension must be at least 1");
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let mut h = hessenberg(m);
    let scale = h.fro_norm().max(f64::MIN_POSITIVE);
    let mut eigs: Vec<Scalar> = Vec::with_capacity(n);

    let mut hi = n; // active block is h[0..hi, 0..hi]
    let mut sweeps_on_block = 0usize;
    while hi > 0 {
        if hi == 1 {
            eigs.push(h[(0, 0)]);
            hi = 0;
            continue;
        }
        // Zero out negligible subdiagonals, then find the unreduced block
        // [lo, hi) ending at hi.
        let mut lo = hi - 1;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let s = if s == 0.0 { scale } else { s };
            if h[(lo, lo - 1)].norm() <= f64::EPSILON * s {
                h[(lo, lo - 1)] = Scalar::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi - 1 {
            // 1×1 block deflated.
            eigs.push(h[(hi - 1, hi - 1)]);
            hi -= 1;
            sweeps_on_block = 0;
            continue;
        }
        if lo == hi - 2 {
            // 2×2 block: closed form.
            let (l1, l2) = eig_2x2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            eigs.push(l1);
            eigs.push(l2);
            hi -= 2;
            sweeps_on_block = 0;
            continue;
        }

        if sweeps_on_block >= EIG_MAX_SWEEPS {
            return Err(LinalgError::ConvergenceFailure(EIG_MAX_SWEEPS));
        }
        let shift = if sweeps_on_block > 0 && sweeps_on_block.is_multiple_of(12) {
            // Exceptional shift to break symmetric stalls.
            h[(hi - 1, hi - 1)] + Scalar::new(0.75 * h[(hi - 1, hi - 2)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            )
        };
        qr_sweep(&mut h, lo, hi, shift);
        sweeps_on_block += 1;
    }
    Ok(eigs)
}

/// Basis of the left eigenspace `{w : wᵀ M = λ wᵀ}`, i.e. the nullspace of
/// `Mᵀ − λI` (plain transpose: these are eigen-functionals, paired without
/// conjugation). `rank_tol` is relative to the largest entry of the shifted
/// matrix; it must dominate the eigenvalue error, which for defective
/// matrices is far above machine precision.
pub fn left_eigenvectors(m: &Matrix, lambda: Scalar, rank_tol: f64) -> Matrix {
    let shifted = m.transpose().shifted(lambda);
    nullspace(&shifted, rank_tol)
}

/// Householder similarity reduction to upper Hessenberg form.
fn hessenberg(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut h = m.clone();
    for k in 0..n.saturating_sub(2) {
        let tail_norm: f64 = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if tail_norm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Scalar::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v: Vec<Scalar> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] += phase * tail_norm;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm2;
        // Left: rows k+1..n.
        for j in 0..n {
            let mut proj = Scalar::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                proj += vi.conj() * h[(k + 1 + t, j)];
            }
            let coeff = proj * tau;
            for (t, vi) in v.iter().enumerate() {
                let sub = coeff * vi;
                h[(k + 1 + t, j)] -= sub;
            }
        }
        // Right: columns k+1..n.
        for i in 0..n {
            let mut proj = Scalar::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                proj += h[(i, k + 1 + t)] * vi;
            }
            let coeff = proj * tau;
            for (t, vi) in v.iter().enumerate() {
                let sub = coeff * vi.conj();
                h[(i, k + 1 + t)] -= sub;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = Scalar::new(0.0, 0.0);
        }
    }
    h
}

/// Eigenvalues of `[[a, b], [c, d]]`.
fn eig_2x2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> (Scalar, Scalar) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    (half_tr + disc, half_tr - disc)
}

/// The eigenvalue of the trailing 2×2 block closer to its bottom-right entry.
fn wilkinson_shift(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar {
    let (l1, l2) = eig_2x2(a, b, c, d);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Complex Givens rotation mapping `(f, g)` to `(r, 0)` via
/// `[[c, s], [−conj(s), c]]` with real `c`.
fn givens(f: Scalar, g: Scalar) -> (f64, Scalar) {
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Scalar::new(0.0, 0.0));
    }
    let fn_ = f.norm();
    let denom = (fn_ * fn_ + gn * gn).sqrt();
    if fn_ == 0.0 {
        (0.0, g.conj() / gn)
    } else {
        let c = fn_ / denom;
        let s = (f / fn_) * (g.conj() / denom);
        (c, s)
    }
}

/// One explicit single-shift QR step on the active Hessenberg block
/// `[lo, hi)`: H ← R·Q + μI where Q R = H − μI.
fn qr_sweep(h: &mut Matrix, lo: usize, hi: usize, shift: Scalar) {
    for i in lo..hi {
        h[(i, i)] -= shift;
    }
    let mut rots: Vec<(f64, Scalar)> = Vec::with_capacity(hi - lo - 1);
    // Left rotations annihilate the subdiagonal.
    for k in lo..hi - 1 {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..hi {
            let t1 = h[(k, j)];
            let t2 = h[(k + 1, j)];
            h[(k, j)] = t1 * c + s * t2;
            h[(k + 1, j)] = -s.conj() * t1 + t2 * c;
        }
        h[(k + 1, k)] = Scalar::new(0.0, 0.0);
        rots.push((c, s));
    }
    // Right application restores Hessenberg form.
    for (idx, &(c, s)) in rots.iter().enumerate() {
        let k = lo + idx;
        let row_end = (k + 2).min(hi);
        for i in lo..row_end {
            let t1 = h[(i, k)];
            let t2 = h[(i, k + 1)];
            h[(i, k)] = t1 * c + t2 * s.conj();
            h[(i, k + 1)] = -(t1 * s) + t2 * c;
        }
    }
    for i in lo..hi {
        h[(i, i)] += shift;
    }
}
