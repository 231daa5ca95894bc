//! Central tolerance configuration.
//!
//! The algebra itself is exact mathematics; floating point is our addition.
//! Every threshold used anywhere in the crate is a field of [`Tolerances`]
//! so the numeric policy is auditable in one place. Algebra dimensions stay
//! small (≤ ~64) and entries are O(1), which is what the defaults assume.

use thiserror::Error;

/// Environment variable holding a positive scale factor applied to every
/// default tolerance by [`Tolerances::from_env`].
pub const TOL_SCALE_ENV: &str = "COMALG_TOL_SCALE";

/// All numeric thresholds used by the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Target residual `‖M·y − b‖∞ / ‖b‖` for linear solves on
    /// well-conditioned systems (condition estimate ≤ 1e6).
    pub solve: f64,
    /// Rank / singularity pivot threshold, relative to the largest entry of
    /// the matrix: a pivot `p` counts as zero when `|p| ≤ rank · max|entry|`.
    pub rank: f64,
    /// Eigenvalue residual bound: every returned `λ` satisfies
    /// `σ_min(M − λI) ≤ eig · ‖M‖`.
    pub eig: f64,
    /// Rank threshold for eigenspace extraction (nullspace of `Mᵀ − λI`).
    /// Looser than `rank` because computed eigenvalues of defective blocks
    /// carry an error of roughly `ε^(1/k)` for a block of size `k`.
    pub eig_vec: f64,
    /// Orthonormality slack for computed orthonormal bases.
    pub orth: f64,
    /// Maximum admissible violation of an algebra axiom
    /// (commutativity, associativity, identity law).
    pub axiom: f64,
    /// Character acceptance: `|φ(e) − 1|` and the multiplicativity residual
    /// on basis pairs must stay below this; also the dedup radius for
    /// functionals under the max-norm.
    pub character: f64,
    /// Subspace membership / ideal closure residual threshold.
    pub ideal: f64,
    /// Radius for merging spectrum values into one reported eigenvalue.
    /// Well above eigensolver residual, far below any catalog eigenvalue gap.
    pub dedup: f64,
    /// Probe-eigenvalue merge radius used by the character search, as a
    /// fraction of `1 + ‖M‖`. A defective eigenvalue of multiplicity `k`
    /// scatters like `ε^(1/k)` but the scatter is nearly symmetric, so the
    /// cluster centroid recovers the true value; this radius must dominate
    /// the worst scatter while staying far below the value gaps of a random
    /// probe (unlucky merges are absorbed by the retry loop).
    pub char_cluster: f64,
    /// Admissible negative slack in norm inequalities (triangle,
    /// submultiplicativity) caused by rounding alone.
    pub margin: f64,
    /// Admissible slack in spectral bounds (`spectral radius ≤ ‖x‖`,
    /// `|φ(x)| ≤ ‖x‖`).
    pub bound_slack: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            solve: 1e-8,
            rank: 1e-10,
            eig: 1e-9,
            eig_vec: 1e-7,
            orth: 1e-10,
            axiom: 1e-9,
            character: 1e-8,
            ideal: 1e-8,
            dedup: 1e-7,
            char_cluster: 2e-3,
            margin: 1e-12,
            bound_slack: 1e-8,
        }
    }
}

/// Invalid value in the tolerance override environment variable.
#[derive(Debug, Error)]
#[error("{var} must be a positive finite number, got {value:?}")]
pub struct TolEnvError {
    pub var: &'static str,
    pub value: String,
}

impl Tolerances {
    /// Defaults, scaled by the factor in [`TOL_SCALE_ENV`] when set.
    pub fn from_env() -> Result<Self, TolEnvError> {
        match std::env::var(TOL_SCALE_ENV) {
            Err(_) => Ok(Self::default()),
            Ok(raw) => {
                let scale: f64 = raw.parse().map_err(|_| TolEnvError {
                    var: TOL_SCALE_ENV,
                    value: raw.clone(),
                })?;
                if !scale.is_finite() || scale <= 0.0 {
                    return Err(TolEnvError {
                        var: TOL_SCALE_ENV,
                        value: raw,
                    });
                }
                Ok(Self::default().scaled(scale))
            }
        }
    }

    /// Multiply every threshold by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Tolerances {
            solve: self.solve * factor,
            rank: self.rank * factor,
            eig: self.eig * factor,
            eig_vec: self.eig_vec * factor,
            orth: self.orth * factor,
            axiom: self.axiom * factor,
            character: self.character * factor,
            ideal: self.ideal * factor,
            dedup: self.dedup * factor,
            char_cluster: self.char_cluster * factor,
            margin: self.margin * factor,
            bound_slack: self.bound_slack * factor,
        }
    }
}
