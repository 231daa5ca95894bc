//! Norms on algebras: the sup norm on function algebras, the ℓ¹ norm on
//! convolution algebras, and a coordinate ℓ¹ fallback available on any
//! basis. Submultiplicativity of the fallback is verified by
//! [`check_normed_algebra`], never assumed. Also the geometric series
//! inverse of `λe − x` for `‖x‖ < |λ|` and the spectral bound reports.

use crate::algebra::{Algebra, AlgebraFlavor, Element};
use crate::batch;
use crate::character::{characters, spectral_radius, CharacterError};
use crate::linalg::Scalar;
use crate::tol::Tolerances;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// `max_p |f(p)|`; requires a function algebra.
    Sup,
    /// `Σ_a |f(a)|` on the δ basis; requires a semigroup convolution algebra.
    L1,
    /// `Σ_i |x_i|` on whatever the basis is; applicable to any algebra.
    CoordinateL1,
}

impl NormKind {
    pub fn name(&self) -> &'static str {
        match self {
            NormKind::Sup => "sup",
            NormKind::L1 => "l1",
            NormKind::CoordinateL1 => "coordinate-l1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormError {
    #[error("norm `{kind}` does not apply to this algebra")]
    Inapplicable { kind: &'static str },
    #[error("series precondition violated: ‖x‖ = {norm_x} is not below |λ| = {abs_lambda}")]
    PreconditionViolated { norm_x: f64, abs_lambda: f64 },
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// Evaluate the norm, checking applicability.
pub fn norm(kind: NormKind, algebra: &Algebra, x: &Element) -> Result<f64, NormError> {
    check_applicable(kind, algebra)?;
    Ok(match kind {
        NormKind::Sup => x.coords().iter().map(|z| z.norm()).fold(0.0, f64::max),
        NormKind::L1 | NormKind::CoordinateL1 => x.coords().iter().map(|z| z.norm()).sum(),
    })
}

fn check_applicable(kind: NormKind, algebra: &Algebra) -> Result<(), NormError> {
    let ok = match kind {
        NormKind::Sup => algebra.flavor() == AlgebraFlavor::FunctionAlgebra,
        NormKind::L1 => algebra.flavor() == AlgebraFlavor::SemigroupAlgebra,
        NormKind::CoordinateL1 => true,
    };
    if ok {
        Ok(())
    } else {
        Err(NormError::Inapplicable { kind: kind.name() })
    }
}

/// Worst slacks observed over a randomized check of the normed-algebra
/// laws. Margins are `bound − actual`, so violations are negative.
#[derive(Debug, Clone, PartialEq)]
pub struct NormCheckReport {
    pub kind: NormKind,
    pub trials: usize,
    pub seed: u64,
    /// `|‖e‖ − 1|`.
    pub identity_norm_error: f64,
    /// min over trials of `‖x‖ + ‖y‖ − ‖x + y‖`.
    pub triangle_margin: f64,
    /// min over trials of `‖x‖·‖y‖ − ‖x·y‖`.
    pub submultiplicativity_margin: f64,
    /// max over trials of `|‖αx‖ − |α|·‖x‖|`.
    pub homogeneity_error: f64,
}

impl NormCheckReport {
    /// Clean iff every law holds up to rounding slack.
    pub fn passed(&self, tol: &Tolerances) -> bool {
        self.identity_norm_error <= tol.margin
            && self.triangle_margin >= -tol.margin
            && self.submultiplicativity_margin >= -tol.margin
            && self.homogeneity_error <= tol.margin
    }
}

/// Check the normed-algebra laws (`‖e‖ = 1`, triangle inequality,
/// submultiplicativity, absolute homogeneity) on `trials` random pairs.
/// Trials are independent and keyed by index, so the sweep parallelizes
/// with a deterministic aggregate.
pub fn check_normed_algebra(
    algebra: &Algebra,
    kind: NormKind,
    trials: usize,
    seed: u64,
) -> Result<NormCheckReport, NormError> {
    check_applicable(kind, algebra)?;
    let e_norm = norm(kind, algebra, &algebra.identity())?;
    let per_trial = |t: usize| -> (f64, f64, f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let x = algebra.random_element(&mut rng);
        let y = algebra.random_element(&mut rng);
        let alpha = Scalar::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let nx = norm(kind, algebra, &x).expect("applicability already checked");
        let ny = norm(kind, algebra, &y).expect("applicability already checked");
        let triangle = nx + ny - norm(kind, algebra, &x.add(&y)).expect("applicable");
        let submult = nx * ny - norm(kind, algebra, &algebra.multiply(&x, &y)).expect("applicable");
        let homog =
            (norm(kind, algebra, &x.scale(alpha)).expect("applicable") - alpha.norm() * nx).abs();
        (triangle, submult, homog)
    };
    let results = batch::run(trials, per_trial);
    let mut triangle_margin = f64::INFINITY;
    let mut submultiplicativity_margin = f64::INFINITY;
    let mut homogeneity_error = 0.0f64;
    for (t, s, h) in results {
        triangle_margin = triangle_margin.min(t);
        submultiplicativity_margin = submultiplicativity_margin.min(s);
        homogeneity_error = homogeneity_error.max(h);
    }
    if trials == 0 {
        triangle_margin = 0.0;
        submultiplicativity_margin = 0.0;
    }
    Ok(NormCheckReport {
        kind,
        trials,
        seed,
        identity_norm_error: (e_norm - 1.0).abs(),
        triangle_margin,
        submultiplicativity_margin,
        homogeneity_error,
    })
}

/// Outcome of the geometric series inversion.
#[derive(Debug, Clone, PartialEq)]
pub struct NeumannResult {
    pub inverse: Element,
    pub terms: usize,
    /// A priori bound on `‖(λe − x)·y − e‖` from the geometric tail.
    pub residual_bound: f64,
}

/// Invert `λe − x` by summing `λ⁻¹ Σ_j (x/λ)^j`, valid when `‖x‖ < |λ|`
/// strictly. The series as usually stated omits the leading `λ⁻¹`; the
/// extra factor is carried here so that `(λe − x)·y = e` exactly, with the
/// same convergence condition. Truncation uses the geometric tail with
/// ratio `r = ‖x‖/|λ|`: the sum stops once the current term's norm falls
/// below `tol_series·(1 − r)` and the tail bound `r^(j+1)` is below
/// `tol_series`, which guarantees the returned residual bound.
pub fn neumann_inverse(
    algebra: &Algebra,
    kind: NormKind,
    lambda: Scalar,
    x: &Element,
    tol_series: f64,
) -> Result<NeumannResult, NormError> {
    check_applicable(kind, algebra)?;
    let norm_x = norm(kind, algebra, x)?;
    let abs_lambda = lambda.norm();
    if norm_x >= abs_lambda || !abs_lambda.is_finite() {
        return Err(NormError::PreconditionViolated {
            norm_x,
            abs_lambda,
        });
    }
    let ratio = norm_x / abs_lambda;
    let lambda_inv = Scalar::new(1.0, 0.0) / lambda;
    let mut term = algebra.identity().scale(lambda_inv);
    let mut sum = algebra.zero();
    let mut tail = ratio; // r^(j+1) after adding term j
    let mut terms = 0usize;
    loop {
        sum = sum.add(&term);
        terms += 1;
        let term_norm = norm(kind, algebra, &term)?;
        if term_norm < tol_series * (1.0 - ratio) && tail <= tol_series {
            break;
        }
        term = algebra.multiply(&term, x).scale(lambda_inv);
        tail *= ratio;
        if terms > 1_000_000 {
            break; // ratio extremely close to 1; the bound still holds
        }
    }
    Ok(NeumannResult {
        inverse: sum,
        terms,
        residual_bound: tail.min(1.0),
    })
}

/// Margins of the spectral bounds for one element: the spectral radius and
/// every character value are dominated by any submultiplicative norm.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralBoundsReport {
    pub norm: f64,
    pub spectral_radius: f64,
    pub max_character_abs: f64,
    /// `‖x‖ − spectral radius` (nonnegative up to slack).
    pub spectral_margin: f64,
    /// `‖x‖ − max |φ(x)|` (nonnegative up to slack).
    pub character_margin: f64,
}

impl SpectralBoundsReport {
    pub fn passed(&self, tol: &Tolerances) -> bool {
        self.spectral_margin >= -tol.bound_slack && self.character_margin >= -tol.bound_slack
    }
}

/// Check `spectral_radius(x) ≤ ‖x‖` and `max_φ |φ(x)| ≤ ‖x‖`, reporting the
/// margins.
pub fn verify_spectral_bounds(
    algebra: &Algebra,
    kind: NormKind,
    x: &Element,
    tol: &Tolerances,
    seed: u64,
) -> Result<SpectralBoundsReport, NormError> {
    let n = norm(kind, algebra, x)?;
    let sr = spectral_radius(algebra, x, tol)?;
    let chars = characters(algebra, tol, seed)?;
    let max_character_abs = chars
        .iter()
        .map(|ch| ch.evaluate(x).norm())
        .fold(0.0, f64::max);
    Ok(SpectralBoundsReport {
        norm: n,
        spectral_radius: sr,
        max_character_abs,
        spectral_margin: n - sr,
        character_margin: n - max_character_abs,
    })
}
