//! Finite-dimensional commutative algebras over the complex numbers,
//! represented by structure constants.
//!
//! The central object is [`Algebra`]: a complex vector space of dimension
//! `n` with a commutative, associative product given by a dense tensor
//! `c[i][j][k]` (so `b_i · b_j = Σ_k c[i][j][k] b_k`) and a distinguished
//! identity element. On top of it the crate computes:
//!
//! - products, inverses, and the regular representation ([`algebra`]);
//! - spectra and the full set of characters, i.e. the homomorphisms onto
//!   the complex numbers ([`character`]);
//! - ideals, principal ideals, quotient algebras, and maximal ideals
//!   ([`ideal`]);
//! - convolution algebras of finite commutative semigroups and their
//!   semicharacters ([`semigroup`]);
//! - norms, submultiplicativity checks, spectral bounds, and geometric
//!   series inversion ([`mod@norm`]).
//!
//! Everything is backed by a self-contained dense complex linear-algebra
//! kernel ([`linalg`]) so that each result can be cross-checked by an
//! independent route (eigenvalues vs. character values, convolution vs.
//! structure-constant products, series vs. direct inversion).
//!
//! All numeric thresholds live in one place, [`Tolerances`].
//!
//! With the default `parallel` feature, batch verification sweeps run on
//! rayon; disabling it falls back to an identical sequential path.

pub mod algebra;
pub mod batch;
pub mod catalog;
pub mod character;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod norm;
pub mod semigroup;
pub mod tol;

pub use algebra::{
    function_algebra, polynomial_quotient_algebra, Algebra, AlgebraError, AlgebraFlavor, Axiom,
    Element, NotInvertible, ValidationReport,
};
pub use character::{
    characters, spectral_radius, spectrum, witness_noninvertible, Character, CharacterError,
    Spectrum,
};
pub use ideal::{
    character_kernel, ideal_intersection, ideal_sum, ideal_to_subset, is_ideal, maximal_ideal_containing,
    maximal_ideals, principal_ideal, quotient, vanishing_ideal, Ideal, IdealError, QuotientResult,
};
pub use linalg::{Matrix, Scalar};
pub use norm::{
    check_normed_algebra, neumann_inverse, norm, verify_spectral_bounds, NeumannResult, NormCheckReport,
    NormError, NormKind, SpectralBoundsReport,
};
pub use semigroup::{
    character_from_semicharacter, convolve, delta, semicharacters, semigroup_algebra,
    validate_semigroup, Semicharacter, Semigroup, SemigroupError, SemigroupValidation,
};
pub use tol::Tolerances;
