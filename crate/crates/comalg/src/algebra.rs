//! Finite-dimensional commutative algebras with identity, given by a dense
//! structure-constant tensor, plus the two standard example families:
//! pointwise function algebras and polynomial quotient rings.

use crate::linalg::{Lu, Matrix, Scalar};
use crate::tol::Tolerances;
use rand::Rng;
use std::fmt;
use thiserror::Error;

/// How the algebra arose; some operations only apply to specific families
/// (coordinate evaluations, the sup norm, the subset–ideal dictionary).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraFlavor {
    General,
    /// Complex-valued functions on a finite set under pointwise product;
    /// the basis vectors are the indicator functions of the points.
    FunctionAlgebra,
    /// Convolution algebra of a finite commutative semigroup; the basis
    /// vectors are the one-point functions δ_a.
    SemigroupAlgebra,
}

/// A commutative complex algebra with identity, of dimension `dim`:
/// `b_i · b_j = Σ_k c[i][j][k] b_k` with the identity's coordinates stored
/// explicitly. Values are immutable after construction and every operation
/// is a pure function, so sharing across threads is safe.
#[derive(Clone)]
pub struct Algebra {
    dim: usize,
    basis_names: Vec<String>,
    /// Flat structure-constant tensor, indexed `[(i·dim + j)·dim + k]`.
    c: Vec<Scalar>,
    identity: Vec<Scalar>,
    flavor: AlgebraFlavor,
}

/// Coordinate vector of an algebra element in the algebra's basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    coords: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("structure tensor has {actual} entries, expected dim³ = {expected}")]
    TensorShape { expected: usize, actual: usize },
    #[error("dimension mismatch: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("non-finite component at index {index}")]
    NonFinite { index: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("basis name list has {actual} entries, expected {expected}")]
    NameCount { expected: usize, actual: usize },
    #[error("polynomial must be monic of degree ≥ 1")]
    NotMonic,
}

/// Returned by [`Algebra::invert`] when the element has no inverse. This is
/// a mathematically meaningful outcome, not a fault: it is exactly the case
/// in which the principal ideal of the element is proper and a vanishing
/// character exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("element is not invertible")]
pub struct NotInvertible;

impl Element {
    /// Wrap a coordinate vector, rejecting non-finite components.
    pub fn new(coords: Vec<Scalar>) -> Result<Self, AlgebraError> {
        for (index, z) in coords.iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(AlgebraError::NonFinite { index });
            }
        }
        Ok(Element { coords })
    }

    pub fn from_reals(coords: &[f64]) -> Result<Self, AlgebraError> {
        Element::new(coords.iter().map(|&r| Scalar::new(r, 0.0)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn max_norm(&self) -> f64 {
        self.coords.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|z| z * s).collect(),
        }
    }
}

impl Algebra {
    /// Assemble an algebra from raw parts. Only shapes and finiteness are
    /// checked here; axiom validation is opt-in through [`Algebra::validate`]
    /// (mandatory for untrusted files, redundant for the internal
    /// constructors, which produce valid tensors by construction).
    pub fn new(
        dim: usize,
        basis_names: Option<Vec<String>>,
        c: Vec<Scalar>,
        identity: Vec<Scalar>,
        flavor: AlgebraFlavor,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if c.len() != dim * dim * dim {
            return Err(AlgebraError::TensorShape {
                expected: dim * dim * dim,
                actual: c.len(),
            });
        }
        if identity.len() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                actual: identity.len(),
            });
        }
        for (index, z) in c.iter().chain(identity.iter()).enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(AlgebraError::NonFinite { index });
            }
        }
        let basis_names = match basis_names {
            Some(names) => {
                if names.len() != dim {
                    return Err(AlgebraError::NameCount {
                        expected: dim,
                        actual: names.len(),
                    });
                }
                names
            }
            None => (0..dim).map(|i| format!("b{i}")).collect(),
        };
        Ok(Algebra {
            dim,
            basis_names,
            c,
            identity,
            flavor,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn flavor(&self) -> AlgebraFlavor {
        self.flavor
    }

    #[inline]
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn identity(&self) -> Element {
        Element {
            coords: self.identity.clone(),
        }
    }

    pub fn zero(&self) -> Element {
        Element {
            coords: vec![Scalar::new(0.0, 0.0); self.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim);
        let mut coords = vec![Scalar::new(0.0, 0.0); self.dim];
        coords[i] = Scalar::new(1.0, 0.0);
        Element { coords }
    }

    /// Validate and wrap coordinates as an element of this algebra.
    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        if coords.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                actual: coords.len(),
            });
        }
        Element::new(coords)
    }

    /// Bilinear product: `result_k = Σ_{i,j} x_i y_j c[i][j][k]`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.dim(), self.dim, "left factor from a different algebra");
        assert_eq!(y.dim(), self.dim, "right factor from a different algebra");
        let n = self.dim;
        let mut out = vec![Scalar::new(0.0, 0.0); n];
        for i in 0..n {
            let xi = x.coords[i];
            if xi.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = xi * y.coords[j];
                if w.norm_sqr() == 0.0 {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += w * self.structure_constant(i, j, k);
                }
            }
        }
        Element { coords: out }
    }

    /// The matrix of "multiply by x" in the algebra basis:
    /// `M_x · y-coords = (x·y)-coords`. Sends the identity to the identity
    /// matrix and products to matrix products.
    pub fn regular_representation(&self, x: &Element) -> Matrix {
        assert_eq!(x.dim(), self.dim, "element from a different algebra");
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| {
            // Column j is x·b_j.
            let mut acc = Scalar::new(0.0, 0.0);
            for i in 0..n {
                acc += x.coords[i] * self.structure_constant(i, j, k);
            }
            acc
        })
    }

    /// Multiplicative inverse through the regular representation: solve
    /// `M_x · y = e`. Not invertible exactly when `M_x` is singular at the
    /// rank threshold.
    pub fn invert(&self, x: &Element, tol: &Tolerances) -> Result<Element, NotInvertible> {
        let m = self.regular_representation(x);
        let lu = Lu::factor(&m);
        match lu.solve(&self.identity, tol.rank) {
            Ok(coords) => Ok(Element { coords }),
            Err(_) => Err(NotInvertible),
        }
    }

    /// Check the algebra axioms entrywise and report the worst violation of
    /// each; passes iff every violation is at most `tol.axiom`.
    pub fn validate(&self, tol: &Tolerances) -> ValidationReport {
        let n = self.dim;
        let mut checks = Vec::with_capacity(4);

        // Commutativity: c[i][j][k] = c[j][i][k].
        let mut worst = 0.0f64;
        let mut at = None;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = (self.structure_constant(i, j, k) - self.structure_constant(j, i, k)).norm();
                    if v > worst {
                        worst = v;
                        at = Some([i, j, k, 0]);
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::Commutativity, worst, at, tol.axiom));

        // Associativity: Σ_m c[i][j][m]·c[m][k][l] = Σ_m c[j][k][m]·c[i][m][l].
        let mut worst = 0.0f64;
        let mut at = None;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut lhs = Scalar::new(0.0, 0.0);
                        let mut rhs = Scalar::new(0.0, 0.0);
                        for m in 0..n {
                            lhs += self.structure_constant(i, j, m) * self.structure_constant(m, k, l);
                            rhs += self.structure_constant(j, k, m) * self.structure_constant(i, m, l);
                        }
                        let v = (lhs - rhs).norm();
                        if v > worst {
                            worst = v;
                            at = Some([i, j, k, l]);
                        }
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::Associativity, worst, at, tol.axiom));

        // Identity law: e·b_j = b_j.
        let mut worst = 0.0f64;
        let mut at = None;
        let e = self.identity();
        for j in 0..n {
            let prod = self.multiply(&e, &self.basis_element(j));
            for k in 0..n {
                let expected = if k == j { 1.0 } else { 0.0 };
                let v = (prod.coords[k] - Scalar::new(expected, 0.0)).norm();
                if v > worst {
                    worst = v;
                    at = Some([j, k, 0, 0]);
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::IdentityLaw, worst, at, tol.axiom));

        // The identity element must be nonzero.
        let enorm = e.max_norm();
        let violation = if enorm == 0.0 { 1.0 } else { 0.0 };
        checks.push(AxiomCheck::new(Axiom::IdentityNonzero, violation, None, tol.axiom));

        ValidationReport { checks }
    }

    /// Random element with coordinates uniform on the complex unit disc:
    /// bounded and scale-free, which is what the verification sweeps want.
    pub fn random_element(&self, rng: &mut impl Rng) -> Element {
        Element {
            coords: (0..self.dim).map(|_| random_unit_disc(rng)).collect(),
        }
    }
}

pub(crate) fn random_unit_disc(rng: &mut impl Rng) -> Scalar {
    loop {
        let re = rng.gen_range(-1.0..=1.0);
        let im = rng.gen_range(-1.0..=1.0);
        if re * re + im * im <= 1.0 {
            return Scalar::new(re, im);
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("dim", &self.dim)
            .field("flavor", &self.flavor)
            .field("basis_names", &self.basis_names)
            .finish()
    }
}

/// One algebra axiom, as reported by [`Algebra::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Commutativity,
    Associativity,
    IdentityLaw,
    IdentityNonzero,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::IdentityLaw => "identity law",
            Axiom::IdentityNonzero => "identity nonzero",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub max_violation: f64,
    /// Indices of the worst violation, when meaningful: `(i, j, k, l)` for
    /// associativity, `(i, j, k, ·)` for commutativity, `(j, k, ·, ·)` for
    /// the identity law.
    pub worst_indices: Option<[usize; 4]>,
    pub passed: bool,
}

impl AxiomCheck {
    fn new(axiom: Axiom, max_violation: f64, worst_indices: Option<[usize; 4]>, tol: f64) -> Self {
        AxiomCheck {
            axiom,
            max_violation,
            worst_indices,
            passed: max_violation <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_violation(&self) -> f64 {
        self.checks.iter().map(|c| c.max_violation).fold(0.0, f64::max)
    }

    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// The algebra of complex-valued functions on `n` points under pointwise
/// multiplication: `c[i][j][k] = 1` iff `i = j = k`, identity all-ones.
pub fn function_algebra(n: usize) -> Algebra {
    assert!(n >= 1, "a function algebra needs at least one point");
    let mut c = vec![Scalar::new(0.0, 0.0); n * n * n];
    for i in 0..n {
        c[(i * n + i) * n + i] = Scalar::new(1.0, 0.0);
    }
    let identity = vec![Scalar::new(1.0, 0.0); n];
    let names = (0..n).map(|i| format!("p{i}")).collect();
    Algebra::new(n, Some(names), c, identity, AlgebraFlavor::FunctionAlgebra)
        .expect("function algebra shape is consistent by construction")
}

/// The quotient of the polynomial ring by a monic polynomial, in the basis
/// `1, t, …, t^(deg−1)`. `p` lists the coefficients `p₀ … p_deg` with
/// `p_deg = 1` exactly. Products reduce by `t^deg = −(p₀ + … + p_(deg−1)·t^(deg−1))`.
pub fn polynomial_quotient_algebra(p: &[Scalar]) -> Result<Algebra, AlgebraError> {
    if p.len() < 2 || *p.last().unwrap() != Scalar::new(1.0, 0.0) {
        return Err(AlgebraError::NotMonic);
    }
    let deg = p.len() - 1;
    // Powers of t reduced mod p, up to t^(2·deg−2).
    let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(2 * deg - 1);
    let mut e0 = vec![Scalar::new(0.0, 0.0); deg];
    e0[0] = Scalar::new(1.0, 0.0);
    powers.push(e0);
    for m in 1..=(2 * deg - 2).max(1) {
        let prev = &powers[m - 1];
        let mut next = vec![Scalar::new(0.0, 0.0); deg];
        let carry = prev[deg - 1];
        next[1..deg].copy_from_slice(&prev[..deg - 1]);
        if carry.norm_sqr() != 0.0 {
            for (k, slot) in next.iter_mut().enumerate() {
                let sub = carry * p[k];
                *slot -= sub;
            }
        }
        powers.push(next);
    }
    let mut c = vec![Scalar::new(0.0, 0.0); deg * deg * deg];
    for i in 0..deg {
        for j in 0..deg {
            let pw = &powers[i + j];
            for k in 0..deg {
                c[(i * deg + j) * deg + k] = pw[k];
            }
        }
    }
    let mut identity = vec![Scalar::new(0.0, 0.0); deg];
    identity[0] = Scalar::new(1.0, 0.0);
    let names = (0..deg)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    Algebra::new(deg, Some(names), c, identity, AlgebraFlavor::General)
}
