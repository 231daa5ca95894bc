//! Finite commutative semigroups with identity, their convolution algebras,
//! and semicharacters.
//!
//! Elements are dense indices `0..n`, with `0` the identity; names are
//! display-only. The Cayley table is validated by exact integer checks.
//! Convolution follows the sum over ordered pairs `(x, y)` with `x + y = z`,
//! accumulated over unordered pairs so that `f1 * f2` and `f2 * f1` agree
//! bit for bit.

use crate::algebra::{Algebra, AlgebraFlavor};
use crate::character::{Character, CharacterError};
use crate::linalg::Scalar;
use crate::tol::Tolerances;
use std::fmt;
use thiserror::Error;

/// A finite commutative semigroup with identity: a symmetric Cayley table
/// `table[a][b] = a + b` with `table[a][0] = a`.
#[derive(Clone, PartialEq, Eq)]
pub struct Semigroup {
    size: usize,
    names: Vec<String>,
    /// Flat Cayley table, `table[a·size + b]`.
    table: Vec<usize>,
    identity_index: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SemigroupError {
    #[error("size must be at least 1")]
    Empty,
    #[error("table has {actual} entries, expected {expected}")]
    TableShape { expected: usize, actual: usize },
    #[error("identity index {index} out of range for size {size}")]
    IdentityOutOfRange { index: usize, size: usize },
    #[error("table entry {value} at ({a}, {b}) out of range")]
    EntryOutOfRange { a: usize, b: usize, value: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("name list has {actual} entries, expected {expected}")]
    NameCount { expected: usize, actual: usize },
    #[error("semigroup axioms violated: {0}")]
    Invalid(SemigroupValidation),
    #[error(transparent)]
    Character(#[from] CharacterError),
}

impl Semigroup {
    /// Build and range-check a semigroup; axiom validation is separate
    /// (see [`validate_semigroup`]) and enforced by the file loader.
    pub fn new(
        size: usize,
        names: Option<Vec<String>>,
        table: Vec<usize>,
        identity_index: usize,
    ) -> Result<Self, SemigroupError> {
        if size == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != size * size {
            return Err(SemigroupError::TableShape {
                expected: size * size,
                actual: table.len(),
            });
        }
        if identity_index >= size {
            return Err(SemigroupError::IdentityOutOfRange {
                index: identity_index,
                size,
            });
        }
        for a in 0..size {
            for b in 0..size {
                let v = table[a * size + b];
                if v >= size {
                    return Err(SemigroupError::EntryOutOfRange { a, b, value: v });
                }
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != size {
                    return Err(SemigroupError::NameCount {
                        expected: size,
                        actual: names.len(),
                    });
                }
                names
            }
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(Semigroup {
            size,
            names,
            table,
            identity_index,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// The cyclic group of order `n` under addition.
    pub fn cyclic(n: usize) -> Semigroup {
        assert!(n >= 1);
        let table: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        Semigroup::new(n, None, table, 0).expect("cyclic table is consistent")
    }

    /// The chain `{0, …, k}` under `a + b = max(a, b)`; every element is
    /// idempotent.
    pub fn idempotent_chain(k: usize) -> Semigroup {
        let n = k + 1;
        let table: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| a.max(b)))
            .collect();
        Semigroup::new(n, None, table, 0).expect("chain table is consistent")
    }

    /// The truncation monoid `{0, …, k}` under `a + b = min(a + b, k)`;
    /// its one-point functions behave like nilpotents shifted by the cap.
    pub fn truncation(k: usize) -> Semigroup {
        let n = k + 1;
        let table: Vec<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b).min(k)))
            .collect();
        Semigroup::new(n, None, table, 0).expect("truncation table is consistent")
    }

    /// Direct product with componentwise operation; element `(a, b)` gets
    /// index `a·|T| + b`.
    pub fn product(&self, other: &Semigroup) -> Semigroup {
        let n = self.size * other.size;
        let idx = |a: usize, b: usize| a * other.size + b;
        let mut table = vec![0usize; n * n];
        for a1 in 0..self.size {
            for b1 in 0..other.size {
                for a2 in 0..self.size {
                    for b2 in 0..other.size {
                        let lhs = idx(a1, b1);
                        let rhs = idx(a2, b2);
                        table[lhs * n + rhs] = idx(self.add(a1, a2), other.add(b1, b2));
                    }
                }
            }
        }
        let names = (0..self.size)
            .flat_map(|a| {
                (0..other.size).map(move |b| format!("({},{})", self.names[a], other.names[b]))
            })
            .collect();
        Semigroup::new(n, Some(names), table, idx(self.identity_index, other.identity_index))
            .expect("product table is consistent")
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("size", &self.size)
            .field("identity_index", &self.identity_index)
            .finish()
    }
}

/// Outcome of the exact integer checks on a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupValidation {
    /// `(a, b)` with `a+b ≠ b+a`.
    pub commutativity_failures: Vec<(usize, usize)>,
    /// `a` with `a + 0 ≠ a`.
    pub identity_failures: Vec<usize>,
    /// `(a, b, c)` with `(a+b)+c ≠ a+(b+c)`.
    pub associativity_failures: Vec<(usize, usize, usize)>,
}

impl SemigroupValidation {
    pub fn passed(&self) -> bool {
        self.commutativity_failures.is_empty()
            && self.identity_failures.is_empty()
            && self.associativity_failures.is_empty()
    }
}

impl fmt::Display for SemigroupValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all checks passed");
        }
        if let Some(&(a, b)) = self.commutativity_failures.first() {
            write!(f, "commutativity fails at ({a}, {b}); ")?;
        }
        if let Some(&a) = self.identity_failures.first() {
            write!(f, "identity law fails at {a}; ")?;
        }
        if let Some(&(a, b, c)) = self.associativity_failures.first() {
            write!(f, "associativity fails at ({a}, {b}, {c}); ")?;
        }
        write!(
            f,
            "{} total failures",
            self.commutativity_failures.len()
                + self.identity_failures.len()
                + self.associativity_failures.len()
        )
    }
}

/// Exact integer validation of the three semigroup axioms.
pub fn validate_semigroup(s: &Semigroup) -> SemigroupValidation {
    let n = s.size();
    let mut commutativity_failures = Vec::new();
    let mut identity_failures = Vec::new();
    let mut associativity_failures = Vec::new();
    for a in 0..n {
        if s.add(a, s.identity_index()) != a {
            identity_failures.push(a);
        }
        for b in 0..n {
            if s.add(a, b) != s.add(b, a) {
                commutativity_failures.push((a, b));
            }
            for c in 0..n {
                if s.add(s.add(a, b), c) != s.add(a, s.add(b, c)) {
                    associativity_failures.push((a, b, c));
                }
            }
        }
    }
    SemigroupValidation {
        commutativity_failures,
        identity_failures,
        associativity_failures,
    }
}

/// The one-point function `δ_a`: 1 at `a`, 0 elsewhere.
pub fn delta(s: &Semigroup, a: usize) -> Result<Vec<Scalar>, SemigroupError> {
    if a >= s.size() {
        return Err(SemigroupError::IndexOutOfRange {
            index: a,
            size: s.size(),
        });
    }
    let mut v = vec![Scalar::new(0.0, 0.0); s.size()];
    v[a] = Scalar::new(1.0, 0.0);
    Ok(v)
}

/// Convolution: `(f1 * f2)(z) = Σ_{x+y=z} f1(x) f2(y)`, the sum running over
/// ordered pairs. Terms are accumulated over unordered pairs so the result
/// is bitwise symmetric in `f1`, `f2`.
pub fn convolve(s: &Semigroup, f1: &[Scalar], f2: &[Scalar]) -> Result<Vec<Scalar>, SemigroupError> {
    let n = s.size();
    if f1.len() != n {
        return Err(SemigroupError::DimensionMismatch {
            expected: n,
            actual: f1.len(),
        });
    }
    if f2.len() != n {
        return Err(SemigroupError::DimensionMismatch {
            expected: n,
            actual: f2.len(),
        });
    }
    let mut out = vec![Scalar::new(0.0, 0.0); n];
    for x in 0..n {
        out[s.add(x, x)] += f1[x] * f2[x];
        for y in x + 1..n {
            let z = s.add(x, y);
            out[z] += f1[x] * f2[y] + f1[y] * f2[x];
        }
    }
    Ok(out)
}

/// The convolution algebra: basis `δ_0, …, δ_(n−1)`, structure constants
/// `c[i][j][k] = 1` iff `i + j = k`, identity `δ_0` (after reindexing so the
/// identity element sits at index 0 it is exactly `table[i][j] = k`).
pub fn semigroup_algebra(s: &Semigroup) -> Result<Algebra, SemigroupError> {
    let report = validate_semigroup(s);
    if !report.passed() {
        return Err(SemigroupError::Invalid(report));
    }
    let n = s.size();
    let mut c = vec![Scalar::new(0.0, 0.0); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let k = s.add(i, j);
            c[(i * n + j) * n + k] = Scalar::new(1.0, 0.0);
        }
    }
    let mut identity = vec![Scalar::new(0.0, 0.0); n];
    identity[s.identity_index()] = Scalar::new(1.0, 0.0);
    let names = s.names().iter().map(|nm| format!("d{nm}")).collect();
    Ok(Algebra::new(n, Some(names), c, identity, AlgebraFlavor::SemigroupAlgebra)
        .expect("semigroup tensor shape is consistent"))
}

/// A multiplicative map `Φ` from the semigroup into the complex numbers
/// with `Φ(0) = 1`; equivalently the restriction of an algebra character to
/// the δ basis. On a finite semigroup `|Φ| ≤ 1` with the maximum attained
/// at the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Semicharacter {
    values: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SemicharacterError {
    #[error("Φ(identity) = {got} but must be 1")]
    IdentityValue { got: Scalar },
    #[error("multiplicativity fails at ({a}, {b}) with residual {residual}")]
    NotMultiplicative { a: usize, b: usize, residual: f64 },
    #[error("|Φ({a})| = {modulus} exceeds 1")]
    BoundExceeded { a: usize, modulus: f64 },
    #[error("value vector has {actual} entries, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
}

impl Semicharacter {
    /// Wrap a value vector after checking all three invariants.
    pub fn new(s: &Semigroup, values: Vec<Scalar>, tol: &Tolerances) -> Result<Self, SemicharacterError> {
        if values.len() != s.size() {
            return Err(SemicharacterError::DimensionMismatch {
                expected: s.size(),
                actual: values.len(),
            });
        }
        let one = Scalar::new(1.0, 0.0);
        if (values[s.identity_index()] - one).norm() > tol.character {
            return Err(SemicharacterError::IdentityValue {
                got: values[s.identity_index()],
            });
        }
        for a in 0..s.size() {
            let m = values[a].norm();
            if m > 1.0 + tol.character {
                return Err(SemicharacterError::BoundExceeded { a, modulus: m });
            }
            for b in a..s.size() {
                let residual = (values[s.add(a, b)] - values[a] * values[b]).norm();
                if residual > tol.character {
                    return Err(SemicharacterError::NotMultiplicative { a, b, residual });
                }
            }
        }
        Ok(Semicharacter { values })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// All semicharacters, obtained as the restrictions of the characters of
/// the convolution algebra to the δ basis. Since the δ's are the basis
/// vectors, a character functional and its semicharacter share the same
/// coordinate vector.
pub fn semicharacters(
    s: &Semigroup,
    tol: &Tolerances,
    seed: u64,
) -> Result<Vec<Semicharacter>, SemigroupError> {
    let alg = semigroup_algebra(s)?;
    let chars = crate::character::characters(&alg, tol, seed)?;
    let mut out = Vec::with_capacity(chars.len());
    for ch in chars {
        let values = ch.functional().to_vec();
        let phi = Semicharacter::new(s, values, tol)
            .expect("character restriction must satisfy the semicharacter laws");
        out.push(phi);
    }
    Ok(out)
}

/// Extend a semicharacter linearly to a character of the convolution
/// algebra: `φ(f) = Σ_a Φ(a) f(a)`. The wrapped functional is re-verified
/// against the character invariants, which rejects invalid `Φ`.
pub fn character_from_semicharacter(
    s: &Semigroup,
    phi: &Semicharacter,
    tol: &Tolerances,
) -> Result<Character, SemigroupError> {
    let alg = semigroup_algebra(s)?;
    let ch = Character::new(&alg, phi.values().to_vec(), tol)
        .expect("a valid semicharacter extends to a character");
    Ok(ch)
}
