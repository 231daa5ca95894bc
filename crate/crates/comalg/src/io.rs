//! JSON file formats for algebras and semigroups.
//!
//! Complex numbers are serialized as two-element `[re, im]` arrays, which
//! keeps the files diff-friendly; serde's shortest-roundtrip float encoding
//! makes save∘load the identity bit for bit. Loading validates: algebra
//! files must pass the axiom checks and semigroup files the exact table
//! checks, with the first violation reported with indices and magnitude.

use crate::algebra::{Algebra, AlgebraFlavor, AlgebraError};
use crate::linalg::Scalar;
use crate::semigroup::{validate_semigroup, Semigroup, SemigroupError};
use crate::tol::Tolerances;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("algebra axiom violated: {axiom} at {indices:?} with magnitude {magnitude}")]
    AlgebraValidation {
        axiom: String,
        indices: Vec<usize>,
        magnitude: f64,
    },
    #[error("semigroup axioms violated: {0}")]
    SemigroupValidation(String),
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error(transparent)]
    Shape(#[from] AlgebraError),
    #[error(transparent)]
    SemigroupShape(#[from] SemigroupError),
}

/// On-disk form of an algebra: `dim`, optional `basis_names`, the dim³
/// structure-constant tensor as nested arrays of `[re, im]` pairs, the
/// identity coordinates, and optional tags (`"function_algebra"`,
/// `"semigroup_algebra"`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    pub structure_constants: Vec<Vec<Vec<[f64; 2]>>>,
    pub identity: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
}

/// On-disk form of a semigroup: `size`, optional `names`, the size×size
/// Cayley table, and the identity index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupFile {
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
    pub identity_index: usize,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let structure_constants = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                let z = algebra.structure_constant(i, j, k);
                                [z.re, z.im]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identity = algebra.identity().coords().iter().map(|z| [z.re, z.im]).collect();
        let tags = match algebra.flavor() {
            AlgebraFlavor::General => None,
            AlgebraFlavor::FunctionAlgebra => Some(vec!["function_algebra".to_string()]),
            AlgebraFlavor::SemigroupAlgebra => Some(vec!["semigroup_algebra".to_string()]),
        };
        AlgebraFile {
            dim: n,
            basis_names: Some(algebra.basis_names().to_vec()),
            structure_constants,
            identity,
            tags,
        }
    }

    /// Build and axiom-check the algebra; file input is untrusted, so
    /// validation is mandatory here.
    pub fn into_algebra(self, tol: &Tolerances) -> Result<Algebra, IoError> {
        let n = self.dim;
        let mut flavor = AlgebraFlavor::General;
        if let Some(tags) = &self.tags {
            for tag in tags {
                flavor = match tag.as_str() {
                    "function_algebra" => AlgebraFlavor::FunctionAlgebra,
                    "semigroup_algebra" => AlgebraFlavor::SemigroupAlgebra,
                    other => return Err(IoError::UnknownTag(other.to_string())),
                };
            }
        }
        if self.structure_constants.len() != n {
            return Err(AlgebraError::TensorShape {
                expected: n * n * n,
                actual: self.structure_constants.iter().flatten().flatten().count(),
            }
            .into());
        }
        let mut c = Vec::with_capacity(n * n * n);
        for plane in &self.structure_constants {
            if plane.len() != n {
                return Err(AlgebraError::TensorShape {
                    expected: n * n * n,
                    actual: self.structure_constants.iter().flatten().flatten().count(),
                }
                .into());
            }
            for row in plane {
                if row.len() != n {
                    return Err(AlgebraError::TensorShape {
                        expected: n * n * n,
                        actual: self.structure_constants.iter().flatten().flatten().count(),
                    }
                    .into());
                }
                for &[re, im] in row {
                    c.push(Scalar::new(re, im));
                }
            }
        }
        let identity: Vec<Scalar> = self.identity.iter().map(|&[re, im]| Scalar::new(re, im)).collect();
        let algebra = Algebra::new(n, self.basis_names, c, identity, flavor)?;
        let report = algebra.validate(tol);
        if let Some(check) = report.first_failure() {
            return Err(IoError::AlgebraValidation {
                axiom: check.axiom.to_string(),
                indices: check.worst_indices.map(|ix| ix.to_vec()).unwrap_or_default(),
                magnitude: check.max_violation,
            });
        }
        Ok(algebra)
    }
}

impl SemigroupFile {
    pub fn from_semigroup(s: &Semigroup) -> Self {
        let n = s.size();
        SemigroupFile {
            size: n,
            names: Some(s.names().to_vec()),
            table: (0..n).map(|a| (0..n).map(|b| s.add(a, b)).collect()).collect(),
            identity_index: s.identity_index(),
        }
    }

    /// Build and table-check the semigroup.
    pub fn into_semigroup(self) -> Result<Semigroup, IoError> {
        let flat: Vec<usize> = self.table.iter().flatten().copied().collect();
        let s = Semigroup::new(self.size, self.names, flat, self.identity_index)?;
        let report = validate_semigroup(&s);
        if !report.passed() {
            return Err(IoError::SemigroupValidation(report.to_string()));
        }
        Ok(s)
    }
}

fn parse_error(e: &serde_json::Error) -> IoError {
    IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn load_algebra(path: impl AsRef<Path>, tol: &Tolerances) -> Result<Algebra, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|e| parse_error(&e))?;
    file.into_algebra(tol)
}

pub fn save_algebra(path: impl AsRef<Path>, algebra: &Algebra) -> Result<(), IoError> {
    let path = path.as_ref();
    let text = algebra_to_string(algebra);
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

pub fn algebra_to_string(algebra: &Algebra) -> String {
    let mut text = serde_json::to_string_pretty(&AlgebraFile::from_algebra(algebra))
        .expect("algebra files serialize");
    text.push('\n');
    text
}

pub fn load_semigroup(path: impl AsRef<Path>) -> Result<Semigroup, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let file: SemigroupFile = serde_json::from_str(&text).map_err(|e| parse_error(&e))?;
    file.into_semigroup()
}

pub fn save_semigroup(path: impl AsRef<Path>, s: &Semigroup) -> Result<(), IoError> {
    let path = path.as_ref();
    let text = semigroup_to_string(s);
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

pub fn semigroup_to_string(s: &Semigroup) -> String {
    let mut text = serde_json::to_string_pretty(&SemigroupFile::from_semigroup(s))
        .expect("semigroup files serialize");
    text.push('\n');
    text
}
