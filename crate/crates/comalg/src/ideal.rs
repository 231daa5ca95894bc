//! Ideals as subspaces: principal ideals, properness, quotient algebras,
//! maximal ideals via character kernels, and the subset dictionary for
//! function algebras.
//!
//! Ideals are stored as orthonormalized bases; containment and equality are
//! decided by projection residuals, which keeps every comparison
//! basis-independent.

use crate::algebra::{Algebra, AlgebraFlavor, Element};
use crate::character::{characters, Character, CharacterError};
use crate::linalg::{nullspace, ColPivQr, Matrix, Scalar};
use crate::tol::Tolerances;
use thiserror::Error;

/// A linear subspace closed under multiplication by arbitrary algebra
/// elements, stored as an n×r matrix with orthonormal columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    basis: Matrix,
    parent_dim: usize,
}

/// A quotient algebra together with the maps realizing it: `projection`
/// sends parent coordinates onto quotient coordinates (an algebra
/// homomorphism with kernel the ideal), and `section` embeds quotient
/// coordinates back, with `projection ∘ section = identity`.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: Algebra,
    pub projection: Matrix,
    pub section: Matrix,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdealError {
    #[error("input columns are rank-deficient: rank {rank} < {cols}")]
    RankDeficient { rank: usize, cols: usize },
    #[error("subspace is not an ideal: worst closure residual {residual}")]
    NotAnIdeal { residual: f64 },
    #[error("ideal is not proper (it is the whole algebra)")]
    NotProper,
    #[error("operation requires a function algebra")]
    NotFunctionAlgebra,
    #[error("ideal is not a subset ideal: {reason}")]
    NotASubsetIdeal { reason: String },
    #[error("point index {index} out of range for {size} points")]
    PointOutOfRange { index: usize, size: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// Closure verdict from [`is_ideal`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealCheck {
    pub is_ideal: bool,
    pub max_violation: f64,
}

impl Ideal {
    /// Orthonormalize a spanning matrix and verify the closure invariant.
    pub fn from_span(algebra: &Algebra, span: &Matrix, tol: &Tolerances) -> Result<Self, IdealError> {
        if span.rows() != algebra.dim() {
            return Err(IdealError::DimensionMismatch {
                expected: algebra.dim(),
                actual: span.rows(),
            });
        }
        let basis = orthonormal_range(span, tol);
        let check = closure_violation(algebra, &basis);
        if check > tol.ideal {
            return Err(IdealError::NotAnIdeal { residual: check });
        }
        Ok(Ideal {
            basis,
            parent_dim: algebra.dim(),
        })
    }

    /// The zero ideal.
    pub fn zero(algebra: &Algebra) -> Self {
        Ideal {
            basis: Matrix::zeros(algebra.dim(), 0),
            parent_dim: algebra.dim(),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    /// Max-norm distance from a vector to the span.
    pub fn distance_from_span(&self, v: &[Scalar]) -> f64 {
        let proj = self.project(v);
        v.iter()
            .zip(&proj)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Orthogonal projection onto the span.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let coeffs = self.basis.conj_transpose().mul_vec(v);
        self.basis.mul_vec(&coeffs)
    }

    /// Does this ideal contain every column of `other`?
    pub fn contains(&self, other: &Ideal, tol: &Tolerances) -> bool {
        (0..other.basis.cols()).all(|j| self.distance_from_span(&other.basis.column(j)) <= tol.ideal)
    }

    /// Same span, decided by mutual containment.
    pub fn span_equals(&self, other: &Ideal, tol: &Tolerances) -> bool {
        self.dim() == other.dim() && self.contains(other, tol) && other.contains(self, tol)
    }
}

/// Worst residual of `b_i · v` against the span, over all algebra basis
/// vectors `b_i` and span columns `v`.
fn closure_violation(algebra: &Algebra, basis: &Matrix) -> f64 {
    let n = algebra.dim();
    if basis.cols() == 0 {
        return 0.0;
    }
    let tmp = Ideal {
        basis: basis.clone(),
        parent_dim: n,
    };
    let mut worst = 0.0f64;
    for i in 0..n {
        let bi = algebra.basis_element(i);
        for j in 0..basis.cols() {
            let col = Element::new(basis.column(j)).expect("basis entries are finite");
            let prod = algebra.multiply(&bi, &col);
            worst = worst.max(tmp.distance_from_span(prod.coords()));
        }
    }
    worst
}

fn orthonormal_range(span: &Matrix, tol: &Tolerances) -> Matrix {
    ColPivQr::factor(span).range_basis(tol.rank)
}

/// Is the given subspace closed under multiplication by the algebra?
/// The input columns must be independent at the rank tolerance (the zero
/// matrix, spanning the zero subspace, is fine).
pub fn is_ideal(algebra: &Algebra, span: &Matrix, tol: &Tolerances) -> Result<IdealCheck, IdealError> {
    if span.rows() != algebra.dim() {
        return Err(IdealError::DimensionMismatch {
            expected: algebra.dim(),
            actual: span.rows(),
        });
    }
    let qr = ColPivQr::factor(span);
    let rank = qr.rank(tol.rank);
    if rank < span.cols() && span.max_abs() > 0.0 {
        return Err(IdealError::RankDeficient {
            rank,
            cols: span.cols(),
        });
    }
    let basis = qr.range_basis(tol.rank);
    let violation = closure_violation(algebra, &basis);
    Ok(IdealCheck {
        is_ideal: violation <= tol.ideal,
        max_violation: violation,
    })
}

/// The principal ideal of `x`: all multiples `a·x`, i.e. the column space
/// of the regular representation of `x`, orthonormalized. `x = 0` gives the
/// zero ideal.
pub fn principal_ideal(algebra: &Algebra, x: &Element, tol: &Tolerances) -> Ideal {
    let m = algebra.regular_representation(x);
    Ideal {
        basis: orthonormal_range(&m, tol),
        parent_dim: algebra.dim(),
    }
}

/// Proper means not the whole algebra; for principal ideals this agrees
/// with non-invertibility of the generator.
pub fn is_proper(algebra: &Algebra, ideal: &Ideal) -> bool {
    ideal.dim() < algebra.dim()
}

/// The quotient algebra by a proper ideal, with the projection and a
/// section. The section columns span the orthogonal complement of the
/// ideal, which makes the construction deterministic and well-conditioned;
/// the projection is `sectionᴴ`, whose kernel is exactly the ideal span.
pub fn quotient(algebra: &Algebra, ideal: &Ideal, tol: &Tolerances) -> Result<QuotientResult, IdealError> {
    let n = algebra.dim();
    if !is_proper(algebra, ideal) {
        return Err(IdealError::NotProper);
    }
    let violation = closure_violation(algebra, ideal.basis());
    if violation > tol.ideal {
        return Err(IdealError::NotAnIdeal { residual: violation });
    }
    // Complete the ideal basis to a unitary basis of the parent space; the
    // tail columns span the complement.
    let qr = ColPivQr::factor(ideal.basis());
    let section = if ideal.dim() == 0 {
        Matrix::identity(n)
    } else {
        qr.q.column_block(ideal.dim(), n)
    };
    let projection = section.conj_transpose();
    let qdim = n - ideal.dim();

    // Structure constants: multiply section columns in the parent, project.
    let mut c = vec![Scalar::new(0.0, 0.0); qdim * qdim * qdim];
    for i in 0..qdim {
        let si = Element::new(section.column(i)).expect("section entries are finite");
        for j in i..qdim {
            let sj = Element::new(section.column(j)).expect("section entries are finite");
            let prod = algebra.multiply(&si, &sj);
            let projected = projection.mul_vec(prod.coords());
            for k in 0..qdim {
                c[(i * qdim + j) * qdim + k] = projected[k];
                c[(j * qdim + i) * qdim + k] = projected[k];
            }
        }
    }
    let identity = projection.mul_vec(algebra.identity().coords());
    let names = (0..qdim).map(|i| format!("q{i}")).collect();
    let quotient_algebra = Algebra::new(qdim, Some(names), c, identity, AlgebraFlavor::General)
        .expect("quotient shapes are consistent by construction");
    Ok(QuotientResult {
        quotient: quotient_algebra,
        projection,
        section,
    })
}

/// The kernel of a character: an ideal of dimension `dim − 1` on which the
/// character vanishes.
pub fn character_kernel(algebra: &Algebra, character: &Character, tol: &Tolerances) -> Ideal {
    let row = Matrix::from_rows(&[character.functional().to_vec()]);
    let basis = nullspace(&row, tol.rank);
    debug_assert_eq!(basis.cols(), algebra.dim() - 1);
    Ideal {
        basis,
        parent_dim: algebra.dim(),
    }
}

/// All maximal ideals, one per character, deduplicated by span equality.
pub fn maximal_ideals(algebra: &Algebra, tol: &Tolerances, seed: u64) -> Result<Vec<Ideal>, IdealError> {
    let chars = characters(algebra, tol, seed)?;
    let mut out: Vec<Ideal> = Vec::with_capacity(chars.len());
    for ch in &chars {
        let ker = character_kernel(algebra, ch, tol);
        if !out.iter().any(|k| k.span_equals(&ker, tol)) {
            out.push(ker);
        }
    }
    Ok(out)
}

/// A maximal ideal containing the given proper ideal: quotient by it, take
/// any character of the quotient, pull it back through the projection, and
/// return the pullback's kernel.
pub fn maximal_ideal_containing(
    algebra: &Algebra,
    ideal: &Ideal,
    tol: &Tolerances,
    seed: u64,
) -> Result<Ideal, IdealError> {
    let q = quotient(algebra, ideal, tol)?;
    let chars = characters(&q.quotient, tol, seed)?;
    let psi = chars.first().expect("character count is at least 1");
    // φ = ψ ∘ projection, as a functional: Pᵀ·ψ (bilinear pairing).
    let pulled: Vec<Scalar> = (0..algebra.dim())
        .map(|j| {
            let mut acc = Scalar::new(0.0, 0.0);
            for k in 0..q.quotient.dim() {
                acc += psi.functional()[k] * q.projection[(k, j)];
            }
            acc
        })
        .collect();
    let phi = Character::new(algebra, pulled, tol)?;
    Ok(character_kernel(algebra, &phi, tol))
}

/// Functions vanishing on a set of points: the span of the coordinates
/// outside `points`. Proper iff `points` is nonempty. Requires a function
/// algebra.
pub fn vanishing_ideal(algebra: &Algebra, points: &[usize]) -> Result<Ideal, IdealError> {
    if algebra.flavor() != AlgebraFlavor::FunctionAlgebra {
        return Err(IdealError::NotFunctionAlgebra);
    }
    let n = algebra.dim();
    let mut inside = vec![false; n];
    for &p in points {
        if p >= n {
            return Err(IdealError::PointOutOfRange { index: p, size: n });
        }
        inside[p] = true;
    }
    let columns: Vec<Vec<Scalar>> = (0..n)
        .filter(|&p| !inside[p])
        .map(|p| {
            let mut v = vec![Scalar::new(0.0, 0.0); n];
            v[p] = Scalar::new(1.0, 0.0);
            v
        })
        .collect();
    let basis = Matrix::from_columns(n, &columns);
    Ok(Ideal {
        basis,
        parent_dim: n,
    })
}

/// The vanishing set of an ideal of a function algebra: the subset `E` with
/// `vanishing_ideal(E)` equal to the ideal. Every true ideal of a function
/// algebra is of this form, so failure signals a closure violation that
/// slipped past tolerance.
pub fn ideal_to_subset(algebra: &Algebra, ideal: &Ideal, tol: &Tolerances) -> Result<Vec<usize>, IdealError> {
    if algebra.flavor() != AlgebraFlavor::FunctionAlgebra {
        return Err(IdealError::NotFunctionAlgebra);
    }
    let n = algebra.dim();
    // δ_p lies in the span iff row p of the orthonormal basis has unit norm;
    // for a coordinate-subspace span every row norm is 0 or 1.
    let mut support = Vec::new();
    for p in 0..n {
        let row_norm_sq: f64 = (0..ideal.basis().cols()).map(|j| ideal.basis()[(p, j)].norm_sqr()).sum();
        let row_norm = row_norm_sq.sqrt();
        if (row_norm - 1.0).abs() <= tol.ideal {
            support.push(p);
        } else if row_norm > tol.ideal {
            return Err(IdealError::NotASubsetIdeal {
                reason: format!("basis row {p} has norm {row_norm}, neither 0 nor 1"),
            });
        }
    }
    if support.len() != ideal.dim() {
        return Err(IdealError::NotASubsetIdeal {
            reason: format!(
                "support size {} does not match ideal dimension {}",
                support.len(),
                ideal.dim()
            ),
        });
    }
    Ok((0..n).filter(|p| !support.contains(p)).collect())
}

/// Intersection of two ideals: solve `B₁u = B₂v` through the nullspace of
/// `[B₁ | −B₂]` and orthonormalize the common part.
pub fn ideal_intersection(algebra: &Algebra, a: &Ideal, b: &Ideal, tol: &Tolerances) -> Ideal {
    let n = algebra.dim();
    let ra = a.dim();
    let rb = b.dim();
    if ra == 0 || rb == 0 {
        return Ideal::zero(algebra);
    }
    let stacked = Matrix::from_fn(n, ra + rb, |i, j| {
        if j < ra {
            a.basis()[(i, j)]
        } else {
            -b.basis()[(i, j - ra)]
        }
    });
    let null = nullspace(&stacked, tol.rank);
    if null.cols() == 0 {
        return Ideal::zero(algebra);
    }
    // Map coefficient nullspace back into the parent space through B₁.
    let coeffs_a = Matrix::from_fn(ra, null.cols(), |i, j| null[(i, j)]);
    let common = a.basis().mul(&coeffs_a);
    Ideal {
        basis: orthonormal_range(&common, tol),
        parent_dim: n,
    }
}

/// Sum of two ideals: the span of the union of their bases.
pub fn ideal_sum(algebra: &Algebra, a: &Ideal, b: &Ideal, tol: &Tolerances) -> Ideal {
    let n = algebra.dim();
    let cols: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|j| a.basis().column(j))
        .chain((0..b.dim()).map(|j| b.basis().column(j)))
        .collect();
    if cols.is_empty() {
        return Ideal::zero(algebra);
    }
    let stacked = Matrix::from_columns(n, &cols);
    Ideal {
        basis: orthonormal_range(&stacked, tol),
        parent_dim: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{function_algebra, polynomial_quotient_algebra};
    use crate::semigroup::{semigroup_algebra, Semigroup};

    const SEED: u64 = 0xC0FFEE;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    fn dual_numbers() -> Algebra {
        polynomial_quotient_algebra(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap()
    }

    #[test]
    fn span_of_t_is_an_ideal_in_dual_numbers() {
        // e·t = t and t·t = 0 both stay in span{t}.
        let a = dual_numbers();
        let tol = Tolerances::default();
        let span = Matrix::from_columns(2, &[vec![c(0.0, 0.0), c(1.0, 0.0)]]);
        let check = is_ideal(&a, &span, &tol).unwrap();
        assert!(check.is_ideal);
        assert!(check.max_violation <= 1e-14);
    }

    #[test]
    fn span_of_identity_is_not_an_ideal() {
        let a = function_algebra(2);
        let tol = Tolerances::default();
        let span = Matrix::from_columns(2, &[vec![c(1.0, 0.0), c(1.0, 0.0)]]);
        let check = is_ideal(&a, &span, &tol).unwrap();
        assert!(!check.is_ideal);
        assert!(check.max_violation > 0.1);
    }

    #[test]
    fn zero_subspace_is_an_ideal() {
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let check = is_ideal(&a, &Matrix::zeros(3, 0), &tol).unwrap();
        assert!(check.is_ideal);
        assert_eq!(check.max_violation, 0.0);
    }

    #[test]
    fn principal_ideal_of_identity_is_everything() {
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let full = principal_ideal(&a, &a.identity(), &tol);
        assert_eq!(full.dim(), 3);
        assert!(!is_proper(&a, &full));
    }

    #[test]
    fn principal_ideal_of_nilpotent_is_its_line() {
        let a = dual_numbers();
        let tol = Tolerances::default();
        let ideal = principal_ideal(&a, &a.basis_element(1), &tol);
        assert_eq!(ideal.dim(), 1);
        assert!(is_proper(&a, &ideal));
        assert!(ideal.distance_from_span(&[c(0.0, 0.0), c(1.0, 0.0)]) <= 1e-12);
    }

    #[test]
    fn principal_ideal_of_an_indicator_is_its_coordinate() {
        let a = function_algebra(2);
        let tol = Tolerances::default();
        let ideal = principal_ideal(&a, &a.basis_element(0), &tol);
        assert_eq!(ideal.dim(), 1);
        assert!(ideal.distance_from_span(&[c(1.0, 0.0), c(0.0, 0.0)]) <= 1e-12);
    }

    #[test]
    fn zero_ideal_is_proper() {
        let a = function_algebra(2);
        assert!(is_proper(&a, &Ideal::zero(&a)));
    }

    #[test]
    fn quotient_by_a_coordinate_is_evaluation_at_the_other() {
        let a = function_algebra(2);
        let tol = Tolerances::default();
        let ideal = vanishing_ideal(&a, &[1]).unwrap(); // span{(1,0)}
        let q = quotient(&a, &ideal, &tol).unwrap();
        assert_eq!(q.quotient.dim(), 1);
        assert!(q.quotient.validate(&tol).passed());
        // The projection must kill the ideal and act injectively elsewhere.
        let killed = q.projection.mul_vec(&[c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(killed[0].norm() <= 1e-12);
        // Homomorphism check on the basis.
        for i in 0..2 {
            for j in 0..2 {
                let bi = a.basis_element(i);
                let bj = a.basis_element(j);
                let lhs = q.projection.mul_vec(a.multiply(&bi, &bj).coords());
                let pi = q.projection.mul_vec(bi.coords());
                let pj = q.projection.mul_vec(bj.coords());
                let pie = Element::new(pi).unwrap();
                let pje = Element::new(pj).unwrap();
                let rhs = q.quotient.multiply(&pie, &pje);
                assert!((lhs[0] - rhs.coords()[0]).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn quotient_of_dual_numbers_by_its_radical_is_one_dimensional() {
        let a = dual_numbers();
        let tol = Tolerances::default();
        let ideal = principal_ideal(&a, &a.basis_element(1), &tol);
        let q = quotient(&a, &ideal, &tol).unwrap();
        assert_eq!(q.quotient.dim(), 1);
        assert!(q.quotient.validate(&tol).passed());
    }

    #[test]
    fn quotient_by_zero_ideal_is_the_algebra_itself() {
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let q = quotient(&a, &Ideal::zero(&a), &tol).unwrap();
        assert_eq!(q.quotient.dim(), 3);
        assert!(q.quotient.validate(&tol).passed());
        // projection ∘ section = identity on the quotient.
        let ps = q.projection.mul(&q.section);
        assert!(ps.sub(&Matrix::identity(3)).max_abs() <= 1e-12);
    }

    #[test]
    fn quotient_rejects_improper_and_non_ideals() {
        let a = function_algebra(2);
        let tol = Tolerances::default();
        let full = principal_ideal(&a, &a.identity(), &tol);
        assert_eq!(quotient(&a, &full, &tol).unwrap_err(), IdealError::NotProper);

        // span{e} in dimension 2 is not an ideal.
        let bad = Ideal {
            basis: Matrix::from_columns(
                2,
                &[vec![c(1.0 / 2f64.sqrt(), 0.0), c(1.0 / 2f64.sqrt(), 0.0)]],
            ),
            parent_dim: 2,
        };
        assert!(matches!(
            quotient(&a, &bad, &tol),
            Err(IdealError::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn character_kernels_match_hand_computations() {
        let tol = Tolerances::default();

        // Function algebra: kernel of the first evaluation is span{(0,1)}.
        let a = function_algebra(2);
        let chars = characters(&a, &tol, SEED).unwrap();
        let first_eval = chars
            .iter()
            .find(|ch| (ch.functional()[0] - c(1.0, 0.0)).norm() < 1e-8)
            .unwrap();
        let ker = character_kernel(&a, first_eval, &tol);
        assert_eq!(ker.dim(), 1);
        assert!(ker.distance_from_span(&[c(0.0, 0.0), c(1.0, 0.0)]) <= 1e-10);

        // Dual numbers: the unique kernel is span{t}.
        let d = dual_numbers();
        let dchars = characters(&d, &tol, SEED).unwrap();
        let ker = character_kernel(&d, &dchars[0], &tol);
        assert!(ker.distance_from_span(&[c(0.0, 0.0), c(1.0, 0.0)]) <= 1e-10);

        // ℤ/2 algebra: the sign character a·δ₀ + b·δ₁ ↦ a − b kills δ₀ + δ₁.
        let z2 = semigroup_algebra(&Semigroup::cyclic(2)).unwrap();
        let zchars = characters(&z2, &tol, SEED).unwrap();
        let sign = zchars
            .iter()
            .find(|ch| (ch.functional()[1] + c(1.0, 0.0)).norm() < 1e-8)
            .unwrap();
        let ker = character_kernel(&z2, sign, &tol);
        let r = 1.0 / 2f64.sqrt();
        assert!(ker.distance_from_span(&[c(r, 0.0), c(r, 0.0)]) <= 1e-10);
    }

    #[test]
    fn maximal_ideals_of_a_function_algebra_are_the_point_kernels() {
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let ideals = maximal_ideals(&a, &tol, SEED).unwrap();
        assert_eq!(ideals.len(), 3);
        for ideal in &ideals {
            assert_eq!(ideal.dim(), 2);
            let q = quotient(&a, ideal, &tol).unwrap();
            assert_eq!(q.quotient.dim(), 1);
        }
        // Each must equal a vanishing ideal of one point.
        for p in 0..3 {
            let v = vanishing_ideal(&a, &[p]).unwrap();
            assert!(ideals.iter().any(|i| i.span_equals(&v, &tol)));
        }
    }

    #[test]
    fn dual_numbers_have_exactly_one_maximal_ideal() {
        let a = dual_numbers();
        let tol = Tolerances::default();
        let ideals = maximal_ideals(&a, &tol, SEED).unwrap();
        assert_eq!(ideals.len(), 1);
        assert!(ideals[0].distance_from_span(&[c(0.0, 0.0), c(1.0, 0.0)]) <= 1e-10);
    }

    #[test]
    fn z2_algebra_has_two_maximal_ideals() {
        let a = semigroup_algebra(&Semigroup::cyclic(2)).unwrap();
        let tol = Tolerances::default();
        let ideals = maximal_ideals(&a, &tol, SEED).unwrap();
        assert_eq!(ideals.len(), 2);
    }

    #[test]
    fn containing_maximal_ideal_contains_and_is_maximal() {
        let tol = Tolerances::default();

        // Zero ideal: any maximal ideal works.
        let a = function_algebra(3);
        let m = maximal_ideal_containing(&a, &Ideal::zero(&a), &tol, SEED).unwrap();
        assert_eq!(m.dim(), 2);
        let all = maximal_ideals(&a, &tol, SEED).unwrap();
        assert!(all.iter().any(|k| k.span_equals(&m, &tol)));

        // span{t} in the dual numbers is already maximal.
        let d = dual_numbers();
        let radical = principal_ideal(&d, &d.basis_element(1), &tol);
        let m = maximal_ideal_containing(&d, &radical, &tol, SEED).unwrap();
        assert!(m.span_equals(&radical, &tol));

        // Principal ideal of the last indicator in a 3-point algebra is
        // contained exactly in the kernels of the other two evaluations.
        let x = a.element(vec![c(0.0, 0.0), c(0.0, 0.0), c(5.0, 0.0)]).unwrap();
        let small = principal_ideal(&a, &x, &tol);
        let m = maximal_ideal_containing(&a, &small, &tol, SEED).unwrap();
        assert!(m.contains(&small, &tol));
        let e0 = vanishing_ideal(&a, &[0]).unwrap();
        let e1 = vanishing_ideal(&a, &[1]).unwrap();
        assert!(m.span_equals(&e0, &tol) || m.span_equals(&e1, &tol));
    }

    #[test]
    fn vanishing_ideal_edges() {
        let a = function_algebra(3);
        let full = vanishing_ideal(&a, &[]).unwrap();
        assert_eq!(full.dim(), 3);
        assert!(!is_proper(&a, &full));
        let zero = vanishing_ideal(&a, &[0, 1, 2]).unwrap();
        assert_eq!(zero.dim(), 0);
        let one = vanishing_ideal(&a, &[0]).unwrap();
        assert_eq!(one.dim(), 2);
    }

    #[test]
    fn subset_round_trip_on_all_subsets() {
        let tol = Tolerances::default();
        for n in 1..=5usize {
            let a = function_algebra(n);
            for mask in 0..(1usize << n) {
                let points: Vec<usize> = (0..n).filter(|p| mask & (1 << p) != 0).collect();
                let ideal = vanishing_ideal(&a, &points).unwrap();
                let back = ideal_to_subset(&a, &ideal, &tol).unwrap();
                assert_eq!(back, points, "n={n} mask={mask:b}");
            }
        }
    }

    #[test]
    fn subset_of_middle_coordinate_line() {
        // span{(0,1,0)} is the functions supported on point 1, which vanish
        // at 0 and 2.
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let span = Matrix::from_columns(3, &[vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]]);
        let ideal = Ideal::from_span(&a, &span, &tol).unwrap();
        assert_eq!(ideal_to_subset(&a, &ideal, &tol).unwrap(), vec![0, 2]);
    }

    #[test]
    fn non_coordinate_subspace_is_rejected_by_subset_map() {
        let a = function_algebra(2);
        let tol = Tolerances::default();
        let skew = Ideal {
            basis: Matrix::from_columns(
                2,
                &[vec![c(1.0 / 2f64.sqrt(), 0.0), c(1.0 / 2f64.sqrt(), 0.0)]],
            ),
            parent_dim: 2,
        };
        assert!(matches!(
            ideal_to_subset(&a, &skew, &tol),
            Err(IdealError::NotASubsetIdeal { .. })
        ));
    }

    #[test]
    fn maximal_ideal_count_matches_characters_and_pullbacks_match() {
        let tol = Tolerances::default();
        let algebras = vec![
            function_algebra(4),
            dual_numbers(),
            semigroup_algebra(&Semigroup::cyclic(3)).unwrap(),
            semigroup_algebra(&Semigroup::truncation(2)).unwrap(),
        ];
        for a in &algebras {
            let chars = characters(a, &tol, SEED).unwrap();
            let ideals = maximal_ideals(a, &tol, SEED).unwrap();
            assert_eq!(ideals.len(), chars.len());
            for ch in &chars {
                let ker = character_kernel(a, ch, &tol);
                let q = quotient(a, &ker, &tol).unwrap();
                assert_eq!(q.quotient.dim(), 1);
                // The quotient's unique character pulled back through the
                // projection must reproduce the generating character.
                let psi = &characters(&q.quotient, &tol, SEED).unwrap()[0];
                let pulled: Vec<Scalar> = (0..a.dim())
                    .map(|j| psi.functional()[0] * q.projection[(0, j)])
                    .collect();
                let diff = pulled
                    .iter()
                    .zip(ch.functional())
                    .map(|(u, v)| (u - v).norm())
                    .fold(0.0f64, f64::max);
                assert!(diff <= 1e-8, "pullback differs by {diff}");
            }
        }
    }

    #[test]
    fn principal_ideals_of_indicators_map_to_subsets() {
        let a = function_algebra(3);
        let tol = Tolerances::default();
        let x = a.element(vec![c(0.0, 0.0), c(0.0, 0.0), c(5.0, 0.0)]).unwrap();
        let ideal = principal_ideal(&a, &x, &tol);
        // Multiples of the third indicator vanish exactly at the other two points.
        assert_eq!(ideal_to_subset(&a, &ideal, &tol).unwrap(), vec![0, 1]);
    }

    #[test]
    fn intersection_and_sum_of_vanishing_ideals_follow_set_algebra() {
        // Vanishing sets obey: I(E₁) ∩ I(E₂) = I(E₁ ∪ E₂),
        // I(E₁) + I(E₂) = I(E₁ ∩ E₂).
        let a = function_algebra(4);
        let tol = Tolerances::default();
        let i1 = vanishing_ideal(&a, &[0, 1]).unwrap();
        let i2 = vanishing_ideal(&a, &[1, 2]).unwrap();
        let inter = ideal_intersection(&a, &i1, &i2, &tol);
        let expected = vanishing_ideal(&a, &[0, 1, 2]).unwrap();
        assert!(inter.span_equals(&expected, &tol));
        let sum = ideal_sum(&a, &i1, &i2, &tol);
        let expected = vanishing_ideal(&a, &[1]).unwrap();
        assert!(sum.span_equals(&expected, &tol));
    }
}
