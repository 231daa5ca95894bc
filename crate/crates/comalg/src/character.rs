//! Spectra and characters.
//!
//! The spectrum of `x` is computed as the eigenvalue multiset of the
//! regular representation `M_x`, merged into distinct values. Characters,
//! the homomorphisms onto the complex numbers, are found from the fact
//! that every character functional is a left eigenvector of every
//! multiplication operator: a random probe element splits the space into
//! left eigenspaces, each eigenspace is refined into joint eigenspaces of
//! the basis multiplication operators (the operators commute, so the
//! eigenspaces are invariant), and each joint eigenvalue tuple is a
//! candidate functional. Candidates are polished by a damped Gauss-Newton
//! pass on the character equations, then accepted only if they satisfy
//! `φ(e) = 1` and multiplicativity on all basis pairs. Multiplicativity on
//! basis pairs extends to all elements by bilinearity, so that is the
//! testable formulation.
//!
//! The probe draw retries (up to 8, from a seeded deterministic stream)
//! until two consecutive draws agree on the count; non-semisimple algebras
//! make the multiplicativity filter essential because the probe's left
//! eigenspaces then contain non-character directions.

use crate::algebra::{Algebra, Element};
use crate::linalg::{eigenvalues, least_squares, left_eigenvectors, nullspace, Matrix, Scalar};
use crate::tol::Tolerances;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// A linear functional `φ(x) = Σ_i functional[i]·x_i` (bilinear pairing, no
/// conjugation) with `φ(e) = 1` that is multiplicative on basis pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    functional: Vec<Scalar>,
}

/// Distinct spectrum values with their eigenvalue multiplicities from the
/// regular representation. The underlying set is what the theory names; the
/// multiplicities are free diagnostic information.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Scalar>,
    multiplicities: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CharacterError {
    #[error("eigenvalue iteration failed to converge within the retry budget")]
    ConvergenceFailure,
    #[error("no functional passed the character acceptance filter")]
    NoneFound,
    #[error("functional is not a character: worst residual {residual}")]
    NotACharacter { residual: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("element is invertible, so no vanishing character exists")]
    NotApplicable,
    #[error("no character vanishes on the element (best |φ(x)| = {min_abs})")]
    NoVanishingWitness { min_abs: f64 },
}

impl Character {
    /// Wrap a functional after checking the character laws at `tol.character`.
    pub fn new(algebra: &Algebra, functional: Vec<Scalar>, tol: &Tolerances) -> Result<Self, CharacterError> {
        if functional.len() != algebra.dim() {
            return Err(CharacterError::DimensionMismatch {
                expected: algebra.dim(),
                actual: functional.len(),
            });
        }
        let residual = character_residual(algebra, &functional);
        if residual > tol.character {
            return Err(CharacterError::NotACharacter { residual });
        }
        Ok(Character { functional })
    }

    pub fn functional(&self) -> &[Scalar] {
        &self.functional
    }

    pub fn evaluate(&self, x: &Element) -> Scalar {
        assert_eq!(x.dim(), self.functional.len());
        self.functional.iter().zip(x.coords()).map(|(f, c)| f * c).sum()
    }
}

impl Spectrum {
    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Largest modulus over the spectrum.
    pub fn radius(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Worst violation of the character laws: `|φ(e) − 1|` and
/// `|φ(b_i·b_j) − φ(b_i)φ(b_j)|` over all basis pairs.
pub fn character_residual(algebra: &Algebra, functional: &[Scalar]) -> f64 {
    let n = algebra.dim();
    let e = algebra.identity();
    let phi_e: Scalar = functional.iter().zip(e.coords()).map(|(f, c)| f * c).sum();
    let mut worst = (phi_e - Scalar::new(1.0, 0.0)).norm();
    for i in 0..n {
        for j in i..n {
            let mut phi_prod = Scalar::new(0.0, 0.0);
            for (k, f) in functional.iter().enumerate() {
                phi_prod += algebra.structure_constant(i, j, k) * f;
            }
            let v = (phi_prod - functional[i] * functional[j]).norm();
            if v > worst {
                worst = v;
            }
        }
    }
    worst
}

/// Distinct values of a point multiset, merged at the given radius
/// (running-centroid greedy clustering, canonically sorted by real part
/// then imaginary part). Merging matters because eigenvalues of multiplicity
/// `k` from a defective block scatter like `ε^(1/k)` around the true value
/// while their mean stays accurate.
pub(crate) fn cluster_values(points: &[Scalar], radius: f64) -> (Vec<Scalar>, Vec<usize>) {
    let mut sums: Vec<Scalar> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for &p in points {
        let mut joined = false;
        for (i, s) in sums.iter_mut().enumerate() {
            let centroid = *s / counts[i] as f64;
            if (p - centroid).norm() <= radius {
                *s += p;
                counts[i] += 1;
                joined = true;
                break;
            }
        }
        if !joined {
            sums.push(p);
            counts.push(1);
        }
    }
    let mut merged: Vec<(Scalar, usize)> = sums
        .into_iter()
        .zip(counts)
        .map(|(s, c)| (s / c as f64, c))
        .collect();
    merged.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    merged.into_iter().unzip()
}

/// The spectrum of `x`: eigenvalues of the regular representation, merged
/// into distinct values at `tol.dedup`.
pub fn spectrum(algebra: &Algebra, x: &Element, tol: &Tolerances) -> Result<Spectrum, CharacterError> {
    let m = algebra.regular_representation(x);
    let eigs = eigenvalues(&m).map_err(|_| CharacterError::ConvergenceFailure)?;
    // An eigenvalue of multiplicity 2 scatters by ~√(ε‖M‖) around the true
    // value, which can exceed the base dedup radius; widen just enough to
    // merge such pairs (their centroid is accurate to working precision).
    let scatter = 16.0 * (f64::EPSILON * (1.0 + m.fro_norm())).sqrt();
    let (values, multiplicities) = cluster_values(&eigs, tol.dedup.max(scatter));
    debug_assert!(!values.is_empty());
    debug_assert_eq!(multiplicities.iter().sum::<usize>(), algebra.dim());
    Ok(Spectrum {
        values,
        multiplicities,
    })
}

/// Largest modulus over the spectrum of `x`.
pub fn spectral_radius(algebra: &Algebra, x: &Element, tol: &Tolerances) -> Result<f64, CharacterError> {
    Ok(spectrum(algebra, x, tol)?.radius())
}

/// All characters of the algebra, each exactly once, canonically ordered by
/// lexicographic comparison of the functional entries. The count is between
/// 1 and `dim`, with equality to `dim` exactly in the semisimple case.
pub fn characters(algebra: &Algebra, tol: &Tolerances, seed: u64) -> Result<Vec<Character>, CharacterError> {
    let n = algebra.dim();
    let gens_t: Vec<Matrix> = (0..n)
        .map(|i| algebra.regular_representation(&algebra.basis_element(i)).transpose())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut collected: Vec<Vec<Scalar>> = Vec::new();
    let mut prev_count: Option<usize> = None;
    let mut eig_failed = false;

    for _draw in 0..8 {
        let probe = algebra.random_element(&mut rng);
        match candidates_from_probe(algebra, &gens_t, &probe, tol) {
            Err(()) => {
                eig_failed = true;
                continue;
            }
            Ok(found) => {
                for f in found {
                    if !collected.iter().any(|g| max_norm_distance(g, &f) <= tol.character) {
                        collected.push(f);
                    }
                }
                let count = collected.len();
                if prev_count == Some(count) && count > 0 {
                    return Ok(finalize(algebra, collected, tol));
                }
                prev_count = Some(count);
            }
        }
    }
    if collected.is_empty() {
        if eig_failed {
            Err(CharacterError::ConvergenceFailure)
        } else {
            Err(CharacterError::NoneFound)
        }
    } else {
        Ok(finalize(algebra, collected, tol))
    }
}

/// A character vanishing on a non-invertible element: the certificate that
/// the element has no inverse. Fails with `NotApplicable` on invertible
/// input.
pub fn witness_noninvertible(
    algebra: &Algebra,
    x: &Element,
    tol: &Tolerances,
    seed: u64,
) -> Result<Character, CharacterError> {
    if algebra.invert(x, tol).is_ok() {
        return Err(CharacterError::NotApplicable);
    }
    let chars = characters(algebra, tol, seed)?;
    let best = chars
        .into_iter()
        .min_by(|a, b| a.evaluate(x).norm().total_cmp(&b.evaluate(x).norm()))
        .expect("character count is at least 1");
    let min_abs = best.evaluate(x).norm();
    if min_abs <= tol.character {
        Ok(best)
    } else {
        Err(CharacterError::NoVanishingWitness { min_abs })
    }
}

fn max_norm_distance(a: &[Scalar], b: &[Scalar]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn finalize(algebra: &Algebra, mut functionals: Vec<Vec<Scalar>>, tol: &Tolerances) -> Vec<Character> {
    functionals.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            let ord = x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im));
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    });
    functionals
        .into_iter()
        .map(|f| Character::new(algebra, f, tol).expect("filtered functional satisfies the character laws"))
        .collect()
}

/// Candidate functionals from one probe element. `Err(())` signals an
/// eigensolver convergence failure (retry with a fresh probe).
fn candidates_from_probe(
    algebra: &Algebra,
    gens_t: &[Matrix],
    probe: &Element,
    tol: &Tolerances,
) -> Result<Vec<Vec<Scalar>>, ()> {
    let n = algebra.dim();
    let m = algebra.regular_representation(probe);
    let eigs = eigenvalues(&m).map_err(|_| ())?;
    // Merge with a radius wide enough to swallow the ε^(1/k) scatter of
    // defective eigenvalues; the centroid then carries the accurate value.
    let radius = (tol.char_cluster * (1.0 + m.fro_norm())).max(tol.dedup);
    let (distinct, _) = cluster_values(&eigs, radius);

    let mut accepted: Vec<Vec<Scalar>> = Vec::new();
    for lambda in distinct {
        let space = left_eigenvectors(&m, lambda, tol.eig_vec);
        if space.cols() == 0 {
            continue;
        }
        // Refine into joint eigenspaces of the commuting transposed
        // multiplication operators. Each final space yields one value tuple;
        // a character inside a space forces the tuple to equal its basis
        // values, and a space without characters yields a tuple the filter
        // rejects.
        let mut spaces = vec![space];
        for g in gens_t {
            let mut next = Vec::with_capacity(spaces.len());
            for w in spaces {
                if w.cols() == 1 {
                    next.push(w);
                    continue;
                }
                let restricted = w.conj_transpose().mul(&g.mul(&w));
                let beigs = eigenvalues(&restricted).map_err(|_| ())?;
                let bradius = (tol.char_cluster * (1.0 + restricted.fro_norm())).max(tol.dedup);
                let (centers, _) = cluster_values(&beigs, bradius);
                if centers.len() == 1 {
                    next.push(w);
                    continue;
                }
                for mu in centers {
                    let inner = nullspace(&restricted.shifted(mu), tol.eig_vec);
                    if inner.cols() == 0 {
                        continue;
                    }
                    // Orthonormal times orthonormal stays orthonormal.
                    next.push(w.mul(&inner));
                }
            }
            spaces = next;
        }
        for w in spaces {
            let d = w.cols() as f64;
            let tuple: Vec<Scalar> = gens_t
                .iter()
                .map(|g| w.conj_transpose().mul(&g.mul(&w)).trace() / d)
                .collect();
            debug_assert_eq!(tuple.len(), n);
            if let Some(polished) = polish_candidate(algebra, tuple, tol) {
                accepted.push(polished);
            }
        }
    }
    Ok(accepted)
}

/// Damped Gauss-Newton on the character equations, then the acceptance
/// filter. Candidates extracted near a defective eigenvalue start with an
/// error around `ε^(1/k)`; the polish pulls true characters to working
/// precision (convergence is quadratic at simple roots and linear at
/// degenerate ones, hence the generous sweep cap) and lets junk tuples fail
/// the filter cleanly.
fn polish_candidate(algebra: &Algebra, mut phi: Vec<Scalar>, tol: &Tolerances) -> Option<Vec<Scalar>> {
    let mut best = character_residual(algebra, &phi);
    for _ in 0..60 {
        if best <= 1e-14 {
            break;
        }
        let (jac, residual) = character_system(algebra, &phi);
        let rhs: Vec<Scalar> = residual.iter().map(|r| -r).collect();
        let step = match least_squares(&jac, &rhs, tol.rank) {
            Ok(s) => s,
            Err(_) => break,
        };
        let mut alpha = 1.0;
        let mut improved = false;
        for _ in 0..5 {
            let cand: Vec<Scalar> = phi
                .iter()
                .zip(&step)
                .map(|(p, s)| p + s * Scalar::new(alpha, 0.0))
                .collect();
            let rn = character_residual(algebra, &cand);
            if rn < best {
                phi = cand;
                best = rn;
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if best <= tol.character {
        Some(phi)
    } else {
        None
    }
}

/// Residual vector and Jacobian of the character equations
/// `φ(e) − 1 = 0` and `φ(b_i·b_j) − φ_i·φ_j = 0` for `i ≤ j`.
fn character_system(algebra: &Algebra, phi: &[Scalar]) -> (Matrix, Vec<Scalar>) {
    let n = algebra.dim();
    let rows = 1 + n * (n + 1) / 2;
    let mut jac = Matrix::zeros(rows, n);
    let mut residual = vec![Scalar::new(0.0, 0.0); rows];

    let e = algebra.identity();
    let mut phi_e = Scalar::new(0.0, 0.0);
    for m in 0..n {
        jac[(0, m)] = e.coords()[m];
        phi_e += phi[m] * e.coords()[m];
    }
    residual[0] = phi_e - Scalar::new(1.0, 0.0);

    let mut row = 1;
    for i in 0..n {
        for j in i..n {
            let mut phi_prod = Scalar::new(0.0, 0.0);
            for k in 0..n {
                let cijk = algebra.structure_constant(i, j, k);
                jac[(row, k)] = cijk;
                phi_prod += cijk * phi[k];
            }
            jac[(row, i)] -= phi[j];
            jac[(row, j)] -= phi[i];
            residual[row] = phi_prod - phi[i] * phi[j];
            row += 1;
        }
    }
    (jac, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{function_algebra, polynomial_quotient_algebra};
    use crate::linalg::multiset_match_distance;
    use crate::semigroup::{semigroup_algebra, Semigroup};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const SEED: u64 = 0xC0FFEE;

    fn c(re: f64, im: f64) -> Scalar {
        Scalar::new(re, im)
    }

    fn dual_numbers() -> Algebra {
        polynomial_quotient_algebra(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap()
    }

    #[test]
    fn spectrum_of_identity_is_one_with_full_multiplicity() {
        let tol = Tolerances::default();
        for a in [function_algebra(4), dual_numbers()] {
            let s = spectrum(&a, &a.identity(), &tol).unwrap();
            assert_eq!(s.values().len(), 1);
            assert!((s.values()[0] - c(1.0, 0.0)).norm() < 1e-12);
            assert_eq!(s.multiplicities(), &[a.dim()]);
        }
    }

    #[test]
    fn spectrum_of_nilpotent_generator_is_zero() {
        let tol = Tolerances::default();
        let a = dual_numbers();
        let s = spectrum(&a, &a.basis_element(1), &tol).unwrap();
        assert_eq!(s.values().len(), 1);
        assert!(s.values()[0].norm() < 1e-12);
        assert_eq!(s.multiplicities(), &[2]);
        assert_eq!(spectral_radius(&a, &a.basis_element(1), &tol).unwrap(), 0.0);
    }

    #[test]
    fn spectrum_in_a_function_algebra_is_the_value_set() {
        let tol = Tolerances::default();
        let a = function_algebra(3);
        let x = a.element(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        let s = spectrum(&a, &x, &tol).unwrap();
        assert!(multiset_match_distance(s.values(), &[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]) < 1e-12);
    }

    #[test]
    fn spectrum_of_sum_of_deltas_in_z2() {
        // Character values are 1±1, so the spectrum is {2, 0}; the
        // eigenvalue route must agree.
        let tol = Tolerances::default();
        let a = semigroup_algebra(&Semigroup::cyclic(2)).unwrap();
        let x = a.element(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let s = spectrum(&a, &x, &tol).unwrap();
        assert!(multiset_match_distance(s.values(), &[c(0.0, 0.0), c(2.0, 0.0)]) < 1e-10);
    }

    #[test]
    fn function_algebra_characters_are_coordinate_evaluations() {
        let tol = Tolerances::default();
        let a = function_algebra(3);
        let chars = characters(&a, &tol, SEED).unwrap();
        assert_eq!(chars.len(), 3);
        for ch in &chars {
            let ones: Vec<f64> = ch.functional().iter().map(|z| z.norm()).collect();
            let total: f64 = ones.iter().sum();
            assert!((total - 1.0).abs() < 1e-9, "not a coordinate projection: {ones:?}");
            let max = ones.iter().cloned().fold(0.0, f64::max);
            assert!((max - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn dual_numbers_have_exactly_one_character() {
        // φ(t)² = φ(t²) = 0 forces φ(t) = 0, so (a·e + b·t) ↦ a.
        let tol = Tolerances::default();
        let a = dual_numbers();
        let chars = characters(&a, &tol, SEED).unwrap();
        assert_eq!(chars.len(), 1);
        let f = chars[0].functional();
        assert!((f[0] - c(1.0, 0.0)).norm() < 1e-10);
        assert!(f[1].norm() < 1e-10);
    }

    #[test]
    fn z3_characters_take_cube_roots_of_unity_on_the_generator() {
        let tol = Tolerances::default();
        let a = semigroup_algebra(&Semigroup::cyclic(3)).unwrap();
        let chars = characters(&a, &tol, SEED).unwrap();
        assert_eq!(chars.len(), 3);
        let got: Vec<Scalar> = chars.iter().map(|ch| ch.functional()[1]).collect();
        let s3 = 3.0f64.sqrt() / 2.0;
        let expected = vec![c(1.0, 0.0), c(-0.5, s3), c(-0.5, -s3)];
        assert!(multiset_match_distance(&got, &expected) < 1e-9);
    }

    #[test]
    fn truncation_algebra_has_two_characters_despite_defective_probes() {
        // δ₁ acts as a nilpotent-shifted generator; every probe has a
        // defective eigenvalue, which exercises the polish path.
        let tol = Tolerances::default();
        for k in [2usize, 3, 4] {
            let a = semigroup_algebra(&Semigroup::truncation(k)).unwrap();
            let chars = characters(&a, &tol, SEED).unwrap();
            assert_eq!(chars.len(), 2, "truncation({k})");
            for ch in &chars {
                assert!(character_residual(&a, ch.functional()) <= 1e-10);
            }
        }
    }

    #[test]
    fn product_of_truncations_yields_all_four_characters() {
        // The probe's left eigenspaces are 2-dimensional here, so this
        // covers the joint-eigenspace refinement.
        let tol = Tolerances::default();
        let s = Semigroup::truncation(2).product(&Semigroup::truncation(2));
        let a = semigroup_algebra(&s).unwrap();
        let chars = characters(&a, &tol, SEED).unwrap();
        assert_eq!(chars.len(), 4);
    }

    #[test]
    fn character_count_equals_dimension_for_semisimple_families() {
        let tol = Tolerances::default();
        for n in 1..=5 {
            let a = function_algebra(n);
            assert_eq!(characters(&a, &tol, SEED).unwrap().len(), n);
            let g = semigroup_algebra(&Semigroup::cyclic(n)).unwrap();
            assert_eq!(characters(&g, &tol, SEED).unwrap().len(), n);
        }
    }

    #[test]
    fn character_count_is_the_number_of_distinct_roots() {
        let tol = Tolerances::default();
        // (t−1)²(t+2) = t³ − 3t + 2 has two distinct roots.
        let a = polynomial_quotient_algebra(&[c(2.0, 0.0), c(-3.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let chars = characters(&a, &tol, SEED).unwrap();
        assert_eq!(chars.len(), 2);
        let values: Vec<Scalar> = chars.iter().map(|ch| ch.functional()[1]).collect();
        assert!(multiset_match_distance(&values, &[c(1.0, 0.0), c(-2.0, 0.0)]) < 1e-8);
    }

    #[test]
    fn character_counts_across_the_polynomial_bank() {
        let tol = Tolerances::default();
        let expected_distinct_roots = [
            ("t^2", 1usize),
            ("t^2-1", 2),
            ("t^3-1", 3),
            ("t^3-t", 3),
            ("t^3-3t+2", 2),
            ("t^4-5t^2+4", 4),
            ("t^5-1", 5),
        ];
        for (name, coeffs) in crate::catalog::polynomial_catalog() {
            let a = polynomial_quotient_algebra(&coeffs).unwrap();
            let chars = characters(&a, &tol, SEED).unwrap();
            let expected = expected_distinct_roots
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, c)| *c)
                .unwrap_or_else(|| panic!("no expectation for {name}"));
            assert_eq!(chars.len(), expected, "{name}");
            // Every character sends t to a root of the polynomial.
            for ch in &chars {
                let root = ch.functional()[1];
                let mut value = Scalar::new(0.0, 0.0);
                let mut power = Scalar::new(1.0, 0.0);
                for coeff in &coeffs {
                    value += coeff * power;
                    power *= root;
                }
                assert!(value.norm() <= 1e-8, "{name}: φ(t) = {root} is not a root");
            }
        }
    }

    #[test]
    fn involution_quotient_characters_evaluate_at_plus_and_minus_one() {
        let tol = Tolerances::default();
        let a = polynomial_quotient_algebra(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let chars = characters(&a, &tol, SEED).unwrap();
        let values: Vec<Scalar> = chars.iter().map(|ch| ch.functional()[1]).collect();
        assert!(multiset_match_distance(&values, &[c(1.0, 0.0), c(-1.0, 0.0)]) < 1e-10);
    }

    #[test]
    fn invertibility_matches_the_eigenvalue_moduli() {
        let tol = Tolerances::default();
        let algebras = vec![
            function_algebra(4),
            semigroup_algebra(&Semigroup::cyclic(4)).unwrap(),
            dual_numbers(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(909);
        for a in &algebras {
            let mut cases: Vec<Element> = (0..60).map(|_| a.random_element(&mut rng)).collect();
            // Singular by construction: zero and a spectrum shift.
            cases.push(a.zero());
            let y = a.random_element(&mut rng);
            let s = spectrum(a, &y, &tol).unwrap();
            cases.push(a.identity().scale(s.values()[0]).sub(&y));
            for x in &cases {
                let m = a.regular_representation(x);
                let min_modulus = eigenvalues(&m)
                    .unwrap()
                    .iter()
                    .map(|z| z.norm())
                    .fold(f64::INFINITY, f64::min);
                let threshold = tol.rank * m.max_abs().max(1.0);
                match a.invert(x, &tol) {
                    Ok(inv) => {
                        assert!(min_modulus > threshold, "invertible but eigenvalue ~0");
                        let back = a.multiply(x, &inv);
                        assert!(back.sub(&a.identity()).max_norm() <= 1e-8);
                    }
                    Err(_) => {
                        assert!(min_modulus <= 1e-6, "non-invertible but eigenvalues bounded away: {min_modulus}");
                    }
                }
            }
        }
    }

    #[test]
    fn spectrum_matches_character_values_on_random_elements() {
        let tol = Tolerances::default();
        let algebras = vec![
            function_algebra(4),
            dual_numbers(),
            semigroup_algebra(&Semigroup::cyclic(4)).unwrap(),
            semigroup_algebra(&Semigroup::truncation(2)).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for a in &algebras {
            let chars = characters(a, &tol, SEED).unwrap();
            for _ in 0..50 {
                let x = a.random_element(&mut rng);
                let s = spectrum(a, &x, &tol).unwrap();
                let char_values: Vec<Scalar> = chars.iter().map(|ch| ch.evaluate(&x)).collect();
                let (char_set, _) = cluster_values(&char_values, tol.dedup);
                assert_eq!(char_set.len(), s.values().len(), "dim {} algebra", a.dim());
                assert!(
                    multiset_match_distance(&char_set, s.values()) <= tol.dedup,
                    "spectrum/character mismatch"
                );
            }
        }
    }

    #[test]
    fn witness_vanishes_on_noninvertible_elements() {
        let tol = Tolerances::default();
        let a = dual_numbers();
        let t = a.basis_element(1);
        let w = witness_noninvertible(&a, &t, &tol, SEED).unwrap();
        assert!(w.evaluate(&t).norm() <= 1e-10);

        let zero = a.zero();
        let w0 = witness_noninvertible(&a, &zero, &tol, SEED).unwrap();
        assert!(w0.evaluate(&zero).norm() == 0.0);

        let f2 = function_algebra(2);
        let x = f2.element(vec![c(0.0, 0.0), c(5.0, 0.0)]).unwrap();
        let w = witness_noninvertible(&f2, &x, &tol, SEED).unwrap();
        // Must be evaluation at the first point.
        assert!((w.functional()[0] - c(1.0, 0.0)).norm() < 1e-9);
        assert!(w.functional()[1].norm() < 1e-9);
    }

    #[test]
    fn witness_refuses_invertible_elements() {
        let tol = Tolerances::default();
        let a = function_algebra(2);
        let e = a.identity();
        assert_eq!(
            witness_noninvertible(&a, &e, &tol, SEED),
            Err(CharacterError::NotApplicable)
        );
    }

    #[test]
    fn sup_norm_of_function_equals_spectral_radius() {
        let tol = Tolerances::default();
        let a = function_algebra(2);
        let f = a.element(vec![c(2.0, 0.0), c(0.0, 3.0)]).unwrap();
        let r = spectral_radius(&a, &f, &tol).unwrap();
        assert!((r - 3.0).abs() < 1e-12);
    }

    #[test]
    fn multiplicativity_extends_to_random_pairs() {
        let tol = Tolerances::default();
        let a = semigroup_algebra(&Semigroup::cyclic(3).product(&Semigroup::idempotent_chain(1))).unwrap();
        let chars = characters(&a, &tol, SEED).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..200 {
            let x = a.random_element(&mut rng);
            let y = a.random_element(&mut rng);
            let xy = a.multiply(&x, &y);
            for ch in &chars {
                let lhs = ch.evaluate(&xy);
                let rhs = ch.evaluate(&x) * ch.evaluate(&y);
                let bound = 1e-8 * (1.0 + ch.evaluate(&x).norm()) * (1.0 + ch.evaluate(&y).norm());
                assert!((lhs - rhs).norm() <= bound);
            }
        }
    }

    #[test]
    fn clustering_merges_within_radius_and_averages() {
        let pts = vec![c(1.0 + 3e-8, 0.0), c(1.0 - 3e-8, 0.0), c(2.0, 0.0)];
        let (vals, counts) = cluster_values(&pts, 1e-7);
        assert_eq!(vals.len(), 2);
        assert!((vals[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(counts, vec![2, 1]);
    }
}
