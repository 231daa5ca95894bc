//! The standing catalog of example algebras and semigroups used by the
//! verification sweeps: function algebras up to six points, a bank of
//! polynomial quotients up to degree five, cyclic groups, idempotent
//! chains, direct products of those, and the truncation monoid.
//!
//! Eigenvalue accuracy caps the defect allowed here: a defective eigenvalue
//! of multiplicity `k` is computed with error around `ε^(1/k)`, so catalog
//! members keep their worst multiplicity at 2, which stays inside the
//! spectrum dedup radius. Deeper truncation monoids (larger nilpotency
//! order) are exercised separately in character-level tests where the
//! polish step absorbs the scatter.

use crate::algebra::{function_algebra, polynomial_quotient_algebra, Algebra};
use crate::linalg::Scalar;
use crate::semigroup::{semigroup_algebra, Semigroup};

fn c(re: f64, im: f64) -> Scalar {
    Scalar::new(re, im)
}

/// Named semigroups: cyclic ℤ/n for n ≤ 6, idempotent chains of length ≤ 4,
/// direct products of those up to size 12, and the truncation monoid.
pub fn semigroup_catalog() -> Vec<(String, Semigroup)> {
    let mut out: Vec<(String, Semigroup)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("cyclic-{n}"), Semigroup::cyclic(n)));
    }
    for k in 1..=4 {
        out.push((format!("chain-{k}"), Semigroup::idempotent_chain(k)));
    }
    out.push((
        "cyclic-2 x cyclic-2".into(),
        Semigroup::cyclic(2).product(&Semigroup::cyclic(2)),
    ));
    out.push((
        "cyclic-2 x cyclic-3".into(),
        Semigroup::cyclic(2).product(&Semigroup::cyclic(3)),
    ));
    out.push((
        "cyclic-3 x cyclic-4".into(),
        Semigroup::cyclic(3).product(&Semigroup::cyclic(4)),
    ));
    out.push((
        "chain-1 x cyclic-3".into(),
        Semigroup::idempotent_chain(1).product(&Semigroup::cyclic(3)),
    ));
    out.push((
        "chain-2 x chain-1".into(),
        Semigroup::idempotent_chain(2).product(&Semigroup::idempotent_chain(1)),
    ));
    out.push(("truncation-2".into(), Semigroup::truncation(2)));
    out
}

/// Named monic polynomials (coefficient lists, constant term first) for the
/// quotient-ring family, degree ≤ 5, worst root multiplicity 2.
pub fn polynomial_catalog() -> Vec<(String, Vec<Scalar>)> {
    vec![
        ("t^2".into(), vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
        ("t^2-1".into(), vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
        ("t^3-1".into(), vec![c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
        (
            "t^3-t".into(),
            vec![c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ),
        (
            // (t−1)²(t+2), a double root next to a simple one.
            "t^3-3t+2".into(),
            vec![c(2.0, 0.0), c(-3.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ),
        (
            // (t²−1)(t²−4), four distinct real roots.
            "t^4-5t^2+4".into(),
            vec![c(4.0, 0.0), c(0.0, 0.0), c(-5.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ),
        (
            "t^5-1".into(),
            vec![
                c(-1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(1.0, 0.0),
            ],
        ),
    ]
}

/// The full algebra catalog: function algebras (n ≤ 6), the polynomial
/// quotients, and the convolution algebras of [`semigroup_catalog`].
pub fn algebra_catalog() -> Vec<(String, Algebra)> {
    let mut out: Vec<(String, Algebra)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("functions-{n}"), function_algebra(n)));
    }
    for (name, coeffs) in polynomial_catalog() {
        let algebra = polynomial_quotient_algebra(&coeffs).expect("catalog polynomials are monic");
        out.push((format!("quotient-{name}"), algebra));
    }
    for (name, s) in semigroup_catalog() {
        let algebra = semigroup_algebra(&s).expect("catalog semigroups are valid");
        out.push((format!("convolution-{name}"), algebra));
    }
    out
}
