//! Helpers shared by the acceptance criteria: an independent brute-force
//! semicharacter enumerator and set-distance utilities.

use comalg::{Scalar, Semigroup};

/// Symmetric (Hausdorff) distance between two nonempty finite sets of
/// complex numbers.
pub fn set_distance(a: &[Scalar], b: &[Scalar]) -> f64 {
    let one_sided = |from: &[Scalar], to: &[Scalar]| {
        from.iter()
            .map(|x| to.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0f64, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a))
}

/// Greedy matching distance between two equally sized sets of value
/// vectors under the max-norm; `f64::INFINITY` when the sizes differ.
pub fn vector_set_distance(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let dist = |u: &[Scalar], v: &[Scalar]| {
        u.iter().zip(v).map(|(x, y)| (x - y).norm()).fold(0.0f64, f64::max)
    };
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for (i, u) in a.iter().enumerate() {
        for (j, v) in b.iter().enumerate() {
            pairs.push((dist(u, v), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut worst = 0.0f64;
    let mut matched = 0;
    for (d, i, j) in pairs {
        if !used_a[i] && !used_b[j] {
            used_a[i] = true;
            used_b[j] = true;
            worst = worst.max(d);
            matched += 1;
            if matched == a.len() {
                break;
            }
        }
    }
    worst
}

/// Enumerate every semicharacter of a small semigroup by brute force,
/// independently of the character machinery: the powers of an element
/// eventually cycle, so each value is zero or a root of unity whose order
/// divides the cycle length; the Cartesian product of those candidate sets
/// is filtered by the full multiplication law.
pub fn brute_force_semicharacters(s: &Semigroup) -> Vec<Vec<Scalar>> {
    let n = s.size();
    assert!(n <= 6, "brute force is meant for tiny semigroups");
    let one = Scalar::new(1.0, 0.0);

    let mut candidates: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for a in 0..n {
        if a == s.identity_index() {
            candidates.push(vec![one]);
            continue;
        }
        // Walk a, a+a, a+a+a, … until the orbit repeats; the cycle length σ
        // forces Φ(a)^ρ (Φ(a)^σ − 1) = 0.
        let mut position = vec![None::<usize>; n];
        let mut current = a;
        let mut index = 0usize;
        let sigma = loop {
            if let Some(first) = position[current] {
                break index - first;
            }
            position[current] = Some(index);
            index += 1;
            current = s.add(current, a);
        };
        let mut values = vec![Scalar::new(0.0, 0.0)];
        for k in 0..sigma {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / sigma as f64;
            values.push(Scalar::new(theta.cos(), theta.sin()));
        }
        candidates.push(values);
    }

    let mut found: Vec<Vec<Scalar>> = Vec::new();
    let mut choice = vec![0usize; n];
    'outer: loop {
        let assignment: Vec<Scalar> = (0..n).map(|a| candidates[a][choice[a]]).collect();
        let mut ok = true;
        'check: for a in 0..n {
            for b in a..n {
                let lhs = assignment[s.add(a, b)];
                let rhs = assignment[a] * assignment[b];
                if (lhs - rhs).norm() > 1e-9 {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            found.push(assignment);
        }
        // Odometer step over the candidate grid.
        for a in 0..n {
            choice[a] += 1;
            if choice[a] < candidates[a].len() {
                continue 'outer;
            }
            choice[a] = 0;
        }
        break;
    }
    found
}
