//! Write a few standard algebras and semigroups as JSON files, ready for
//! the `comalg` CLI: function algebras, the dual numbers ℂ[t]/(t²), and
//! small cyclic / truncation semigroups.
//!
//! Usage: `cargo run -p comalg --example write_catalog -- <output-dir>`

use comalg::algebra::{function_algebra, polynomial_quotient_algebra};
use comalg::io::{save_algebra, save_semigroup};
use comalg::linalg::Scalar;
use comalg::semigroup::Semigroup;
use std::path::Path;

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| ".".to_string());
    let dir = Path::new(&dir);
    std::fs::create_dir_all(dir).expect("create output directory");

    for n in [2usize, 3, 4] {
        save_algebra(dir.join(format!("fn{n}.alg.json")), &function_algebra(n)).unwrap();
    }
    let c = |re: f64| Scalar::new(re, 0.0);
    let dual = polynomial_quotient_algebra(&[c(0.0), c(0.0), c(1.0)]).unwrap();
    save_algebra(dir.join("t2.alg.json"), &dual).unwrap();

    save_semigroup(dir.join("z2.sg.json"), &Semigroup::cyclic(2)).unwrap();
    save_semigroup(dir.join("z3.sg.json"), &Semigroup::cyclic(3)).unwrap();
    save_semigroup(dir.join("trunc2.sg.json"), &Semigroup::truncation(2)).unwrap();

    println!("wrote catalog files to {}", dir.display());
}
