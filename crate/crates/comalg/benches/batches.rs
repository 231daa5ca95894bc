//! Criterion benchmarks comparing the data-parallel batch path against the
//! sequential fallback on the real verification workloads: norm-law trials
//! and per-element spectrum sweeps.

use comalg::batch;
use comalg::catalog::algebra_catalog;
use comalg::norm::{check_normed_algebra, norm, NormKind};
use comalg::{characters, spectrum, Tolerances};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0xBE9C;

fn norm_trial(algebra: &comalg::Algebra, kind: NormKind, seed: u64, t: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    let x = algebra.random_element(&mut rng);
    let y = algebra.random_element(&mut rng);
    let nx = norm(kind, algebra, &x).unwrap();
    let ny = norm(kind, algebra, &y).unwrap();
    let nxy = norm(kind, algebra, &algebra.multiply(&x, &y)).unwrap();
    nx * ny - nxy
}

fn bench_norm_trials(c: &mut Criterion) {
    let catalog = algebra_catalog();
    let (_, algebra) = catalog
        .iter()
        .find(|(name, _)| name == "convolution-cyclic-3 x cyclic-4")
        .expect("catalog entry exists");
    let trials = 4096usize;

    let mut group = c.benchmark_group("norm_submultiplicativity_trials");
    group.bench_with_input(BenchmarkId::new("parallel", trials), &trials, |b, &n| {
        b.iter(|| {
            let margins = batch::run(n, |t| norm_trial(algebra, NormKind::L1, SEED, t));
            margins.into_iter().fold(f64::INFINITY, f64::min)
        })
    });
    group.bench_with_input(BenchmarkId::new("sequential", trials), &trials, |b, &n| {
        b.iter(|| {
            let margins = batch::run_seq(n, |t| norm_trial(algebra, NormKind::L1, SEED, t));
            margins.into_iter().fold(f64::INFINITY, f64::min)
        })
    });
    group.finish();
}

fn bench_spectrum_sweep(c: &mut Criterion) {
    let tol = Tolerances::default();
    let catalog = algebra_catalog();
    let (_, algebra) = catalog
        .iter()
        .find(|(name, _)| name == "convolution-cyclic-3 x cyclic-4")
        .expect("catalog entry exists");
    let chars = characters(algebra, &tol, SEED).unwrap();
    let elements = 256usize;

    let sweep_one = |t: usize| -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        rng.set_stream(t as u64);
        let x = algebra.random_element(&mut rng);
        let s = spectrum(algebra, &x, &tol).unwrap();
        let worst_char = chars
            .iter()
            .map(|ch| {
                let v = ch.evaluate(&x);
                s.values()
                    .iter()
                    .map(|w| (v - w).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        worst_char
    };

    let mut group = c.benchmark_group("spectrum_character_sweep");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("parallel", elements), &elements, |b, &n| {
        b.iter(|| batch::run(n, sweep_one).into_iter().fold(0.0, f64::max))
    });
    group.bench_with_input(BenchmarkId::new("sequential", elements), &elements, |b, &n| {
        b.iter(|| batch::run_seq(n, sweep_one).into_iter().fold(0.0, f64::max))
    });
    group.finish();
}

fn bench_full_norm_check(c: &mut Criterion) {
    let catalog = algebra_catalog();
    let (_, algebra) = catalog
        .iter()
        .find(|(name, _)| name == "functions-6")
        .expect("catalog entry exists");
    c.bench_function("check_normed_algebra_functions6_4096", |b| {
        b.iter(|| check_normed_algebra(algebra, NormKind::Sup, 4096, SEED).unwrap())
    });
}

criterion_group!(benches, bench_norm_trials, bench_spectrum_sweep, bench_full_norm_check);
criterion_main!(benches);
