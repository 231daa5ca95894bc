//! Batch execution of independent trials.
//!
//! Every library operation is a pure function over immutable values, so
//! verification sweeps (random-pair norm checks, per-element spectrum
//! comparisons) parallelize trivially. [`run`] dispatches to rayon when the
//! `parallel` feature is on and to a plain loop otherwise; [`run_seq`] is
//! always sequential. Both return results ordered by trial index, so the
//! aggregate is deterministic regardless of the execution mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to every index in `0..n`, in parallel when available.
#[cfg(feature = "parallel")]
pub fn run<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Apply `f` to every index in `0..n`, in parallel when available.
#[cfg(not(feature = "parallel"))]
pub fn run<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference path with the same contract as [`run`].
pub fn run_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..n).map(f).collect()
}
