//! Trial-level parallelism.
//!
//! Randomness is keyed by (seed, trial, site), never by stream position, and
//! per-trial results are exact integers, so the assembled table — and every
//! statistic derived from it — is byte-identical for every thread count.
//! Workers take contiguous trial ranges; the main thread reassembles rows in
//! trial order.

use std::thread;

use lifshitz_core::graph::{Graph, VertexSet};
use lifshitz_core::ids::{trial_counts, Model};
use lifshitz_core::operators::restricted_anderson;
use lifshitz_core::percolation::sample_configuration;
use lifshitz_core::spectral::count_below;
use lifshitz_core::Result;

use crate::errors::CliResult;

fn ranges(trials: u64, threads: usize) -> Vec<(u64, u64)> {
    let workers = (threads as u64).clamp(1, trials.max(1));
    let chunk = trials.div_ceil(workers);
    (0..workers)
        .map(|i| (i * chunk, ((i + 1) * chunk).min(trials)))
        .filter(|&(lo, hi)| lo < hi)
        .collect()
}

fn run_chunks<T, W>(trials: u64, threads: usize, worker: W) -> CliResult<Vec<T>>
where
    T: Send,
    W: Fn(u64, u64) -> Result<Vec<T>> + Sync,
{
    let mut out = Vec::with_capacity(trials as usize);
    let results: Vec<Result<Vec<T>>> = thread::scope(|s| {
        let handles: Vec<_> = ranges(trials, threads)
            .into_iter()
            .map(|(lo, hi)| s.spawn({ let worker = &worker; move || worker(lo, hi) }))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Per-trial counting-function table: row t holds n(E) over the energy grid
/// for trial t.
pub fn counts_table(
    g: &Graph,
    f: &VertexSet,
    model: Model,
    p: f64,
    energies: &[f64],
    trials: u64,
    seed: u64,
    threads: usize,
) -> CliResult<Vec<Vec<u64>>> {
    run_chunks(trials, threads, |lo, hi| {
        (lo..hi).map(|t| trial_counts(g, f, model, p, energies, seed, t)).collect()
    })
}

/// Number of trials whose lowest eigenvalue of h^U_ω lies at or below `e`,
/// scored through the counting function: E₁ ≤ e exactly when n(e) ≥ 1.
pub fn ground_state_hits(
    g: &Graph,
    u: &VertexSet,
    p: f64,
    e: f64,
    trials: u64,
    seed: u64,
    threads: usize,
) -> CliResult<u64> {
    let hits = run_chunks(trials, threads, |lo, hi| {
        (lo..hi)
            .map(|t| -> Result<u64> {
                let cfg = sample_configuration(g, p, seed, t)?;
                let op = restricted_anderson(g, u, &cfg)?;
                Ok((count_below(&op, e)? >= 1) as u64)
            })
            .collect::<Result<Vec<u64>>>()
    })?;
    Ok(hits.iter().sum())
}
