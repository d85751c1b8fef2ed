//! Monte Carlo estimation of finite-volume spectral counting means.
//!
//! For a window F and a random configuration ω the basic observable is
//! n(E) = tr χ_{(−∞,E]}(op^F_ω), the number of eigenvalues at or below E.
//! Averaging n(E)/|F| over independent configurations estimates the mean
//! normalized counting function, the finite-volume stand-in for the
//! integrated density of states; its low-energy decay is compared against
//! the closed-form envelope exp[−γ(α)·E^{−δ/(d+1)}] and summarized by the
//! double-logarithm slope of ln|ln N̂| against |ln E|.
//!
//! Determinism is load-bearing: trials are keyed by index through the
//! counter-based sampler, per-trial counts are integers, and all
//! accumulation happens in exact integer arithmetic before a single final
//! division — so any execution schedule (including the thread pool in the
//! driver binary) reproduces identical curves bit for bit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{gamma_alpha, lifshitz_envelope, BoundParams};
use crate::graph::{Graph, VertexSet};
use crate::math;
use crate::operators::{percolation_hamiltonian, restricted_anderson};
use crate::percolation::sample_configuration;
use crate::spectral::count_below;
use crate::{Error, Result};

/// Which random operator family a curve samples.
///
/// `AndersonH` is the window restriction h^F_ω = Δ^N_F + (1−ω); its tag in
/// files and on the command line is `anderson-h` (short form `h`).
/// `PercolationH` is the percolation Hamiltonian H^F_ω with closed sites
/// decoupled; its tag is `percolation-H` (short form `H`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    AndersonH,
    PercolationH,
}

impl Model {
    pub fn tag(self) -> &'static str {
        match self {
            Model::AndersonH => "anderson-h",
            Model::PercolationH => "percolation-H",
        }
    }

    pub fn parse(token: &str) -> Result<Model> {
        match token {
            "h" | "anderson-h" => Ok(Model::AndersonH),
            "H" | "percolation-H" => Ok(Model::PercolationH),
            _ => Err(Error::InvalidParam(
                "model must be one of: h, H, anderson-h, percolation-H",
            )),
        }
    }
}

/// An estimated normalized counting curve over an ascending energy grid.
#[derive(Clone, Debug, PartialEq)]
pub struct IDSCurve {
    pub model: Model,
    pub energies: Vec<f64>,
    /// Per-energy mean of n(E)/|F| over all trials; each lies in [0, 1].
    pub estimates: Vec<f64>,
    /// Per-energy standard error of the mean; zero when trials = 1.
    pub stderrs: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    /// Human-readable description of the window F.
    pub window: String,
}

/// A Monte Carlo event frequency with an exact one-sided confidence bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbEstimate {
    pub value: f64,
    /// Exact (Clopper–Pearson) one-sided 95% upper confidence limit.
    pub one_sided_upper_95: f64,
    pub trials: u64,
}

/// Least-squares summary of ln|ln N̂| against |ln E|.
#[derive(Clone, Debug, PartialEq)]
pub struct LifshitzFit {
    pub slope: f64,
    pub intercept: f64,
    pub energies_used: Vec<f64>,
    /// Energies dropped because the estimate was 0 or 1 (log undefined).
    pub energies_dropped: Vec<f64>,
}

/// One energy's comparison against the decay envelope.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopeCheck {
    pub energy: f64,
    pub estimate: f64,
    pub stderr: f64,
    /// The tested quantity: estimate + 3·stderr.
    pub bound: f64,
    pub envelope: f64,
    pub pass: bool,
    pub equality: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeReport {
    pub checks: Vec<EnvelopeCheck>,
    pub all_pass: bool,
}

fn validate_energies(energies: &[f64]) -> Result<()> {
    if energies.is_empty() {
        return Err(Error::InvalidParam("energy grid must be nonempty"));
    }
    for (i, &e) in energies.iter().enumerate() {
        if !(e > 0.0) {
            return Err(Error::InvalidParam("energies must be positive"));
        }
        if i > 0 && e <= energies[i - 1] {
            return Err(Error::InvalidParam("energies must be strictly ascending"));
        }
    }
    Ok(())
}

/// Counting values n(E) for a single trial, one entry per grid energy.
///
/// The configuration is fully determined by (seed, trial), so callers may
/// evaluate trials in any order — or concurrently — and still assemble the
/// same curve.
pub fn trial_counts(
    g: &Graph,
    f: &VertexSet,
    model: Model,
    p: f64,
    energies: &[f64],
    seed: u64,
    trial: u64,
) -> Result<Vec<u64>> {
    validate_energies(energies)?;
    let cfg = sample_configuration(g, p, seed, trial)?;
    let op = match model {
        Model::AndersonH => restricted_anderson(g, f, &cfg)?,
        Model::PercolationH => percolation_hamiltonian(g, f, &cfg)?,
    };
    energies
        .iter()
        .map(|&e| count_below(&op, e).map(|c| c as u64))
        .collect()
}

/// Assemble a curve from a full table of per-trial counts (row t = trial t).
///
/// Means and standard errors are produced from exact integer sums, so the
/// result is independent of how the table was filled in. With a single
/// trial every standard error is zero.
pub fn curve_from_counts(
    model: Model,
    energies: &[f64],
    counts_by_trial: &[Vec<u64>],
    window_size: usize,
    seed: u64,
    window: String,
) -> Result<IDSCurve> {
    validate_energies(energies)?;
    if window_size == 0 {
        return Err(Error::EmptySet);
    }
    let trials = counts_by_trial.len() as u64;
    if trials == 0 {
        return Err(Error::InvalidParam("trials must be at least 1"));
    }
    for row in counts_by_trial {
        if row.len() != energies.len() {
            return Err(Error::DimensionMismatch { expected: energies.len(), got: row.len() });
        }
        if row.iter().any(|&c| c > window_size as u64) {
            return Err(Error::InvalidParam("count exceeds window size"));
        }
    }
    let n = trials as f64;
    let size = window_size as f64;
    let mut estimates = Vec::with_capacity(energies.len());
    let mut stderrs = Vec::with_capacity(energies.len());
    for j in 0..energies.len() {
        let mut sum: u64 = 0;
        let mut sumsq: u128 = 0;
        for row in counts_by_trial {
            sum += row[j];
            sumsq += (row[j] as u128) * (row[j] as u128);
        }
        estimates.push(sum as f64 / (n * size));
        if trials == 1 {
            stderrs.push(0.0);
        } else {
            // trials·Σc² − (Σc)² = trials·(trials−1)·sample variance numerator,
            // exact in integers; one square root at the end.
            let spread = (trials as u128) * sumsq - (sum as u128) * (sum as u128);
            let denom = n * n * (n - 1.0);
            stderrs.push(math::sqrt(spread as f64 / denom) / size);
        }
    }
    Ok(IDSCurve {
        model,
        energies: energies.to_vec(),
        estimates,
        stderrs,
        trials,
        seed,
        window,
    })
}

fn describe_window(f: &VertexSet, g: &Graph) -> String {
    if f.len() == g.n() {
        format!("all {} vertices", g.n())
    } else {
        format!("{} of {} vertices", f.len(), g.n())
    }
}

/// Mean normalized counting curve for `model` on window F: `trials`
/// independent configurations, each scored at every grid energy.
pub fn estimate_mean_counting(
    g: &Graph,
    f: &VertexSet,
    model: Model,
    p: f64,
    energies: &[f64],
    trials: u64,
    seed: u64,
) -> Result<IDSCurve> {
    if trials == 0 {
        return Err(Error::InvalidParam("trials must be at least 1"));
    }
    let mut table = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        table.push(trial_counts(g, f, model, p, energies, seed, t)?);
    }
    curve_from_counts(model, energies, &table, f.len(), seed, describe_window(f, g))
}

/// ln P(X ≤ k) for X ~ Binomial(n, p), by stable log-space summation of the
/// term recurrence t_{i+1}/t_i = (n−i)/(i+1) · p/(1−p).
fn binomial_cdf_ln(k: u64, n: u64, p: f64) -> f64 {
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return if k >= n { 0.0 } else { f64::NEG_INFINITY };
    }
    let ratio_logs = math::ln(p) - math::ln(1.0 - p);
    let mut log_term = n as f64 * math::ln(1.0 - p);
    let mut log_sum = log_term;
    for i in 0..k {
        log_term += math::ln((n - i) as f64 / (i + 1) as f64) + ratio_logs;
        // log-sum-exp, online form.
        let (hi, lo) = if log_sum >= log_term { (log_sum, log_term) } else { (log_term, log_sum) };
        log_sum = hi + math::ln(1.0 + math::exp(lo - hi));
    }
    log_sum
}

/// Exact one-sided 95% upper confidence limit for a binomial proportion
/// with k successes in n trials: the p solving P(X ≤ k; n, p) = 0.05.
pub fn binomial_upper_95(k: u64, n: u64) -> f64 {
    if k >= n {
        return 1.0;
    }
    let target = math::ln(0.05);
    // CDF is strictly decreasing in p; at p = k/n it is ≥ 1/2 > 0.05.
    let mut lo = k as f64 / n as f64;
    let mut hi = 1.0;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if binomial_cdf_ln(k, n, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Monte Carlo frequency of the event {E₁(h^U_ω) ≤ E}, with an exact
/// one-sided 95% upper confidence limit. The event is scored through the
/// counting function — E₁ ≤ E exactly when n(E) ≥ 1 — so each trial costs
/// one factorization and no eigensolve.
pub fn estimate_ground_state_prob(
    g: &Graph,
    u: &VertexSet,
    p: f64,
    e: f64,
    trials: u64,
    seed: u64,
) -> Result<ProbEstimate> {
    if trials == 0 {
        return Err(Error::InvalidParam("trials must be at least 1"));
    }
    let mut hits: u64 = 0;
    for t in 0..trials {
        let cfg = sample_configuration(g, p, seed, t)?;
        let op = restricted_anderson(g, u, &cfg)?;
        if count_below(&op, e)? >= 1 {
            hits += 1;
        }
    }
    Ok(ProbEstimate {
        value: hits as f64 / trials as f64,
        one_sided_upper_95: binomial_upper_95(hits, trials),
        trials,
    })
}

/// Least-squares slope of ln|ln N̂| against |ln E| over the energies whose
/// estimate lies strictly inside (0, 1); the rest are reported as dropped.
pub fn fit_lifshitz_exponent(curve: &IDSCurve) -> Result<LifshitzFit> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut used = Vec::new();
    let mut dropped = Vec::new();
    for (&e, &est) in curve.energies.iter().zip(curve.estimates.iter()) {
        if est > 0.0 && est < 1.0 {
            xs.push(math::abs(math::ln(e)));
            ys.push(math::ln(math::abs(math::ln(est))));
            used.push(e);
        } else {
            dropped.push(e);
        }
    }
    if used.len() < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: used.len() });
    }
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys.iter()).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if !(denom > 0.0) {
        return Err(Error::InvalidParam("fit needs distinct energies"));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok(LifshitzFit { slope, intercept, energies_used: used, energies_dropped: dropped })
}

/// One-sided comparison of a measured curve against the decay envelope
/// exp[−γ(α)·E^{−δ/(d+1)}]: at each energy the tested quantity is
/// estimate + 3·stderr, and an estimate of exactly zero passes outright.
pub fn verify_envelope(curve: &IDSCurve, params: &BoundParams) -> Result<EnvelopeReport> {
    if curve.model != Model::AndersonH {
        return Err(Error::InvalidParam(
            "envelope verification applies to the anderson-h model",
        ));
    }
    let gamma = gamma_alpha(params);
    let delta = params.growth.delta;
    let d = params.growth.d;
    let mut checks = Vec::with_capacity(curve.energies.len());
    let mut all_pass = true;
    for j in 0..curve.energies.len() {
        let energy = curve.energies[j];
        let estimate = curve.estimates[j];
        let stderr = curve.stderrs[j];
        let envelope = lifshitz_envelope(energy, gamma, delta, d)?;
        let bound = estimate + 3.0 * stderr;
        let pass = estimate == 0.0 || bound <= envelope;
        all_pass &= pass;
        checks.push(EnvelopeCheck {
            energy,
            estimate,
            stderr,
            bound,
            envelope,
            pass,
            equality: bound == envelope,
        });
    }
    Ok(EnvelopeReport { checks, all_pass })
}
