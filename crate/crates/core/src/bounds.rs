//! Closed-form constants, thresholds, and envelopes for low-energy spectra
//! of random Hamiltonians on polynomially growing graphs.
//!
//! Everything here is elementary arithmetic on a handful of parameters —
//! kept in one place, evaluated through `libm`, and cross-checked in the
//! test suite against an independent high-precision evaluator, so that no
//! derived constant is ever trusted to a single code path.
//!
//! The central chain: a connected vertex set U has spectral gap
//! ϑ_U ≥ 1/(|U|·diam U); for energies E ≤ α²ϑ_U/42 the probability that
//! the restricted Anderson Hamiltonian on U has ground energy ≤ E is at
//! most exp[−(1−p−α)²·|U|]; summed over the cells of a Voronoï partition at
//! radius r(E) ∝ E^{−1/(d+1)}, that yields the integrated-density envelope
//! exp[−γ(α)·E^{−δ/(d+1)}].

use crate::graph::{ball, Graph, GrowthParams, VertexSet};
use crate::math;
use crate::{Error, Result};

/// Percolation probability p, margin α ∈ (0, 1−p), and the growth data of
/// the ambient graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundParams {
    pub p: f64,
    pub alpha: f64,
    pub growth: GrowthParams,
}

impl BoundParams {
    pub fn new(p: f64, alpha: f64, growth: GrowthParams) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        if !(alpha > 0.0 && alpha < 1.0 - p) {
            return Err(Error::InvalidParam("alpha must lie in (0, 1-p)"));
        }
        Ok(BoundParams { p, alpha, growth })
    }
}

/// Spectral-gap lower bound 1/(|U|·diam U) for a connected vertex set.
/// Undefined for singletons (diameter 0).
pub fn cheeger_lower_bound(size_u: usize, diam_u: usize) -> Result<f64> {
    if size_u == 0 {
        return Err(Error::EmptySet);
    }
    if diam_u == 0 {
        return Err(Error::InvalidParam("diameter must be at least 1"));
    }
    Ok(1.0 / (size_u as f64 * diam_u as f64))
}

/// Spectral-gap lower bound const/(1+diam V)² for balls in a Cayley graph.
/// The constant depends on the group and generating set and is supplied by
/// the caller.
pub fn cayley_gap_bound(diam_v: usize, c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::InvalidParam("cayley constant must be positive"));
    }
    let d = 1.0 + diam_v as f64;
    Ok(c / (d * d))
}

/// The energy threshold α²·gap/42 below which the small-deviation bound on
/// the ground state applies.
pub fn energy_threshold(alpha: f64, gap: f64) -> Result<f64> {
    if !(gap > 0.0) {
        return Err(Error::InvalidParam("spectral gap must be positive"));
    }
    Ok(alpha * alpha * gap / 42.0)
}

/// Probability bound exp[−(1−p−α)²·|U|] for the event that the restricted
/// Anderson Hamiltonian on U has ground energy below the threshold.
pub fn ground_state_prob_bound(params: &BoundParams, size_u: usize) -> f64 {
    let gamma = 1.0 - params.p - params.alpha;
    math::exp(-gamma * gamma * size_u as f64)
}

/// The partition radius matched to energy E:
/// r = (c(α)/(2·b_d))^{1/(d+1)} · E^{−1/(d+1)} with c(α) = α²/42.
pub fn radius_for_energy(e: f64, params: &BoundParams) -> Result<f64> {
    if !(e > 0.0) {
        return Err(Error::InvalidParam("energy must be positive"));
    }
    let c_alpha = params.alpha * params.alpha / 42.0;
    let inv = 1.0 / (params.growth.d as f64 + 1.0);
    Ok(math::powf(c_alpha / (2.0 * params.growth.b_d), inv) * math::powf(e, -inv))
}

/// The envelope constant
/// γ(α) = η·2^{−δ}·(α²/(84·b_d))^{δ/(d+1)}·(1−p−α)².
pub fn gamma_alpha(params: &BoundParams) -> f64 {
    let g = &params.growth;
    let margin = 1.0 - params.p - params.alpha;
    let expo = g.delta / (g.d as f64 + 1.0);
    g.eta
        * math::powf(2.0, -g.delta)
        * math::powf(params.alpha * params.alpha / (84.0 * g.b_d), expo)
        * margin
        * margin
}

/// The integrated-density envelope exp[−γ·E^{−δ/(d+1)}].
pub fn lifshitz_envelope(e: f64, gamma: f64, delta: f64, d: usize) -> Result<f64> {
    if !(e > 0.0) {
        return Err(Error::InvalidParam("energy must be positive"));
    }
    Ok(math::exp(-gamma * math::powf(e, -delta / (d as f64 + 1.0))))
}

/// Tail bound exp[−(q−α)²·n] for the probability that the mean of n
/// independent Bernoulli(q) variables falls to α or below.
pub fn hoeffding_bound(q: f64, alpha: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidProbability(q));
    }
    if !(alpha > 0.0 && alpha < q) {
        return Err(Error::InvalidParam("alpha must lie in (0, q)"));
    }
    let d = q - alpha;
    Ok(math::exp(-d * d * n as f64))
}

/// Fraction of window vertices whose internal ball of radius r holds at
/// least η·r^δ vertices — the δ-dimensional density diagnostic.
pub fn density_fraction(
    g: &Graph,
    f: &VertexSet,
    r: usize,
    eta: f64,
    delta: f64,
) -> Result<f64> {
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    let threshold = eta * math::powf(r as f64, delta);
    let mut hits = 0usize;
    for x in f.iter() {
        if ball(g, x, r, f)?.len() as f64 >= threshold {
            hits += 1;
        }
    }
    Ok(hits as f64 / f.len() as f64)
}

/// The double-logarithm exponent ln|ln N| / |ln E|, defined for N and E
/// strictly inside (0, 1).
pub fn lifshitz_double_log(n: f64, e: f64) -> Result<f64> {
    if !(n > 0.0 && n < 1.0 && e > 0.0 && e < 1.0) {
        return Err(Error::UndefinedLog);
    }
    Ok(math::ln(math::abs(math::ln(n))) / math::abs(math::ln(e)))
}
