//! Cross-module behavior of the Monte Carlo estimators: samplewise
//! domination between the two operator families, subadditivity transfer
//! through a Voronoï decomposition, schedule-independent curve assembly,
//! enumeration-exact ground-state frequencies, and the exact binomial
//! confidence bound.

mod common;

use common::hiprec::{rel_err, Fx};
use lifshitz_core::generate::generate_lattice_box;
use lifshitz_core::graph::VertexSet;
use lifshitz_core::ids::{
    binomial_upper_95, curve_from_counts, estimate_ground_state_prob, estimate_mean_counting,
    fit_lifshitz_exponent, trial_counts, Model,
};
use lifshitz_core::operators::restricted_anderson;
use lifshitz_core::partition::decompose;
use lifshitz_core::percolation::sample_configuration;
use lifshitz_core::spectral::count_below;

const GRID: [f64; 5] = [0.05, 0.2, 0.5, 1.0, 2.0];

#[test]
fn percolation_counts_never_exceed_restriction_counts() {
    let g = generate_lattice_box(&[4, 4]).unwrap();
    let f = VertexSet::full(16);
    for trial in 0..40 {
        let h = trial_counts(&g, &f, Model::AndersonH, 0.6, &GRID, 77, trial).unwrap();
        let big = trial_counts(&g, &f, Model::PercolationH, 0.6, &GRID, 77, trial).unwrap();
        for (a, b) in big.iter().zip(h.iter()) {
            assert!(a <= b, "trial {trial}: {a} > {b}");
        }
    }
}

#[test]
fn cell_counts_bound_the_window_count_from_above() {
    let g = generate_lattice_box(&[4, 4]).unwrap();
    let f = VertexSet::full(16);
    let cells = decompose(&g, &f, 2).unwrap().cells;
    assert!(cells.len() >= 2, "decomposition should be nontrivial");
    for trial in 0..25 {
        let cfg = sample_configuration(&g, 0.6, 123, trial).unwrap();
        let whole = restricted_anderson(&g, &f, &cfg).unwrap();
        for &e in &GRID {
            let lhs = count_below(&whole, e).unwrap();
            let rhs: usize = cells
                .iter()
                .map(|cell| {
                    let block = restricted_anderson(&g, cell, &cfg).unwrap();
                    count_below(&block, e).unwrap()
                })
                .sum();
            assert!(lhs <= rhs, "trial {trial}, E = {e}: {lhs} > {rhs}");
        }
    }
}

#[test]
fn assembly_order_cannot_change_the_curve() {
    let g = generate_lattice_box(&[5, 3]).unwrap();
    let f = VertexSet::full(15);
    let trials = 30u64;
    let forward: Vec<Vec<u64>> = (0..trials)
        .map(|t| trial_counts(&g, &f, Model::AndersonH, 0.55, &GRID, 5, t).unwrap())
        .collect();
    // Fill the table backwards, as an out-of-order scheduler would.
    let mut shuffled = vec![Vec::new(); trials as usize];
    for t in (0..trials).rev() {
        shuffled[t as usize] =
            trial_counts(&g, &f, Model::AndersonH, 0.55, &GRID, 5, t).unwrap();
    }
    let window = String::from("all 15 vertices");
    let a = curve_from_counts(Model::AndersonH, &GRID, &forward, 15, 5, window.clone()).unwrap();
    let b = curve_from_counts(Model::AndersonH, &GRID, &shuffled, 15, 5, window).unwrap();
    assert_eq!(a, b);
    let direct =
        estimate_mean_counting(&g, &f, Model::AndersonH, 0.55, &GRID, trials, 5).unwrap();
    assert_eq!(a.estimates, direct.estimates);
    assert_eq!(a.stderrs, direct.stderrs);
}

#[test]
fn ground_state_frequency_matches_enumeration() {
    // On the 2×2 box the ground energy is zero exactly when every site is
    // open, an event of probability p⁴ = 1/16 at p = 1/2.
    let g = generate_lattice_box(&[2, 2]).unwrap();
    let u = VertexSet::full(4);
    let est = estimate_ground_state_prob(&g, &u, 0.5, 0.0, 4000, 29).unwrap();
    assert!((est.value - 0.0625).abs() < 0.02, "frequency {}", est.value);
    assert!(est.value <= est.one_sided_upper_95 && est.one_sided_upper_95 <= 1.0);
}

#[test]
fn confidence_bound_solves_its_defining_equation() {
    // Independent check with the exact degree-10 binomial polynomial.
    let u = binomial_upper_95(3, 10);
    let q = 1.0 - u;
    let cdf = q.powi(10)
        + 10.0 * u * q.powi(9)
        + 45.0 * u * u * q.powi(8)
        + 120.0 * u * u * u * q.powi(7);
    assert!((cdf - 0.05).abs() < 1e-9, "cdf at upper bound: {cdf}");

    // k = 0 collapses to 1 − 0.05^{1/10}, evaluated by the fixed-point oracle.
    let oracle = Fx::from_int(1)
        .sub(&Fx::from_decimal(5, -2).pow(&Fx::from_decimal(1, -1)));
    assert!(rel_err(binomial_upper_95(0, 10), &oracle) < 1e-10);
}

#[test]
fn measured_curve_yields_a_finite_fit() {
    // No gate on the value — a measured slope is reported, not asserted.
    let g = generate_lattice_box(&[60]).unwrap();
    let f = VertexSet::full(60);
    let energies = [0.3, 0.6, 1.0, 1.5, 2.2];
    let curve =
        estimate_mean_counting(&g, &f, Model::AndersonH, 0.5, &energies, 200, 9).unwrap();
    let fit = fit_lifshitz_exponent(&curve).unwrap();
    assert!(fit.slope.is_finite() && fit.intercept.is_finite());
    assert!(fit.energies_used.len() >= 3);
}
