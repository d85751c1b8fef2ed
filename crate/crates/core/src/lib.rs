//! Spectra of random Schrödinger operators on finite windows of polynomially
//! growing graphs.
//!
//! The crate builds the operator zoo of discrete percolation theory — graph
//! Laplacians with Neumann and Dirichlet boundary conditions, Anderson
//! Hamiltonians with Bernoulli potentials, and percolation Hamiltonians with
//! Dirichlet conditions at closed sites — as exact finite symmetric matrices,
//! and provides the spectral machinery (dense solves, inertia counting,
//! bisection) needed to study their low-lying eigenvalues. On top of that sit
//! the combinatorial Voronoï decomposition of a window into connected cells,
//! the closed-form Lifshitz-tail bounds, and seeded Monte Carlo estimators of
//! the integrated density of states.
//!
//! Everything here is `no_std` + `alloc`: transcendental functions come from
//! `libm` so results are bit-identical across platforms and thread counts.
//! File formats, parallel trial execution, and the command-line driver live in
//! the companion `lifshitz-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod generate;
pub mod graph;
mod math;
pub mod ids;
pub mod operators;
pub mod partition;
pub mod percolation;
pub mod rng;
pub mod spectral;

use core::fmt;

/// Crate-wide error type. Variants carry enough context to name the offending
/// vertex, dimension, or parameter in diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A vertex index was outside the graph or the `within` set.
    VertexOutsideSet { vertex: usize },
    /// A vertex set was not contained in the host graph's vertex range.
    NotASubset { vertex: usize },
    /// An operation that needs a connected vertex set got a disconnected one.
    Disconnected,
    /// An operation that needs a nonempty vertex set got an empty one.
    EmptySet,
    /// A probability parameter was outside [0, 1].
    InvalidProbability(f64),
    /// A numeric parameter violated its stated domain.
    InvalidParam(&'static str),
    /// Vector or configuration length does not match the operator or graph.
    DimensionMismatch { expected: usize, got: usize },
    /// Dense eigensolver refused: use inertia counting or bisection instead.
    DimensionAboveDenseThreshold { dim: usize, threshold: usize },
    /// Symmetric factorization hit a singular pivot and no dense fallback fits.
    FactorizationBreakdown,
    /// An iterative eigensolve did not reach its tolerance.
    NoConvergence { residual: f64 },
    /// Two Voronoï centers are closer (in the set metric) than the radius allows.
    CentersTooClose { a: usize, b: usize, distance: usize },
    /// A decomposition invariant failed; the certificate names the first violation.
    PartitionInvariant(partition::Violation),
    /// Double-logarithm input was 0, 1, or outside (0, 1).
    UndefinedLog,
    /// A fit needs more usable data points than the curve provides.
    TooFewPoints { needed: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutsideSet { vertex } => {
                write!(f, "vertex {vertex} is not in the given vertex set")
            }
            Error::NotASubset { vertex } => {
                write!(f, "vertex {vertex} lies outside the host graph")
            }
            Error::Disconnected => write!(f, "vertex set is disconnected (infinite diameter)"),
            Error::EmptySet => write!(f, "vertex set is empty"),
            Error::InvalidProbability(p) => write!(f, "probability {p} is outside [0, 1]"),
            Error::InvalidParam(what) => write!(f, "invalid parameter: {what}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::DimensionAboveDenseThreshold { dim, threshold } => write!(
                f,
                "dimension {dim} exceeds the dense threshold {threshold}; \
                 use count_below or the bisection path"
            ),
            Error::FactorizationBreakdown => {
                write!(f, "symmetric factorization broke down (singular pivot)")
            }
            Error::NoConvergence { residual } => {
                write!(f, "eigensolve did not converge (residual {residual:e})")
            }
            Error::CentersTooClose { a, b, distance } => write!(
                f,
                "centers {a} and {b} are at distance {distance}, not separated by the radius"
            ),
            Error::PartitionInvariant(v) => write!(f, "partition invariant violated: {v}"),
            Error::UndefinedLog => write!(f, "double logarithm undefined: arguments must lie in (0, 1)"),
            Error::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} usable points, got {got}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
