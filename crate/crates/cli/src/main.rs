//! `lifshitz` — build graph windows, sample spectra, and check the bounds.
//!
//! Subcommands:
//! - `gen-graph`: build a window, report its shape, optionally write it and
//!   its Laplacian out.
//! - `ids`: Monte Carlo integrated density of states, CSV on stdout or file,
//!   optional envelope check.
//! - `verify-th1`: ground-state probability bound on a window, by sampling.
//! - `verify-voronoi`: build an r-separated Voronoï partition and check its
//!   invariants.
//! - `verify-ordering`: sampled operator-ordering checks on random subsets.
//! - `verify-cheeger`: exhaustive spectral-gap lower bounds on all small
//!   connected subsets.
//! - `fit-lifshitz`: fit the double-log tail exponent of a curve CSV.
//! - `bounds-eval`: print the closed-form bounds for given parameters.
//!
//! Exit codes: 0 success; 1 a checked invariant failed, or the computation
//! could not finish; 2 usage (bad flags, malformed config or input file).

mod commands;
mod config;
mod enumerate;
mod errors;
mod formats;
mod graphspec;
mod runner;

use clap::{Parser, Subcommand};

use errors::CliError;

#[derive(Parser)]
#[command(
    name = "lifshitz",
    version,
    about = "Spectra of random Schrödinger operators on finite graph windows"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a window graph and report its shape
    GenGraph(commands::GenGraphArgs),
    /// Estimate the integrated density of states by Monte Carlo
    Ids(commands::IdsArgs),
    /// Check the ground-state probability bound on a sampled window
    VerifyTh1(commands::VerifyTh1Args),
    /// Build an r-separated Voronoï partition and check its invariants
    VerifyVoronoi(commands::VerifyVoronoiArgs),
    /// Check the operator orderings on random subsets and configurations
    VerifyOrdering(commands::VerifyOrderingArgs),
    /// Check spectral-gap lower bounds on all small connected subsets
    VerifyCheeger(commands::VerifyCheegerArgs),
    /// Fit the double-log tail exponent of a curve CSV
    FitLifshitz(commands::FitLifshitzArgs),
    /// Print the closed-form bounds for given parameters
    BoundsEval(commands::BoundsEvalArgs),
}

fn main() {
    // Dying quietly when the reader hangs up (`lifshitz ... | head`) is the
    // shell contract; Rust's default of ignoring SIGPIPE turns it into a
    // printing panic instead.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::GenGraph(a) => commands::gen_graph(a),
        Cmd::Ids(a) => commands::ids(a),
        Cmd::VerifyTh1(a) => commands::verify_th1(a),
        Cmd::VerifyVoronoi(a) => commands::verify_voronoi(a),
        Cmd::VerifyOrdering(a) => commands::verify_ordering(a),
        Cmd::VerifyCheeger(a) => commands::verify_cheeger(a),
        Cmd::FitLifshitz(a) => commands::fit_lifshitz(a),
        Cmd::BoundsEval(a) => commands::bounds_eval(a),
    };
    match result {
        Ok(()) => {}
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            std::process::exit(2);
        }
        Err(CliError::Check(m)) => {
            eprintln!("FAIL: {m}");
            std::process::exit(1);
        }
    }
}
