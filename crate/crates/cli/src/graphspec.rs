//! Graph specifiers.
//!
//! A window is named by a `kind:params` token: `lattice2d:6x6` and
//! `lattice:4x4x2` are boxes in ℤ², ℤᵈ; `cayley-z1:5`, `cayley-z2:3` are
//! word-metric balls in ℤᵈ; `cayley-heis:2` is a ball in the discrete
//! Heisenberg group; `file:PATH` loads the text interchange format. The
//! generated windows carry their ambient degrees and vertex labels, so
//! percolation sampled on them is stable when the window grows.

use lifshitz_core::generate::{generate_cayley_ball, generate_lattice_box, CayleyGroup};
use lifshitz_core::graph::Graph;

use crate::errors::{usage, CliResult};
use crate::formats;

pub fn parse(spec: &str) -> CliResult<Graph> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("graph spec `{spec}` must look like kind:params")))?;
    match kind {
        "lattice2d" | "lattice" => {
            let sides: Vec<usize> = rest
                .split('x')
                .map(|t| t.parse().ok())
                .collect::<Option<_>>()
                .ok_or_else(|| {
                    usage(format!(
                        "graph spec `{spec}`: sides must be positive integers separated by `x`"
                    ))
                })?;
            if kind == "lattice2d" && sides.len() != 2 {
                return Err(usage(format!("graph spec `{spec}`: lattice2d takes exactly WxH")));
            }
            generate_lattice_box(&sides).map_err(|e| usage(format!("graph spec `{spec}`: {e}")))
        }
        "cayley-heis" => {
            let r = radius(spec, rest)?;
            generate_cayley_ball(CayleyGroup::Heisenberg, r)
                .map_err(|e| usage(format!("graph spec `{spec}`: {e}")))
        }
        _ if kind.starts_with("cayley-z") => {
            let d: usize = kind["cayley-z".len()..]
                .parse()
                .ok()
                .filter(|&d| d >= 1)
                .ok_or_else(|| usage(format!("graph spec `{spec}`: bad lattice dimension")))?;
            let r = radius(spec, rest)?;
            generate_cayley_ball(CayleyGroup::ZLattice(d), r)
                .map_err(|e| usage(format!("graph spec `{spec}`: {e}")))
        }
        "file" => formats::graph_from_str(&formats::read_file(rest)?),
        _ => Err(usage(format!("unknown graph kind `{kind}`"))),
    }
}

fn radius(spec: &str, rest: &str) -> CliResult<usize> {
    rest.parse()
        .map_err(|_| usage(format!("graph spec `{spec}`: radius must be a nonnegative integer")))
}
