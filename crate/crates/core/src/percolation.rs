//! Seeded Bernoulli site percolation.
//!
//! A configuration ω assigns each vertex an independent Bernoulli(p) bit:
//! 1 = open, 0 = closed. Bits are counter-based — pure functions of
//! (seed, trial, vertex label) — so a configuration is reproducible under any
//! execution order and stable when the window grows: enlarging a lattice box
//! does not change the bits of the vertices it already contained. Unlabeled
//! graphs fall back to hashing the vertex index.

use alloc::vec::Vec;

use crate::graph::{self, Graph, Vertex, VertexSet};
use crate::rng;
use crate::{Error, Result};

/// Per-vertex Bernoulli outcome over a graph's vertex set.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    bits: Vec<u8>,
    p: f64,
    seed: u64,
    trial: u64,
}

/// Draws ω for every vertex of `g`.
pub fn sample_configuration(g: &Graph, p: f64, seed: u64, trial: u64) -> Result<Configuration> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut bits = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        let u = match g.labels() {
            Some(labels) => rng::unit(rng::hash_words(seed, trial, &labels[x])),
            None => rng::unit(rng::hash_words(seed, trial, &[x as i64])),
        };
        bits.push(u8::from(u < p));
    }
    Ok(Configuration { bits, p, seed, trial })
}

impl Configuration {
    /// Builds a configuration from explicit bits (tests, file readers).
    pub fn from_bits(bits: Vec<u8>, p: f64, seed: u64, trial: u64) -> Result<Configuration> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParam("configuration bits must be 0 or 1"));
        }
        Ok(Configuration { bits, p, seed, trial })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_open(&self, x: Vertex) -> bool {
        self.bits[x] == 1
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trial(&self) -> u64 {
        self.trial
    }

    pub fn open_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Number of closed vertices inside `vs`.
    pub fn closed_in(&self, vs: &VertexSet) -> usize {
        vs.iter().filter(|&x| !self.is_open(x)).count()
    }
}

fn check_same_graph(g: &Graph, cfg: &Configuration) -> Result<()> {
    if g.n() != cfg.len() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: cfg.len() });
    }
    Ok(())
}

/// V_ω: the set of open vertices.
pub fn open_set(cfg: &Configuration) -> VertexSet {
    VertexSet::new((0..cfg.len()).filter(|&x| cfg.is_open(x)).collect())
}

/// The percolation subgraph: induced on V_ω, ambient degrees from `g`.
pub fn open_subgraph(g: &Graph, cfg: &Configuration) -> Result<(Graph, Vec<Vertex>)> {
    check_same_graph(g, cfg)?;
    graph::induced_subgraph(g, &open_set(cfg))
}

/// Connected components of the open subgraph, as vertex sets of `g`.
pub fn clusters(g: &Graph, cfg: &Configuration) -> Result<Vec<VertexSet>> {
    check_same_graph(g, cfg)?;
    Ok(graph::connected_components(g, &open_set(cfg)))
}
