//! Window generators: boxes in ℤᵈ and word-metric balls in Cayley graphs.
//!
//! Both generators label vertices with integer vectors (lattice coordinates,
//! group elements) and set the ambient degree to the infinite-graph value, so
//! Dirichlet penalties and seeded sampling behave as if the window were cut
//! out of the infinite graph.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::{Error, Result};

/// Axis-aligned box in ℤᵈ with nearest-neighbor edges. Vertex order is
/// row-major with the last axis fastest; labels are the coordinates. Ambient
/// degree is 2d everywhere: the box is a window of the full lattice.
pub fn generate_lattice_box(sides: &[usize]) -> Result<Graph> {
    if sides.is_empty() {
        return Err(Error::InvalidParam("sides must be nonempty"));
    }
    if sides.iter().any(|&s| s == 0) {
        return Err(Error::InvalidParam("sides must be positive"));
    }
    let d = sides.len();
    let n: usize = sides.iter().product();
    let mut strides = vec![1usize; d];
    for axis in (0..d.saturating_sub(1)).rev() {
        strides[axis] = strides[axis + 1] * sides[axis + 1];
    }
    let mut coords = vec![0usize; d];
    let mut labels: Vec<Vec<i64>> = Vec::with_capacity(n);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for idx in 0..n {
        labels.push(coords.iter().map(|&c| c as i64).collect());
        for axis in 0..d {
            if coords[axis] + 1 < sides[axis] {
                edges.push((idx, idx + strides[axis]));
            }
        }
        // Mixed-radix increment, last axis fastest.
        for axis in (0..d).rev() {
            coords[axis] += 1;
            if coords[axis] < sides[axis] {
                break;
            }
            coords[axis] = 0;
        }
    }
    let mut g = Graph::from_edges(n, &edges)?;
    g.set_ambient_degrees(vec![2 * d; n])?;
    g.set_labels(labels)?;
    Ok(g)
}

/// The two built-in groups for Cayley balls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyGroup {
    /// ℤᵈ with generators ±e_1, …, ±e_d; the word metric is ℓ¹.
    ZLattice(usize),
    /// Discrete Heisenberg group: triples (a, b, c) with
    /// (a, b, c)·(a′, b′, c′) = (a+a′, b+b′, c+c′+a·b′), generated by
    /// x = (1,0,0), y = (0,1,0) and their inverses. Polynomial growth of
    /// degree 4, which exercises d ≠ δ parameter combinations.
    Heisenberg,
}

impl CayleyGroup {
    fn generator_count(&self) -> usize {
        match self {
            CayleyGroup::ZLattice(d) => 2 * d,
            CayleyGroup::Heisenberg => 4,
        }
    }

    /// Right-multiplies `v` by generator `k`. Generator order is fixed
    /// (+e_i, −e_i alternating; x, x⁻¹, y, y⁻¹) so vertex discovery order,
    /// and with it every downstream seeded draw, is deterministic.
    fn apply(&self, v: &[i64], k: usize) -> Vec<i64> {
        match self {
            CayleyGroup::ZLattice(_) => {
                let mut w = v.to_vec();
                let axis = k / 2;
                w[axis] += if k % 2 == 0 { 1 } else { -1 };
                w
            }
            CayleyGroup::Heisenberg => {
                let (a, b, c) = (v[0], v[1], v[2]);
                match k {
                    0 => vec![a + 1, b, c],     // ·x
                    1 => vec![a - 1, b, c],     // ·x⁻¹
                    2 => vec![a, b + 1, c + a], // ·y
                    _ => vec![a, b - 1, c - a], // ·y⁻¹
                }
            }
        }
    }

    fn identity(&self) -> Vec<i64> {
        match self {
            CayleyGroup::ZLattice(d) => vec![0; *d],
            CayleyGroup::Heisenberg => vec![0, 0, 0],
        }
    }
}

/// Subgraph induced on the word-metric ball of radius `r` around the
/// identity. Vertices are indexed in breadth-first discovery order; labels
/// are the group elements; ambient degree is the generator count.
pub fn generate_cayley_ball(group: CayleyGroup, r: usize) -> Result<Graph> {
    if let CayleyGroup::ZLattice(0) = group {
        return Err(Error::InvalidParam("lattice dimension must be positive"));
    }
    let gens = group.generator_count();
    let mut index: BTreeMap<Vec<i64>, Vertex> = BTreeMap::new();
    let mut elements: Vec<Vec<i64>> = Vec::new();
    let id = group.identity();
    index.insert(id.clone(), 0);
    elements.push(id);
    let mut frontier = vec![0usize];
    for _ in 0..r {
        let mut next = Vec::new();
        for &u in &frontier {
            let word = elements[u].clone();
            for k in 0..gens {
                let w = group.apply(&word, k);
                if !index.contains_key(&w) {
                    let fresh = elements.len();
                    index.insert(w.clone(), fresh);
                    elements.push(w);
                    next.push(fresh);
                }
            }
        }
        frontier = next;
    }
    // Induced edges: every generator step that stays inside the ball.
    let mut edges = Vec::new();
    for (u, word) in elements.iter().enumerate() {
        for k in 0..gens {
            let w = group.apply(word, k);
            if let Some(&v) = index.get(&w) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    let n = elements.len();
    let mut g = Graph::from_edges(n, &edges)?;
    g.set_ambient_degrees(vec![gens; n])?;
    g.set_labels(elements)?;
    Ok(g)
}
