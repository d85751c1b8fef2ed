//! Shared fixtures for the integration suite: window pools, seeded random
//! draws, and a block-sum assembler for comparing against direct sums.
#![allow(dead_code)]

pub mod hiprec;

use lifshitz_core::generate::{generate_cayley_ball, generate_lattice_box, CayleyGroup};
use lifshitz_core::graph::{Graph, Vertex, VertexSet};
use lifshitz_core::operators::{OperatorKind, SymmetricOperator};
use lifshitz_core::rng::SplitMix;
use lifshitz_core::spectral::{eigenvalues_dense, lowest_eigenvalue};

/// Boxes in ℤ¹–ℤ³ small enough for dense spectra everywhere.
pub fn box_pool() -> Vec<Graph> {
    [
        vec![2],
        vec![3],
        vec![6],
        vec![2, 2],
        vec![3, 3],
        vec![4, 3],
        vec![5, 5],
        vec![6, 6],
        vec![2, 2, 2],
        vec![3, 3, 2],
    ]
    .iter()
    .map(|sides| generate_lattice_box(sides).unwrap())
    .collect()
}

/// Boxes plus word-metric balls, the full mix of window shapes.
pub fn window_pool() -> Vec<Graph> {
    let mut pool = box_pool();
    pool.push(generate_cayley_ball(CayleyGroup::ZLattice(1), 4).unwrap());
    pool.push(generate_cayley_ball(CayleyGroup::ZLattice(2), 2).unwrap());
    pool.push(generate_cayley_ball(CayleyGroup::Heisenberg, 2).unwrap());
    pool
}

/// Nonempty random subset of 0..n, each vertex kept with probability `keep`.
pub fn random_window(rng: &mut SplitMix, n: usize, keep: f64) -> VertexSet {
    let mut picked: Vec<Vertex> = (0..n).filter(|_| rng.next_unit() < keep).collect();
    if picked.is_empty() {
        picked.push(rng.next_below(n));
    }
    VertexSet::new(picked)
}

/// Random connected subset grown vertex by vertex from a random start.
pub fn random_connected_subset(g: &Graph, rng: &mut SplitMix, max_size: usize) -> VertexSet {
    let start = rng.next_below(g.n());
    let mut in_set = vec![false; g.n()];
    in_set[start] = true;
    let mut members = vec![start];
    let mut boundary: Vec<Vertex> = g.adj(start).to_vec();
    let target = 1 + rng.next_below(max_size);
    while members.len() < target && !boundary.is_empty() {
        let pick = rng.next_below(boundary.len());
        let v = boundary.swap_remove(pick);
        if in_set[v] {
            continue;
        }
        in_set[v] = true;
        members.push(v);
        boundary.extend(g.adj(v).iter().copied().filter(|&w| !in_set[w]));
    }
    VertexSet::new(members)
}

/// Splits a set into two disjoint nonempty halves; None if it has < 2
/// vertices.
pub fn random_split(rng: &mut SplitMix, vs: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    if vs.len() < 2 {
        return None;
    }
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in vs.iter() {
            if rng.next_unit() < 0.5 {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        if !a.is_empty() && !b.is_empty() {
            return Some((VertexSet::new(a), VertexSet::new(b)));
        }
    }
}

/// Block-diagonal sum of two operators with disjoint supports, indexed by
/// the union support.
pub fn direct_sum(a: &SymmetricOperator, b: &SymmetricOperator) -> SymmetricOperator {
    assert!(!a.support().intersects(b.support()), "supports must be disjoint");
    let union = a.support().union(b.support());
    let mut diag = vec![0.0; union.len()];
    let mut off = Vec::new();
    for op in [a, b] {
        for (pos, v) in op.support().iter().enumerate() {
            diag[union.position(v).unwrap()] = op.diag()[pos];
        }
        for &(i, j, w) in op.offdiag() {
            let ui = union.position(op.support().get(i as usize)).unwrap() as u32;
            let uj = union.position(op.support().get(j as usize)).unwrap() as u32;
            off.push((ui, uj, w));
        }
    }
    off.sort_unstable_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    SymmetricOperator::from_parts(union, diag, off, OperatorKind::Custom).unwrap()
}

/// Diagonal operator c·D_G on the given support (window degrees).
pub fn degree_diag(g: &Graph, vs: &VertexSet, c: f64) -> SymmetricOperator {
    let diag = vs.iter().map(|v| c * g.degree(v) as f64).collect();
    SymmetricOperator::from_parts(vs.clone(), diag, Vec::new(), OperatorKind::Custom).unwrap()
}

pub fn dense_eigs(op: &SymmetricOperator) -> Vec<f64> {
    eigenvalues_dense(op).unwrap().eigenvalues
}

/// Smallest eigenvalue of hi − lo; ≥ −tolerance certifies lo ≤ hi in the
/// quadratic-form order.
pub fn min_eig_diff(hi: &SymmetricOperator, lo: &SymmetricOperator) -> f64 {
    let diff = SymmetricOperator::difference(hi, lo).unwrap();
    lowest_eigenvalue(&diff).unwrap()
}
