//! Finite windows of (possibly infinite) graphs.
//!
//! A `Graph` is a finite undirected simple graph together with a per-vertex
//! ambient degree: the degree the vertex has in the infinite graph the window
//! was cut from. Standalone graphs default the ambient degree to the
//! within-window degree; the generators in [`crate::generate`] set the true
//! infinite-graph value (2d for ℤᵈ boxes, |S| for Cayley balls). The ambient
//! annotation is what makes Dirichlet boundary penalties exact near the edge
//! of a window — the window itself cannot infer it.
//!
//! Vertices are dense indices 0..n−1. All set-valued results use sorted index
//! lists; deterministic ordering is load-bearing: the greedy scan in the
//! partition module and the seeded samplers depend on it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

pub type Vertex = usize;

/// Sorted set of vertex indices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    idx: Vec<Vertex>,
}

impl VertexSet {
    /// Builds a set from arbitrary indices; sorts and deduplicates.
    pub fn new(mut v: Vec<Vertex>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet { idx: v }
    }

    /// Accepts an already strictly increasing list.
    pub fn from_sorted(v: Vec<Vertex>) -> Result<Self> {
        if v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParam("vertex list must be strictly increasing"));
        }
        Ok(VertexSet { idx: v })
    }

    /// The full vertex set {0, …, n−1}.
    pub fn full(n: usize) -> Self {
        VertexSet { idx: (0..n).collect() }
    }

    pub fn empty() -> Self {
        VertexSet { idx: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.idx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.idx.binary_search(&v).is_ok()
    }

    /// Position of `v` inside the sorted list, if present. This is the row
    /// index `v` gets in any operator supported on this set.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.idx.binary_search(&v).ok()
    }

    pub fn get(&self, i: usize) -> Vertex {
        self.idx[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.idx.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.idx
    }

    /// True when every index is a valid vertex of a graph on `n` vertices.
    pub fn fits(&self, n: usize) -> bool {
        self.idx.last().is_none_or(|&m| m < n)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v: Vec<Vertex> = self.idx.iter().chain(other.idx.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet { idx: v }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.idx.iter().any(|&v| other.contains(v))
    }

    /// Complement inside {0, …, n−1}.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet { idx: (0..n).filter(|&v| !self.contains(v)).collect() }
    }
}

/// Polynomial-growth parameters: |B_r(x)| ≤ b_d·rᵈ for every center and
/// radius, together with the δ-dimensional density constant η used by the
/// density-fraction diagnostic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GrowthParams {
    pub d: usize,
    pub b_d: f64,
    pub delta: f64,
    pub eta: f64,
}

impl GrowthParams {
    pub fn new(d: usize, b_d: f64, delta: f64, eta: f64) -> Result<Self> {
        if !(b_d >= 1.0) {
            return Err(Error::InvalidParam("b_d must be at least 1"));
        }
        if !(delta > 0.0 && delta <= d as f64) {
            return Err(Error::InvalidParam("delta must lie in (0, d]"));
        }
        if !(eta > 0.0) {
            return Err(Error::InvalidParam("eta must be positive"));
        }
        Ok(GrowthParams { d, b_d, delta, eta })
    }
}

/// Finite undirected simple graph with ambient-degree annotations and
/// optional integer-vector vertex labels (lattice coordinates, group words).
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    ambient: Vec<usize>,
    labels: Option<Vec<Vec<i64>>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects loops,
    /// duplicate edges, and out-of-range endpoints. Ambient degrees default
    /// to the within-graph degrees.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParam("loops are not allowed"));
            }
            if u >= n || v >= n {
                return Err(Error::NotASubset { vertex: u.max(v) });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in adj.iter_mut() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParam("duplicate edge"));
            }
        }
        let ambient = adj.iter().map(Vec::len).collect();
        Ok(Graph { adj, ambient, labels: None })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn adj(&self, x: Vertex) -> &[Vertex] {
        &self.adj[x]
    }

    /// Within-window degree.
    pub fn degree(&self, x: Vertex) -> usize {
        self.adj[x].len()
    }

    /// Degree of `x` in the ambient graph the window was cut from.
    pub fn ambient_degree(&self, x: Vertex) -> usize {
        self.ambient[x]
    }

    /// c_d: the maximum ambient degree (0 for the empty graph).
    pub fn max_ambient_degree(&self) -> usize {
        self.ambient.iter().copied().max().unwrap_or(0)
    }

    /// Overrides the ambient degrees. Each must dominate the within-window
    /// degree — a window cannot have more edges at a vertex than the ambient
    /// graph does.
    pub fn set_ambient_degrees(&mut self, deg: Vec<usize>) -> Result<()> {
        if deg.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: deg.len() });
        }
        for (x, &d) in deg.iter().enumerate() {
            if d < self.degree(x) {
                return Err(Error::InvalidParam(
                    "ambient degree below within-window degree",
                ));
            }
        }
        self.ambient = deg;
        Ok(())
    }

    pub fn set_labels(&mut self, labels: Vec<Vec<i64>>) -> Result<()> {
        if labels.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn labels(&self) -> Option<&[Vec<i64>]> {
        self.labels.as_deref()
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Exact shortest-path distances from `x` inside the subgraph induced by
/// `within`. Entry `v` is `None` when `v` is outside `within` or unreachable.
pub fn bfs_distances(g: &Graph, x: Vertex, within: &VertexSet) -> Result<Vec<Option<usize>>> {
    if !within.fits(g.n()) {
        return Err(Error::NotASubset { vertex: within.as_slice().last().copied().unwrap_or(0) });
    }
    if !within.contains(x) {
        return Err(Error::VertexOutsideSet { vertex: x });
    }
    let mut dist: Vec<Option<usize>> = vec![None; g.n()];
    dist[x] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(x);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.adj(u) {
            if dist[v].is_none() && within.contains(v) {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// Depth-limited variant: distances up to `cap`; vertices farther than `cap`
/// stay `None`. Used by the partition module's greedy scan.
pub(crate) fn bfs_distances_capped(
    g: &Graph,
    x: Vertex,
    within: &VertexSet,
    cap: usize,
) -> Result<Vec<Option<usize>>> {
    if !within.contains(x) {
        return Err(Error::VertexOutsideSet { vertex: x });
    }
    let mut dist: Vec<Option<usize>> = vec![None; g.n()];
    dist[x] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(x);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        if du == cap {
            continue;
        }
        for &v in g.adj(u) {
            if dist[v].is_none() && within.contains(v) {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// The metric ball {y ∈ within : d_within(x, y) ≤ r}.
pub fn ball(g: &Graph, x: Vertex, r: usize, within: &VertexSet) -> Result<VertexSet> {
    let dist = bfs_distances_capped(g, x, within, r)?;
    Ok(VertexSet::new(
        (0..g.n()).filter(|&v| matches!(dist[v], Some(d) if d <= r)).collect(),
    ))
}

/// Subgraph induced on `vs`, plus the mapping new index → old vertex.
/// Ambient degrees and labels are carried over from the host graph.
pub fn induced_subgraph(g: &Graph, vs: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
    if !vs.fits(g.n()) {
        return Err(Error::NotASubset { vertex: vs.as_slice().last().copied().unwrap_or(0) });
    }
    let map: Vec<Vertex> = vs.as_slice().to_vec();
    let mut edges = Vec::new();
    for (new_u, &u) in map.iter().enumerate() {
        for &v in g.adj(u) {
            if v > u {
                if let Some(new_v) = vs.position(v) {
                    edges.push((new_u, new_v));
                }
            }
        }
    }
    let mut sub = Graph::from_edges(map.len(), &edges)?;
    sub.set_ambient_degrees(map.iter().map(|&u| g.ambient_degree(u)).collect())?;
    if let Some(labels) = g.labels() {
        sub.set_labels(map.iter().map(|&u| labels[u].clone()).collect())?;
    }
    Ok((sub, map))
}

/// Maximal connected pieces of `within`, ordered by smallest contained index.
pub fn connected_components(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in within.iter() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &v in g.adj(u) {
                if !seen[v] && within.contains(v) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        out.push(VertexSet::new(comp));
    }
    out
}

/// True when `within` is nonempty and induces a connected subgraph.
pub fn is_connected(g: &Graph, within: &VertexSet) -> bool {
    !within.is_empty() && connected_components(g, within).len() == 1
}

/// Exact diameter of the subgraph induced by `within`.
pub fn diameter(g: &Graph, within: &VertexSet) -> Result<usize> {
    if within.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut best = 0;
    for x in within.iter() {
        let dist = bfs_distances(g, x, within)?;
        for y in within.iter() {
            match dist[y] {
                Some(d) => best = best.max(d),
                None => return Err(Error::Disconnected),
            }
        }
    }
    Ok(best)
}

/// Result of scanning a graph against its claimed growth bound.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    /// max over centers x and radii r ≥ 1 of |B_r(x)| / (b_d·rᵈ).
    pub max_ratio: f64,
    pub worst_center: Vertex,
    pub worst_radius: usize,
    /// True iff `max_ratio ≤ 1`.
    pub passes: bool,
}

/// Exhaustively checks |B_r(x)| ≤ b_d·rᵈ over every center and every radius
/// up to the center's eccentricity.
pub fn check_growth(g: &Graph, params: &GrowthParams) -> GrowthReport {
    let all = VertexSet::full(g.n());
    let mut report = GrowthReport { max_ratio: 0.0, worst_center: 0, worst_radius: 0, passes: true };
    for x in 0..g.n() {
        let dist = bfs_distances(g, x, &all).expect("full set always contains x");
        let ecc = dist.iter().flatten().copied().max().unwrap_or(0);
        if ecc == 0 {
            continue;
        }
        // One pass: count of vertices at each distance, then prefix sums.
        let mut at = vec![0usize; ecc + 1];
        for d in dist.iter().flatten() {
            at[*d] += 1;
        }
        let mut ball_size = at[0];
        for r in 1..=ecc {
            ball_size += at[r];
            let allowed = params.b_d * crate::math::powf(r as f64, params.d as f64);
            let ratio = ball_size as f64 / allowed;
            if ratio > report.max_ratio {
                report.max_ratio = ratio;
                report.worst_center = x;
                report.worst_radius = r;
            }
        }
    }
    report.passes = report.max_ratio <= 1.0;
    report
}
