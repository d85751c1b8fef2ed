//! Voronoï-type decomposition of a finite vertex set into connected cells
//! sandwiched between balls.
//!
//! Given a window F and a radius r, a maximal r-separated set of centers
//! x₁, …, x_m is picked greedily, and every vertex of F is assigned to the
//! first center in list order among those at minimal F-distance. The
//! resulting cells V_k satisfy
//!
//!   B^F_{⌊r/2⌋}(x_k) ⊆ V_k ⊆ B^F_r(x_k),   ⋃ V_k = F,
//!
//! each cell is star-shaped around its center (some F-geodesic from x_k to
//! any cell vertex stays inside the cell), and the centers are pairwise more
//! than r apart. [`decompose`] re-verifies every one of these invariants
//! exhaustively before returning and reports the first violation as a
//! certificate; all checks are integer-exact.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{
    bfs_distances, bfs_distances_capped, connected_components, Graph, Vertex, VertexSet,
};
use crate::{Error, Result};

/// Ordered centers with their cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Partition {
    pub radius: usize,
    pub centers: Vec<Vertex>,
    pub cells: Vec<VertexSet>,
    pub min_cell_size: usize,
}

/// First invariant violation found by [`verify`], as a certificate naming
/// the offending vertex or center pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A window vertex belongs to no cell.
    NotCovered { vertex: Vertex },
    /// A window vertex belongs to more than one cell.
    NotDisjoint { vertex: Vertex },
    /// A cell contains a vertex outside the window.
    OutsideWindow { vertex: Vertex },
    /// The inner ball B_{⌊r/2⌋}(center) leaks out of its cell.
    InnerBallEscapes { center: Vertex, vertex: Vertex },
    /// A cell vertex lies outside B_r(center).
    CellOutsideBall { center: Vertex, vertex: Vertex },
    /// A cell does not induce a connected subgraph.
    CellDisconnected { center: Vertex },
    /// A cell vertex is farther from the center inside the cell than inside
    /// the window — no geodesic stays in the cell.
    NotStarShaped { center: Vertex, vertex: Vertex },
    /// Two centers are within distance r of each other.
    CentersNotSeparated { a: Vertex, b: Vertex, distance: usize },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::NotCovered { vertex } => write!(f, "vertex {vertex} is in no cell"),
            Violation::NotDisjoint { vertex } => {
                write!(f, "vertex {vertex} is in more than one cell")
            }
            Violation::OutsideWindow { vertex } => {
                write!(f, "cell vertex {vertex} lies outside the window")
            }
            Violation::InnerBallEscapes { center, vertex } => write!(
                f,
                "vertex {vertex} is within the inner ball of center {center} but not in its cell"
            ),
            Violation::CellOutsideBall { center, vertex } => {
                write!(f, "cell vertex {vertex} is outside the radius ball of center {center}")
            }
            Violation::CellDisconnected { center } => {
                write!(f, "cell of center {center} is disconnected")
            }
            Violation::NotStarShaped { center, vertex } => write!(
                f,
                "no geodesic from center {center} to vertex {vertex} stays inside the cell"
            ),
            Violation::CentersNotSeparated { a, b, distance } => {
                write!(f, "centers {a} and {b} are only distance {distance} apart")
            }
        }
    }
}

fn check_window(g: &Graph, f: &VertexSet) -> Result<()> {
    if !f.fits(g.n()) {
        return Err(Error::NotASubset {
            vertex: f.as_slice().last().copied().unwrap_or(0),
        });
    }
    Ok(())
}

/// Greedy maximal r-separated subset of `f`: scan vertices in ascending
/// index order, accept x whenever every already accepted center is at
/// F-distance > r. One depth-capped BFS per accepted center marks its
/// blocking ball.
pub fn maximal_separated_set(g: &Graph, f: &VertexSet, r: usize) -> Result<Vec<Vertex>> {
    check_window(g, f)?;
    let mut centers = Vec::new();
    let mut blocked = vec![false; g.n()];
    for x in f.iter() {
        if blocked[x] {
            continue;
        }
        centers.push(x);
        let dist = bfs_distances_capped(g, x, f, r)?;
        for (v, d) in dist.iter().enumerate() {
            if d.is_some() {
                blocked[v] = true;
            }
        }
    }
    Ok(centers)
}

/// Voronoï cells of `f` for the given ordered centers: each vertex joins the
/// first center in list order among those at minimal F-distance. Checks that
/// the centers are pairwise more than r apart first.
///
/// The assignment runs as one multi-source BFS with the sources enqueued in
/// list order. That implements the stated tie-break exactly: the queue stays
/// sorted by owner index within each distance layer, so the first owner to
/// touch a vertex is the smallest-index center at minimal distance.
pub fn voronoi_cells(
    g: &Graph,
    f: &VertexSet,
    centers: &[Vertex],
    r: usize,
) -> Result<Partition> {
    check_window(g, f)?;
    for &c in centers {
        if !f.contains(c) {
            return Err(Error::VertexOutsideSet { vertex: c });
        }
    }
    if centers.is_empty() {
        if f.is_empty() {
            return Ok(Partition { radius: r, centers: Vec::new(), cells: Vec::new(), min_cell_size: 0 });
        }
        return Err(Error::EmptySet);
    }
    for (i, &a) in centers.iter().enumerate() {
        let dist = bfs_distances_capped(g, a, f, r)?;
        for &b in &centers[i + 1..] {
            if let Some(d) = dist[b] {
                return Err(Error::CentersTooClose { a, b, distance: d });
            }
        }
    }

    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for (k, &c) in centers.iter().enumerate() {
        owner[c] = Some(k);
        queue.push_back(c);
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.adj(u) {
            if owner[v].is_none() && f.contains(v) {
                owner[v] = owner[u];
                queue.push_back(v);
            }
        }
    }

    let mut cells: Vec<Vec<Vertex>> = vec![Vec::new(); centers.len()];
    for x in f.iter() {
        match owner[x] {
            Some(k) => cells[k].push(x),
            None => {
                return Err(Error::PartitionInvariant(Violation::NotCovered { vertex: x }))
            }
        }
    }
    let min_cell_size = cells.iter().map(Vec::len).min().unwrap_or(0);
    let cells = cells
        .into_iter()
        .map(|v| VertexSet::from_sorted(v).expect("ascending scan of f"))
        .collect();
    Ok(Partition { radius: r, centers: centers.to_vec(), cells, min_cell_size })
}

/// Full decomposition of `f`: each connected component gets its own greedy
/// centers and cells, concatenated in component order. Every partition
/// invariant is re-verified exhaustively before returning.
pub fn decompose(g: &Graph, f: &VertexSet, r: usize) -> Result<Partition> {
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    check_window(g, f)?;
    let mut centers = Vec::new();
    let mut cells = Vec::new();
    for comp in connected_components(g, f) {
        let cs = maximal_separated_set(g, &comp, r)?;
        let part = voronoi_cells(g, &comp, &cs, r)?;
        centers.extend(part.centers);
        cells.extend(part.cells);
    }
    let min_cell_size = cells.iter().map(VertexSet::len).min().unwrap_or(0);
    let partition = Partition { radius: r, centers, cells, min_cell_size };
    verify(g, f, &partition)?;
    Ok(partition)
}

/// Exhaustive integer-exact check of every partition invariant: disjoint
/// cover of `f`, both ball inclusions, star-shapedness (hence connectivity)
/// of every cell, and pairwise center separation. Returns the first
/// violation as a certificate.
pub fn verify(g: &Graph, f: &VertexSet, p: &Partition) -> Result<()> {
    check_window(g, f)?;
    if p.centers.len() != p.cells.len() {
        return Err(Error::DimensionMismatch {
            expected: p.centers.len(),
            got: p.cells.len(),
        });
    }
    let viol = |v: Violation| Err(Error::PartitionInvariant(v));

    let mut membership = vec![0u32; g.n()];
    for cell in &p.cells {
        for x in cell.iter() {
            if !f.contains(x) {
                return viol(Violation::OutsideWindow { vertex: x });
            }
            membership[x] += 1;
        }
    }
    for x in f.iter() {
        match membership[x] {
            0 => return viol(Violation::NotCovered { vertex: x }),
            1 => {}
            _ => return viol(Violation::NotDisjoint { vertex: x }),
        }
    }

    let inner = p.radius / 2;
    for (k, &c) in p.centers.iter().enumerate() {
        let cell = &p.cells[k];
        let dist_f = bfs_distances(g, c, f)?;
        for x in f.iter() {
            if matches!(dist_f[x], Some(d) if d <= inner) && !cell.contains(x) {
                return viol(Violation::InnerBallEscapes { center: c, vertex: x });
            }
        }
        for x in cell.iter() {
            if !matches!(dist_f[x], Some(d) if d <= p.radius) {
                return viol(Violation::CellOutsideBall { center: c, vertex: x });
            }
        }
        for &b in &p.centers[k + 1..] {
            if let Some(d) = dist_f[b] {
                if d <= p.radius {
                    return viol(Violation::CentersNotSeparated { a: c, b, distance: d });
                }
            }
        }
        let dist_cell = bfs_distances(g, c, cell)?;
        for x in cell.iter() {
            match (dist_cell[x], dist_f[x]) {
                (Some(dc), Some(df)) if dc == df => {}
                (None, _) => return viol(Violation::CellDisconnected { center: c }),
                _ => return viol(Violation::NotStarShaped { center: c, vertex: x }),
            }
        }
    }
    Ok(())
}
