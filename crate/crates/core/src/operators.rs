//! Assembly of every Hamiltonian in the pipeline as a finite symmetric matrix.
//!
//! All operators are supported on a `VertexSet` of some window graph and
//! stored sparsely: a diagonal plus strictly-upper off-diagonal entries.
//! Laplacian entries are small integers held exactly in f64, so the operator
//! identities (truncation, degree-deficit formulas, orderings) can be tested
//! with exact equality; floats enter only through potentials and penalties.
//!
//! Conventions. Δ_G is the graph Laplacian of the window itself
//! (diag = within-window degree). The Neumann Laplacian Δ^N_{V′} is the
//! Laplacian of the induced subgraph. The Dirichlet Laplacian Δ^D_{V′} is
//! Δ_G truncated to V′×V′ — here "ambient" always means the window graph g,
//! the ambient space of the subset V′ — which coincides with
//! Δ^N_{V′} + (D_G − D_{G′}). Δ^{DD}_{V′} doubles the degree deficit. The
//! Anderson Hamiltonian adds the potential 1−ω_x; the percolation
//! Hamiltonian adds the full Dirichlet penalty deg_G(x) − deg_{G_ω}(x)
//! instead, where deg_{G_ω}(x) counts the open within-window neighbors of an
//! open x and is 0 for closed x (a closed vertex is not a vertex of the open
//! subgraph). Degrees in every deficit are degrees in the window graph, so
//! relative to the infinite graph a window feels free boundary conditions at
//! its own edge: boundary vertices receive slightly smaller penalties than
//! the infinite-volume operator would assign. Stored per-vertex ambient
//! degrees (the degree in the infinite graph a generated window was cut
//! from) enter only through norm bounds, never through assembly.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::percolation::Configuration;
use crate::{Error, Result};

/// What an operator is, structurally. The tag drives per-kind invariants in
/// tests (row sums, norm bounds) and documentation; it does not change the
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// Δ_G: Laplacian of the window graph itself.
    GraphLaplacian,
    /// Δ^N_{V′}: Laplacian of the induced subgraph.
    Neumann,
    /// Δ^D_{V′}: the window Laplacian truncated to V′.
    Dirichlet,
    /// Δ^{DD}_{V′}: Neumann plus twice the degree deficit.
    DoubleDirichlet,
    /// h_ω on the whole window: Δ_G + (1−ω).
    Anderson,
    /// h^U_ω: Neumann on U plus the potential restricted to U.
    RestrictedAnderson,
    /// H^F_ω: Neumann on F plus Dirichlet penalties at closed sites.
    PercolationHamiltonian,
    /// Δ_G + n·1_{V∖V′}: the penalty approximation of Δ^D.
    Penalty,
    /// Built from explicit entries; no structural invariants implied.
    Custom,
}

/// Finite real symmetric matrix tagged with its support and kind.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricOperator {
    support: VertexSet,
    diag: Vec<f64>,
    /// Strictly upper entries (i, j, value), i < j, sorted lexicographically.
    off: Vec<(u32, u32, f64)>,
    kind: OperatorKind,
}

impl SymmetricOperator {
    /// Builds an operator from explicit parts. Validates that off-diagonal
    /// entries are strictly upper, sorted, in range, and nonzero.
    pub fn from_parts(
        support: VertexSet,
        diag: Vec<f64>,
        off: Vec<(u32, u32, f64)>,
        kind: OperatorKind,
    ) -> Result<SymmetricOperator> {
        let n = support.len();
        if diag.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: diag.len() });
        }
        for w in off.windows(2) {
            if (w[0].0, w[0].1) >= (w[1].0, w[1].1) {
                return Err(Error::InvalidParam("off-diagonal entries must be sorted"));
            }
        }
        for &(i, j, v) in &off {
            if i >= j || (j as usize) >= n {
                return Err(Error::InvalidParam("off-diagonal index out of range"));
            }
            if v == 0.0 {
                return Err(Error::InvalidParam("explicit zero off-diagonal entry"));
            }
        }
        Ok(SymmetricOperator { support, diag, off, kind })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    /// Strictly upper off-diagonal entries, sorted.
    pub fn offdiag(&self) -> &[(u32, u32, f64)] {
        &self.off
    }

    /// Matrix entry by (row, column) in support positions.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return self.diag[i];
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        match self.off.binary_search_by(|&(x, y, _)| (x as usize, y as usize).cmp(&(a, b))) {
            Ok(pos) => self.off[pos].2,
            Err(_) => 0.0,
        }
    }

    /// Dense row-major copy, for the dense eigensolver and tests.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.dim();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = self.diag[i];
        }
        for &(i, j, v) in &self.off {
            a[i as usize * n + j as usize] = v;
            a[j as usize * n + i as usize] = v;
        }
        a
    }

    /// y = A·x.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) -> Result<()> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        for (i, &d) in self.diag.iter().enumerate() {
            y[i] = d * x[i];
        }
        for &(i, j, v) in &self.off {
            y[i as usize] += v * x[j as usize];
            y[j as usize] += v * x[i as usize];
        }
        Ok(())
    }

    /// Gershgorin bound on the operator norm: max over rows of the absolute
    /// row sum. Cheap, deterministic, and an upper bound on every |λ|.
    pub fn norm_bound(&self) -> f64 {
        let n = self.dim();
        let mut row = vec![0.0f64; n];
        for i in 0..n {
            row[i] = crate::math::abs(self.diag[i]);
        }
        for &(i, j, v) in &self.off {
            row[i as usize] += crate::math::abs(v);
            row[j as usize] += crate::math::abs(v);
        }
        row.iter().fold(0.0, |m, &r| crate::math::max(m, r))
    }

    /// Entrywise difference a − b of two operators on the same support,
    /// tagged `Custom`. Used for ordering checks.
    pub fn difference(a: &SymmetricOperator, b: &SymmetricOperator) -> Result<SymmetricOperator> {
        if a.support != b.support {
            return Err(Error::DimensionMismatch { expected: a.dim(), got: b.dim() });
        }
        let diag = a.diag.iter().zip(&b.diag).map(|(x, y)| x - y).collect();
        let mut off = Vec::new();
        let (mut ia, mut ib) = (0, 0);
        while ia < a.off.len() || ib < b.off.len() {
            let ka = a.off.get(ia).map(|&(i, j, _)| (i, j));
            let kb = b.off.get(ib).map(|&(i, j, _)| (i, j));
            match (ka, kb) {
                (Some(x), Some(y)) if x == y => {
                    let v = a.off[ia].2 - b.off[ib].2;
                    if v != 0.0 {
                        off.push((x.0, x.1, v));
                    }
                    ia += 1;
                    ib += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    off.push((x.0, x.1, a.off[ia].2));
                    ia += 1;
                }
                (Some(_), Some(y)) => {
                    off.push((y.0, y.1, -b.off[ib].2));
                    ib += 1;
                }
                (Some(x), None) => {
                    off.push((x.0, x.1, a.off[ia].2));
                    ia += 1;
                }
                (None, Some(y)) => {
                    off.push((y.0, y.1, -b.off[ib].2));
                    ib += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SymmetricOperator::from_parts(a.support.clone(), diag, off, OperatorKind::Custom)
    }
}

fn check_subset(g: &Graph, vs: &VertexSet) -> Result<()> {
    if !vs.fits(g.n()) {
        return Err(Error::NotASubset {
            vertex: vs.as_slice().last().copied().unwrap_or(0),
        });
    }
    Ok(())
}

/// Off-diagonal −1 entries for the edges of `g` inside `vs`, in support
/// positions, plus the induced (within-subgraph) degree of each position.
fn induced_edges(g: &Graph, vs: &VertexSet) -> (Vec<(u32, u32, f64)>, Vec<usize>) {
    let mut off = Vec::new();
    let mut deg = vec![0usize; vs.len()];
    for (pi, u) in vs.iter().enumerate() {
        for &v in g.adj(u) {
            if let Some(pj) = vs.position(v) {
                deg[pi] += 1;
                if pi < pj {
                    off.push((pi as u32, pj as u32, -1.0));
                }
            }
        }
    }
    off.sort_unstable_by_key(|&(i, j, _)| (i, j));
    (off, deg)
}

/// Δ_G: diag = within-window degree, off-diagonal −1 on edges.
pub fn graph_laplacian(g: &Graph) -> SymmetricOperator {
    let vs = VertexSet::full(g.n());
    let (off, deg) = induced_edges(g, &vs);
    SymmetricOperator {
        support: vs,
        diag: deg.iter().map(|&d| d as f64).collect(),
        off,
        kind: OperatorKind::GraphLaplacian,
    }
}

/// Δ^N_{V′}: the Laplacian of the induced subgraph.
pub fn neumann_laplacian(g: &Graph, vs: &VertexSet) -> Result<SymmetricOperator> {
    check_subset(g, vs)?;
    let (off, deg) = induced_edges(g, vs);
    Ok(SymmetricOperator {
        support: vs.clone(),
        diag: deg.iter().map(|&d| d as f64).collect(),
        off,
        kind: OperatorKind::Neumann,
    })
}

/// Δ^D_{V′}: the window Laplacian truncated to V′×V′. Built directly by
/// truncation — take the window degree on the diagonal and keep the edges
/// with both ends in V′ — which is exact integer arithmetic. The
/// degree-deficit formula Δ^N + (D_G − D_{G′}) is the cross-check, not the
/// construction.
pub fn dirichlet_laplacian(g: &Graph, vs: &VertexSet) -> Result<SymmetricOperator> {
    check_subset(g, vs)?;
    let (off, _) = induced_edges(g, vs);
    Ok(SymmetricOperator {
        support: vs.clone(),
        diag: vs.iter().map(|u| g.degree(u) as f64).collect(),
        off,
        kind: OperatorKind::Dirichlet,
    })
}

/// Δ^{DD}_{V′} = Δ^N_{V′} + 2(D_G − D_{G′}): diag = 2·window − induced.
pub fn dd_laplacian(g: &Graph, vs: &VertexSet) -> Result<SymmetricOperator> {
    check_subset(g, vs)?;
    let (off, deg) = induced_edges(g, vs);
    Ok(SymmetricOperator {
        support: vs.clone(),
        diag: vs
            .iter()
            .zip(deg.iter())
            .map(|(u, &d)| (2 * g.degree(u) - d) as f64)
            .collect(),
        off,
        kind: OperatorKind::DoubleDirichlet,
    })
}

/// h^U_ω = Δ^N_U + W_ω·1_U with W_ω = multiplication by 1−ω_x.
pub fn restricted_anderson(
    g: &Graph,
    u_set: &VertexSet,
    cfg: &Configuration,
) -> Result<SymmetricOperator> {
    check_subset(g, u_set)?;
    if cfg.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: cfg.len() });
    }
    let (off, deg) = induced_edges(g, u_set);
    Ok(SymmetricOperator {
        support: u_set.clone(),
        diag: u_set
            .iter()
            .zip(deg.iter())
            .map(|(u, &d)| d as f64 + if cfg.is_open(u) { 0.0 } else { 1.0 })
            .collect(),
        off,
        kind: OperatorKind::RestrictedAnderson,
    })
}

/// h_ω = Δ_G + W_ω on the whole window.
pub fn anderson_window(g: &Graph, cfg: &Configuration) -> Result<SymmetricOperator> {
    let mut op = restricted_anderson(g, &VertexSet::full(g.n()), cfg)?;
    op.kind = OperatorKind::Anderson;
    Ok(op)
}

/// H^F_ω = Δ_F + (D_G − D_{G_ω})·1_F. The percolation-subgraph degree
/// deg_{G_ω}(x) counts the open within-window neighbors of x when x itself is
/// open, and is 0 when x is closed.
pub fn percolation_hamiltonian(
    g: &Graph,
    f_set: &VertexSet,
    cfg: &Configuration,
) -> Result<SymmetricOperator> {
    check_subset(g, f_set)?;
    if cfg.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: cfg.len() });
    }
    let (off, deg) = induced_edges(g, f_set);
    let diag = f_set
        .iter()
        .zip(deg.iter())
        .map(|(x, &d)| {
            let deg_omega = if cfg.is_open(x) {
                g.adj(x).iter().filter(|&&y| cfg.is_open(y)).count()
            } else {
                0
            };
            (d + g.degree(x) - deg_omega) as f64
        })
        .collect();
    Ok(SymmetricOperator {
        support: f_set.clone(),
        diag,
        off,
        kind: OperatorKind::PercolationHamiltonian,
    })
}

/// fᵀ·op·f.
pub fn quadratic_form(op: &SymmetricOperator, f: &[f64]) -> Result<f64> {
    if f.len() != op.dim() {
        return Err(Error::DimensionMismatch { expected: op.dim(), got: f.len() });
    }
    let mut q = 0.0;
    for (i, &d) in op.diag.iter().enumerate() {
        q += d * f[i] * f[i];
    }
    for &(i, j, v) in &op.off {
        q += 2.0 * v * f[i as usize] * f[j as usize];
    }
    Ok(q)
}

/// The penalty approximation of the Dirichlet Laplacian: Δ_G plus `n` on the
/// diagonal of V∖V′. As n → ∞ its lowest |V′| eigenvalues converge (at rate
/// 1/n) to those of Δ^D_{V′}.
pub fn penalty_operator(g: &Graph, vs: &VertexSet, n: f64) -> Result<SymmetricOperator> {
    check_subset(g, vs)?;
    if !(n >= 0.0) {
        return Err(Error::InvalidParam("penalty strength must be nonnegative"));
    }
    let full = VertexSet::full(g.n());
    let (off, deg) = induced_edges(g, &full);
    let diag = deg
        .iter()
        .enumerate()
        .map(|(x, &d)| d as f64 + if vs.contains(x) { 0.0 } else { n })
        .collect();
    Ok(SymmetricOperator { support: full, diag, off, kind: OperatorKind::Penalty })
}
