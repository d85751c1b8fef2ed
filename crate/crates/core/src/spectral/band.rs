//! Symmetric band storage, reverse Cuthill–McKee ordering, and a banded
//! LDLᵀ factorization with adjacent 1×1 / 2×2 pivots.
//!
//! The factorization exists for two jobs: Sylvester inertia counts (the
//! number of negative pivots of A − E equals the number of eigenvalues
//! below E) and the shifted solves inside inverse iteration. Both only
//! need adjacent pivoting: a 2×2 pivot formed from rows (k, k+1) keeps the
//! band intact, whereas full Bunch–Kaufman partner search would not.
//!
//! Band bookkeeping: with matrix bandwidth b, Schur updates from either
//! pivot type stay inside band b, but the first-column multiplier of a 2×2
//! pivot lands on row k+1+b — one slot outside. Storage therefore carries
//! half-bandwidth b+1; the spill slots are never read by trailing updates,
//! only by the triangular solves.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::operators::SymmetricOperator;
use crate::{Error, Result};

/// Bunch–Kaufman pivot threshold (1 + √17)/8, the classical growth optimum.
const ALPHA_BK: f64 = 0.6403882032022076;

/// Lower-triangle band storage: entry (i, j) with 0 ≤ i−j ≤ bw lives at
/// `data[i·(bw+1) + bw + j − i]`, so each row is contiguous and ends on the
/// diagonal.
pub(crate) struct BandMatrix {
    n: usize,
    bw: usize,
    data: Vec<f64>,
}

impl BandMatrix {
    fn zero(n: usize, bw: usize) -> Self {
        BandMatrix { n, bw, data: vec![0.0; n * (bw + 1)] }
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(j <= i && i - j <= self.bw);
        i * (self.bw + 1) + self.bw + j - i
    }
}

/// Adjacency lists of the off-diagonal structure of `op` (positions within
/// its support).
pub(crate) fn operator_adjacency(op: &SymmetricOperator) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); op.dim()];
    for &(i, j, _) in op.offdiag() {
        adj[i as usize].push(j as usize);
        adj[j as usize].push(i as usize);
    }
    adj
}

fn bfs_levels(adj: &[Vec<usize>], start: usize, level: &mut [usize], order: &mut Vec<usize>) {
    order.clear();
    order.push(start);
    level[start] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in &adj[u] {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                order.push(v);
            }
        }
    }
}

/// Reverse Cuthill–McKee ordering of the whole structure; returns the
/// sequence `order[new] = old`. Components are laid out one after another,
/// each started from a pseudo-peripheral vertex (George–Liu sweeps).
pub(crate) fn reverse_cuthill_mckee(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut placed = vec![false; n];
    let mut level = vec![usize::MAX; n];
    let mut component = Vec::new();
    let mut cm = Vec::with_capacity(n);

    for seed in 0..n {
        if placed[seed] {
            continue;
        }
        bfs_levels(adj, seed, &mut level, &mut component);
        // Pseudo-peripheral start: repeatedly jump to a minimum-degree
        // vertex of the deepest level until the eccentricity stops growing.
        let mut start = *component
            .iter()
            .min_by_key(|&&v| (adj[v].len(), v))
            .unwrap();
        let mut ecc = 0usize;
        loop {
            for &v in &component {
                level[v] = usize::MAX;
            }
            bfs_levels(adj, start, &mut level, &mut component);
            let depth = level[*component.last().unwrap()];
            if depth <= ecc {
                break;
            }
            ecc = depth;
            start = *component
                .iter()
                .filter(|&&v| level[v] == depth)
                .min_by_key(|&&v| (adj[v].len(), v))
                .unwrap();
        }
        // Cuthill–McKee from `start`, neighbors by increasing degree.
        let first = cm.len();
        cm.push(start);
        placed[start] = true;
        let mut head = first;
        let mut nbrs: Vec<usize> = Vec::new();
        while head < cm.len() {
            let u = cm[head];
            head += 1;
            nbrs.clear();
            nbrs.extend(adj[u].iter().copied().filter(|&v| !placed[v]));
            nbrs.sort_unstable_by_key(|&v| (adj[v].len(), v));
            for &v in &nbrs {
                placed[v] = true;
                cm.push(v);
            }
        }
        for &v in &component {
            level[v] = usize::MAX;
        }
    }
    cm.reverse();
    cm
}

/// Packs P(A − shift)Pᵀ into band storage, where `order[new] = old` and the
/// storage half-bandwidth is one wider than the permuted matrix bandwidth
/// (factorization spill, see module doc).
pub(crate) fn band_from_operator(
    op: &SymmetricOperator,
    order: &[usize],
    shift: f64,
) -> BandMatrix {
    let n = op.dim();
    debug_assert_eq!(order.len(), n);
    let mut inv = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    let mut b = 0usize;
    for &(i, j, _) in op.offdiag() {
        let (pi, pj) = (inv[i as usize], inv[j as usize]);
        b = b.max(pi.abs_diff(pj));
    }
    let bw = (b + 1).min(n.saturating_sub(1));
    let mut band = BandMatrix::zero(n, bw);
    for (old, &d) in op.diag().iter().enumerate() {
        let i = inv[old];
        let s = band.slot(i, i);
        band.data[s] = d - shift;
    }
    for &(i, j, v) in op.offdiag() {
        let (pi, pj) = (inv[i as usize], inv[j as usize]);
        let (hi, lo) = if pi > pj { (pi, pj) } else { (pj, pi) };
        let s = band.slot(hi, lo);
        band.data[s] = v;
    }
    band
}

/// Multiplier growth beyond which an inertia count is untrusted. Adjacent
/// 2×2 pivots cannot always pick the row that achieves the column maximum
/// (that would leave the band), so a near-singular block can slip through
/// the threshold test; the resulting growth is visible in the multipliers.
/// Backward error ~ growth·eps·‖A‖ must stay well below the 10⁻⁹·‖A‖
/// boundary margin of the counting convention.
const GROWTH_LIMIT: f64 = 1e6;

/// LDLᵀ factors held in the band storage they overwrote: unit-lower
/// multipliers below each pivot block, the block itself on the diagonal
/// (plus one subdiagonal slot for a 2×2 block).
pub(crate) struct Ldlt {
    band: BandMatrix,
    /// 1 = 1×1 pivot here, 2 = head of a 2×2 pivot, 0 = its tail.
    pivots: Vec<u8>,
    negatives: usize,
    /// Largest multiplier magnitude committed to the factors.
    growth: f64,
}

/// Factors the band matrix in place. Fails with `FactorizationBreakdown`
/// on an exactly zero pivot or a singular 2×2 block — the callers treat that
/// as "shift sits on an eigenvalue" and fall back or perturb.
pub(crate) fn factor_banded(mut m: BandMatrix) -> Result<Ldlt> {
    let n = m.n;
    let bw = m.bw;
    let rs = bw + 1;
    let mut pivots = vec![1u8; n];
    let mut negatives = 0usize;
    let mut growth = 0.0f64;
    let mut w1 = vec![0.0; bw + 1];
    let mut w2 = vec![0.0; bw + 1];

    let mut k = 0usize;
    while k < n {
        let reach = bw.min(n - 1 - k);
        // Column k below the diagonal; spill slots not yet written are 0.
        let mut lambda = 0.0f64;
        for t in 1..=reach {
            lambda = math::max(lambda, math::abs(m.data[(k + t) * rs + bw - t]));
        }
        let akk = m.data[k * rs + bw];
        let one_by_one = reach == 0 || math::abs(akk) >= ALPHA_BK * lambda;
        if one_by_one {
            if akk == 0.0 {
                return Err(Error::FactorizationBreakdown);
            }
            if akk < 0.0 {
                negatives += 1;
            }
            for t in 1..=reach {
                w1[t] = m.data[(k + t) * rs + bw - t];
            }
            for ti in 1..=reach {
                let i = k + ti;
                let li = w1[ti] / akk;
                growth = math::max(growth, math::abs(li));
                let base = i * rs + bw - ti;
                // A[i][k+1..=i] -= l_i · w[1..=ti]
                for tj in 1..=ti {
                    m.data[base + tj] -= li * w1[tj];
                }
                m.data[base] = li;
            }
            k += 1;
        } else {
            // Adjacent 2×2 pivot from rows (k, k+1).
            let b = m.data[(k + 1) * rs + bw - 1];
            let c = m.data[(k + 1) * rs + bw];
            let det = akk * c - b * b;
            if det == 0.0 || !det.is_finite() {
                return Err(Error::FactorizationBreakdown);
            }
            if det < 0.0 {
                negatives += 1;
            } else if akk + c < 0.0 {
                negatives += 2;
            }
            pivots[k] = 2;
            pivots[k + 1] = 0;
            // Rows k+2 ..= k+1+b carry multipliers; in widened storage that
            // is exactly t = 2..=reach+1 relative to k, capped by n.
            let hi = (k + bw).min(n - 1);
            for i in (k + 2)..=hi {
                let t = i - k;
                w1[t] = if t <= bw { m.data[i * rs + bw - t] } else { 0.0 };
                w2[t] = m.data[i * rs + bw - (t - 1)];
            }
            for i in (k + 2)..=hi {
                let t = i - k;
                let l1 = (w1[t] * c - w2[t] * b) / det;
                let l2 = (w2[t] * akk - w1[t] * b) / det;
                growth = math::max(growth, math::max(math::abs(l1), math::abs(l2)));
                let base = i * rs + bw - t;
                // A[i][k+2..=i] -= l1·w1 + l2·w2
                for j in (k + 2)..=i {
                    let tj = j - k;
                    m.data[base + tj] -= l1 * w1[tj] + l2 * w2[tj];
                }
                m.data[base] = l1;
                m.data[base + 1] = l2;
            }
            k += 2;
        }
    }
    Ok(Ldlt { band: m, pivots, negatives, growth })
}

impl Ldlt {
    /// Eigenvalues of the packed matrix below zero, by Sylvester inertia.
    pub(crate) fn negatives(&self) -> usize {
        self.negatives
    }

    /// Largest multiplier magnitude; a proxy for the backward error of the
    /// factorization. Counts are only trusted when this is modest; shifted
    /// solves for inverse iteration tolerate any growth.
    pub(crate) fn growth(&self) -> f64 {
        self.growth
    }

    /// Solves A x = rhs in place using the stored factors.
    pub(crate) fn solve_in_place(&self, x: &mut [f64]) -> Result<()> {
        let n = self.band.n;
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: x.len() });
        }
        let bw = self.band.bw;
        let rs = bw + 1;
        let data = &self.band.data;
        // Forward: L y = rhs (unit lower; never-written slots are 0). The
        // slot right below a 2×2 head holds the block's off-diagonal, not a
        // multiplier — skip it; a tail column's multipliers start normally.
        for col in 0..n {
            let start = if self.pivots[col] == 2 { col + 2 } else { col + 1 };
            let hi = (col + bw).min(n.saturating_sub(1));
            let xc = x[col];
            if xc != 0.0 {
                for i in start..=hi {
                    x[i] -= data[i * rs + bw + col - i] * xc;
                }
            }
        }
        // Diagonal: D z = y, blockwise.
        let mut k = 0;
        while k < n {
            match self.pivots[k] {
                1 => {
                    let d = data[k * rs + bw];
                    if d == 0.0 {
                        return Err(Error::FactorizationBreakdown);
                    }
                    x[k] /= d;
                    k += 1;
                }
                _ => {
                    let a = data[k * rs + bw];
                    let b = data[(k + 1) * rs + bw - 1];
                    let c = data[(k + 1) * rs + bw];
                    let det = a * c - b * b;
                    let (u, v) = (x[k], x[k + 1]);
                    x[k] = (c * u - b * v) / det;
                    x[k + 1] = (a * v - b * u) / det;
                    k += 2;
                }
            }
        }
        // Backward: Lᵀ x = z.
        for col in (0..n).rev() {
            let start = if self.pivots[col] == 2 { col + 2 } else { col + 1 };
            let hi = (col + bw).min(n.saturating_sub(1));
            let mut acc = x[col];
            for i in start..=hi {
                acc -= data[i * rs + bw + col - i] * x[i];
            }
            x[col] = acc;
        }
        Ok(())
    }
}

/// Number of eigenvalues of `op` strictly below `shift`, by banded inertia
/// under an RCM ordering. Excessive multiplier growth is reported as a
/// breakdown: the count would be at the mercy of Schur-complement rounding.
pub(crate) fn inertia_below(op: &SymmetricOperator, shift: f64) -> Result<usize> {
    let order = reverse_cuthill_mckee(&operator_adjacency(op));
    let band = band_from_operator(op, &order, shift);
    let f = factor_banded(band)?;
    if f.growth() > GROWTH_LIMIT {
        return Err(Error::FactorizationBreakdown);
    }
    Ok(f.negatives())
}
