//! Exhaustive enumeration of connected induced vertex sets.
//!
//! Classic rooted enumeration: each connected set is produced exactly once,
//! rooted at its minimum vertex. From a root, the extension list holds the
//! neighbors of the current set that are larger than the root and not yet
//! seen on this branch; choosing a candidate removes it from the lists of
//! its later siblings, so the sets containing it are exactly the ones below
//! its branch. The recursion tree therefore bijects with the connected sets,
//! and every node is emitted.

use lifshitz_core::graph::{Graph, Vertex};

/// All connected induced vertex sets with 1..=max_size vertices, each as a
/// sorted list, each exactly once. Order of the result is unspecified.
pub fn connected_subsets(g: &Graph, max_size: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if max_size == 0 {
        return out;
    }
    let mut visited = vec![false; g.n()];
    for root in 0..g.n() {
        visited[root] = true;
        let ext: Vec<Vertex> = g.adj(root).iter().copied().filter(|&u| u > root).collect();
        for &u in &ext {
            visited[u] = true;
        }
        let mut sub = vec![root];
        extend(g, root, &mut sub, ext.clone(), &mut visited, max_size, &mut out);
        for &u in &ext {
            visited[u] = false;
        }
        visited[root] = false;
    }
    for s in &mut out {
        s.sort_unstable();
    }
    out
}

fn extend(
    g: &Graph,
    root: Vertex,
    sub: &mut Vec<Vertex>,
    mut ext: Vec<Vertex>,
    visited: &mut [bool],
    max_size: usize,
    out: &mut Vec<Vec<Vertex>>,
) {
    out.push(sub.clone());
    if sub.len() == max_size {
        return;
    }
    while let Some(w) = ext.pop() {
        // w stays marked for its siblings: sets through w live below this
        // branch only.
        let mut added = Vec::new();
        for &u in g.adj(w) {
            if u > root && !visited[u] {
                visited[u] = true;
                added.push(u);
            }
        }
        let mut child_ext = ext.clone();
        child_ext.extend(&added);
        sub.push(w);
        extend(g, root, sub, child_ext, visited, max_size, out);
        sub.pop();
        for &u in &added {
            visited[u] = false;
        }
    }
}
