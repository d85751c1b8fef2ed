//! Line-oriented text formats for graphs, configurations, matrices,
//! partitions, and IDS curves.
//!
//! Every writer has a matching reader, and reading back a written file
//! reproduces the carried data exactly: integers are decimal, floating-point
//! values use the shortest digit string that round-trips through `f64`
//! (Rust's default `Display`), which the readers parse back bit for bit.
//!
//! - graph: header `n m`, then m edge lines `u v` (0-based, u < v,
//!   lexicographic), then an optional `deg` line followed by one line of n
//!   ambient degrees.
//! - configuration: header `p seed trial`, then the bit string in vertex
//!   order, `1` = open.
//! - matrix: coordinate triplets `i j value`, upper triangle only, sorted.
//!   Every diagonal entry is written, zero or not, so the dimension is the
//!   largest index plus one; off-diagonal zeros are omitted.
//! - partition: header `r m`, then one line per cell: `center size v ...`.
//! - curve: CSV with header `E,estimate,stderr,trials,model`. The CSV does
//!   not carry the seed or the window description; readers get 0 and "".
//!
//! Vertex labels (lattice coordinates, group words) belong to the
//! generators and are not part of any format: a graph read from a file
//! samples percolation by bare vertex index.

use std::fmt::Write as _;
use std::fs;

use lifshitz_core::graph::{Graph, VertexSet};
use lifshitz_core::ids::{IDSCurve, Model};
use lifshitz_core::operators::{OperatorKind, SymmetricOperator};
use lifshitz_core::partition::Partition;
use lifshitz_core::percolation::Configuration;

use crate::errors::{check, usage, CliError, CliResult};

pub fn read_file(path: &str) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
}

pub fn write_file(path: &str, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| check(format!("cannot write {path}: {e}")))
}

/// Nonblank lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn field<T: core::str::FromStr>(
    tokens: &mut core::str::SplitWhitespace<'_>,
    file: &str,
    ln: usize,
    what: &str,
) -> CliResult<T> {
    tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| usage(format!("{file} line {ln}: expected {what}")))
}

fn end_of_line(tokens: &mut core::str::SplitWhitespace<'_>, file: &str, ln: usize) -> CliResult<()> {
    match tokens.next() {
        None => Ok(()),
        Some(t) => Err(usage(format!("{file} line {ln}: unexpected token `{t}`"))),
    }
}

// === graph ===

pub fn graph_to_string(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    let _ = writeln!(s, "deg");
    let degs: Vec<String> = (0..g.n()).map(|x| g.ambient_degree(x).to_string()).collect();
    let _ = writeln!(s, "{}", degs.join(" "));
    s
}

pub fn graph_from_str(text: &str) -> CliResult<Graph> {
    const F: &str = "graph file";
    let mut it = lines(text);
    let (ln, header) = it.next().ok_or_else(|| usage(format!("{F} is empty")))?;
    let mut tok = header.split_whitespace();
    let n: usize = field(&mut tok, F, ln, "vertex count")?;
    let m: usize = field(&mut tok, F, ln, "edge count")?;
    end_of_line(&mut tok, F, ln)?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = it
            .next()
            .ok_or_else(|| usage(format!("{F} ends after {} of {m} edges", edges.len())))?;
        let mut tok = l.split_whitespace();
        let u: usize = field(&mut tok, F, ln, "edge endpoint")?;
        let v: usize = field(&mut tok, F, ln, "edge endpoint")?;
        end_of_line(&mut tok, F, ln)?;
        if u >= v {
            return Err(usage(format!("{F} line {ln}: edges must satisfy u < v")));
        }
        edges.push((u, v));
    }
    let mut g = Graph::from_edges(n, &edges).map_err(|e| usage(format!("{F}: {e}")))?;

    if let Some((ln, l)) = it.next() {
        if l != "deg" {
            return Err(usage(format!("{F} line {ln}: expected `deg` or end of file")));
        }
        let (ln, dl) = it
            .next()
            .ok_or_else(|| usage(format!("{F}: missing degree line after `deg`")))?;
        let mut tok = dl.split_whitespace();
        let mut degs = Vec::with_capacity(n);
        for _ in 0..n {
            degs.push(field(&mut tok, F, ln, "ambient degree")?);
        }
        end_of_line(&mut tok, F, ln)?;
        g.set_ambient_degrees(degs).map_err(|e| usage(format!("{F}: {e}")))?;
    }
    if let Some((ln, _)) = it.next() {
        return Err(usage(format!("{F} line {ln}: trailing content")));
    }
    Ok(g)
}

// === configuration ===

pub fn configuration_to_string(c: &Configuration) -> String {
    let bits: String = c.bits().iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
    format!("{} {} {}\n{bits}\n", c.p(), c.seed(), c.trial())
}

// Reader half of the round-trip contract; no subcommand consumes dumps yet.
#[allow(dead_code)]
pub fn configuration_from_str(text: &str) -> CliResult<Configuration> {
    const F: &str = "configuration file";
    let mut it = lines(text);
    let (ln, header) = it.next().ok_or_else(|| usage(format!("{F} is empty")))?;
    let mut tok = header.split_whitespace();
    let p: f64 = field(&mut tok, F, ln, "probability")?;
    let seed: u64 = field(&mut tok, F, ln, "seed")?;
    let trial: u64 = field(&mut tok, F, ln, "trial")?;
    end_of_line(&mut tok, F, ln)?;

    let (ln, bl) = it.next().ok_or_else(|| usage(format!("{F}: missing bit string")))?;
    let bits = bl
        .bytes()
        .map(|b| match b {
            b'0' => Ok(0u8),
            b'1' => Ok(1u8),
            _ => Err(usage(format!("{F} line {ln}: bit string must be 0s and 1s"))),
        })
        .collect::<CliResult<Vec<u8>>>()?;
    if let Some((ln, _)) = it.next() {
        return Err(usage(format!("{F} line {ln}: trailing content")));
    }
    Configuration::from_bits(bits, p, seed, trial).map_err(|e| usage(format!("{F}: {e}")))
}

// === matrix ===

pub fn matrix_to_string(op: &SymmetricOperator) -> String {
    let mut s = String::new();
    let mut off = op.offdiag().iter().peekable();
    for (i, &d) in op.diag().iter().enumerate() {
        let _ = writeln!(s, "{i} {i} {d}");
        while let Some(&&(r, c, v)) = off.peek() {
            if r as usize != i {
                break;
            }
            let _ = writeln!(s, "{r} {c} {v}");
            off.next();
        }
    }
    s
}

/// Reads a matrix back as a [`OperatorKind::Custom`] operator on the full
/// index range; the original support positions are not recoverable from the
/// triplets alone.
// Reader half of the round-trip contract; no subcommand consumes exports yet.
#[allow(dead_code)]
pub fn matrix_from_str(text: &str) -> CliResult<SymmetricOperator> {
    const F: &str = "matrix file";
    let mut diag_entries: Vec<(usize, f64)> = Vec::new();
    let mut off: Vec<(u32, u32, f64)> = Vec::new();
    let mut n = 0usize;
    for (ln, l) in lines(text) {
        let mut tok = l.split_whitespace();
        let i: usize = field(&mut tok, F, ln, "row index")?;
        let j: usize = field(&mut tok, F, ln, "column index")?;
        let v: f64 = field(&mut tok, F, ln, "value")?;
        end_of_line(&mut tok, F, ln)?;
        if j < i {
            return Err(usage(format!("{F} line {ln}: lower-triangle entry {i} {j}")));
        }
        n = n.max(j + 1);
        if i == j {
            diag_entries.push((i, v));
        } else if v != 0.0 {
            off.push((i as u32, j as u32, v));
        }
    }
    if n == 0 {
        return Err(usage(format!("{F} is empty")));
    }
    let mut diag = vec![0.0; n];
    for (i, v) in diag_entries {
        diag[i] = v;
    }
    off.sort_unstable_by_key(|&(i, j, _)| (i, j));
    SymmetricOperator::from_parts(VertexSet::full(n), diag, off, OperatorKind::Custom)
        .map_err(|e| usage(format!("{F}: {e}")))
}

// === partition ===

pub fn partition_to_string(p: &Partition) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", p.radius, p.cells.len());
    for (&c, cell) in p.centers.iter().zip(&p.cells) {
        let _ = write!(s, "{c} {}", cell.len());
        for v in cell.iter() {
            let _ = write!(s, " {v}");
        }
        let _ = writeln!(s);
    }
    s
}

pub fn partition_from_str(text: &str) -> CliResult<Partition> {
    const F: &str = "partition file";
    let mut it = lines(text);
    let (ln, header) = it.next().ok_or_else(|| usage(format!("{F} is empty")))?;
    let mut tok = header.split_whitespace();
    let radius: usize = field(&mut tok, F, ln, "radius")?;
    let m: usize = field(&mut tok, F, ln, "cell count")?;
    end_of_line(&mut tok, F, ln)?;

    let mut centers = Vec::with_capacity(m);
    let mut cells = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = it
            .next()
            .ok_or_else(|| usage(format!("{F} ends after {} of {m} cells", cells.len())))?;
        let mut tok = l.split_whitespace();
        let center: usize = field(&mut tok, F, ln, "center")?;
        let size: usize = field(&mut tok, F, ln, "cell size")?;
        let mut verts = Vec::with_capacity(size);
        for _ in 0..size {
            verts.push(field(&mut tok, F, ln, "cell vertex")?);
        }
        end_of_line(&mut tok, F, ln)?;
        let cell = VertexSet::from_sorted(verts)
            .map_err(|e| usage(format!("{F} line {ln}: {e}")))?;
        if !cell.contains(center) {
            return Err(usage(format!("{F} line {ln}: center {center} outside its cell")));
        }
        centers.push(center);
        cells.push(cell);
    }
    if let Some((ln, _)) = it.next() {
        return Err(usage(format!("{F} line {ln}: trailing content")));
    }
    let min_cell_size = cells.iter().map(VertexSet::len).min().unwrap_or(0);
    Ok(Partition { radius, centers, cells, min_cell_size })
}

// === curve ===

pub const CSV_HEADER: &str = "E,estimate,stderr,trials,model";

pub fn curve_to_csv(c: &IDSCurve) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for k in 0..c.energies.len() {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            c.energies[k],
            c.estimates[k],
            c.stderrs[k],
            c.trials,
            c.model.tag()
        );
    }
    s
}

pub fn curve_from_csv(text: &str) -> CliResult<IDSCurve> {
    const F: &str = "curve file";
    let bad = |ln: usize, what: &str| -> CliError { usage(format!("{F} line {ln}: {what}")) };
    let mut it = lines(text);
    let (ln, header) = it.next().ok_or_else(|| usage(format!("{F} is empty")))?;
    if header != CSV_HEADER {
        return Err(bad(ln, "expected header `E,estimate,stderr,trials,model`"));
    }
    let mut energies = Vec::new();
    let mut estimates = Vec::new();
    let mut stderrs = Vec::new();
    let mut trials: Option<u64> = None;
    let mut model: Option<Model> = None;
    for (ln, l) in it {
        let f: Vec<&str> = l.split(',').map(str::trim).collect();
        if f.len() != 5 {
            return Err(bad(ln, "expected 5 comma-separated fields"));
        }
        let e: f64 = f[0].parse().map_err(|_| bad(ln, "bad energy"))?;
        let est: f64 = f[1].parse().map_err(|_| bad(ln, "bad estimate"))?;
        let se: f64 = f[2].parse().map_err(|_| bad(ln, "bad stderr"))?;
        let t: u64 = f[3].parse().map_err(|_| bad(ln, "bad trial count"))?;
        let m = Model::parse(f[4]).map_err(|_| bad(ln, "bad model tag"))?;
        if *trials.get_or_insert(t) != t {
            return Err(bad(ln, "trial count differs between rows"));
        }
        if *model.get_or_insert(m) != m {
            return Err(bad(ln, "model differs between rows"));
        }
        energies.push(e);
        estimates.push(est);
        stderrs.push(se);
    }
    let (Some(trials), Some(model)) = (trials, model) else {
        return Err(usage(format!("{F} has no data rows")));
    };
    Ok(IDSCurve {
        model,
        energies,
        estimates,
        stderrs,
        trials,
        seed: 0,
        window: String::new(),
    })
}
