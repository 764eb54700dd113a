//! Plain-text graph format.
//!
//! ```text
//! p toi <n> <m>
//! e <u> <v>        m lines, 0-based, u < v, sorted
//! l <v> <g> <h>    optional, one per vertex of a product graph
//! c ...            comment, ignored
//! ```
//!
//! Writing is canonical (byte-stable). Reading accepts edges in any order and
//! orientation but rejects loops, duplicates and a wrong edge count.

use std::fmt::Write as _;

use super::{Graph, PairIndex};
use crate::error::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "p toi {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    if let Some(idx) = g.labels() {
        for v in 0..g.vertex_count() {
            let (a, b) = idx.decode(v);
            let _ = writeln!(out, "l {v} {a} {b}");
        }
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::GraphFormat {
        line,
        message: message.into(),
    }
}

fn field(parts: &[&str], i: usize, line: usize) -> Result<usize> {
    let raw = parts
        .get(i)
        .ok_or_else(|| err(line, format!("expected {} fields", i + 1)))?;
    raw.parse::<usize>()
        .map_err(|_| err(line, format!("`{raw}` is not a non-negative integer")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parts: Vec<&str> = trimmed.split_whitespace().collect();
        match parts[0] {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "duplicate `p` line"));
                }
                if parts.get(1) != Some(&"toi") {
                    return Err(err(line, "expected `p toi <n> <m>`"));
                }
                if parts.len() != 4 {
                    return Err(err(line, "expected `p toi <n> <m>`"));
                }
                header = Some((field(&parts, 2, line)?, field(&parts, 3, line)?));
            }
            "e" | "l" if header.is_none() => {
                return Err(err(line, "`p toi <n> <m>` must come first"));
            }
            "e" => {
                if parts.len() != 3 {
                    return Err(err(line, "expected `e <u> <v>`"));
                }
                let (n, _) = header.unwrap();
                let (u, v) = (field(&parts, 1, line)?, field(&parts, 2, line)?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {u}")));
                }
                if u >= n || v >= n {
                    return Err(err(line, format!("vertex id out of range (n = {n})")));
                }
                edges.push((u.min(v), u.max(v), line));
            }
            "l" => {
                if parts.len() != 4 {
                    return Err(err(line, "expected `l <v> <g> <h>`"));
                }
                labels.push((
                    field(&parts, 1, line)?,
                    field(&parts, 2, line)?,
                    field(&parts, 3, line)?,
                    line,
                ));
            }
            other => return Err(err(line, format!("unknown record type `{other}`"))),
        }
    }

    let (n, m) = header.ok_or_else(|| err(1, "missing `p toi <n> <m>` header"))?;
    if edges.len() != m {
        return Err(err(
            text.lines().count().max(1),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    edges.sort_unstable();
    if let Some(w) = edges
        .windows(2)
        .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
    {
        return Err(err(
            w[1].2,
            format!("parallel edge {{{},{}}}", w[1].0, w[1].1),
        ));
    }
    let graph = Graph::from_sorted(n, edges.into_iter().map(|(u, v, _)| (u, v)).collect());

    if labels.is_empty() {
        return Ok(graph);
    }
    let last = labels.last().map(|l| l.3).unwrap_or(1);
    if labels.len() != n {
        return Err(err(
            last,
            format!("{} label lines for {n} vertices", labels.len()),
        ));
    }
    let left = labels.iter().map(|l| l.1).max().unwrap() + 1;
    let right = labels.iter().map(|l| l.2).max().unwrap() + 1;
    if left * right != n {
        return Err(err(
            last,
            format!("labels span a {left}x{right} grid but n = {n}"),
        ));
    }
    let idx = PairIndex::new(left, right);
    let mut seen = vec![false; n];
    for &(v, a, b, line) in &labels {
        if v >= n {
            return Err(err(line, format!("label for vertex {v} out of range")));
        }
        if seen[v] {
            return Err(err(line, format!("duplicate label for vertex {v}")));
        }
        seen[v] = true;
        if idx.encode(a, b) != v {
            return Err(err(
                line,
                format!(
                    "label ({a},{b}) of vertex {v} is not row-major (expected {})",
                    idx.encode(a, b)
                ),
            ));
        }
    }
    graph.with_labels(idx)
}
