use super::Graph;
use crate::error::{invalid, Result};

pub fn complete_graph(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    let edges = (0..t)
        .flat_map(|u| (u + 1..t).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted(t, edges).with_name(format!("K{t}")))
}

/// `C_n` with edges `i -- i+1` and `n-1 -- 0`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_raw(n, edges).with_name(format!("C{n}")))
}

/// `P_n` on `n` vertices: `0 -- 1 -- ... -- n-1`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_sorted(n, edges).with_name(format!("P{n}")))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen_graph() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_raw(10, edges).with_name("Petersen")
}
