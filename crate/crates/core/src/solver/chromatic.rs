use std::time::Instant;

use super::{Meter, SearchBudget, SolveResult, Status};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex};

/// True if `colors` assigns every vertex a colour and no edge is monochromatic.
pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for v in 0..g.vertex_count() {
        let mut nbrs = g.neighbors(v).to_vec();
        nbrs.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
        let mut clique = vec![v];
        for u in nbrs {
            if clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Vertex with most distinct neighbour colours, then highest degree, then
/// lowest id.
fn most_saturated(g: &Graph, colors: &[Option<usize>]) -> Option<Vertex> {
    let mut best: Option<(usize, usize, Vertex)> = None;
    for v in (0..g.vertex_count()).filter(|&v| colors[v].is_none()) {
        let mut seen: Vec<usize> = g.neighbors(v).iter().filter_map(|&u| colors[u]).collect();
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), g.degree(v), v);
        if best.is_none_or(|(s, d, _)| (key.0, key.1) > (s, d)) {
            best = Some(key);
        }
    }
    best.map(|(_, _, v)| v)
}

fn dsatur(g: &Graph) -> Vec<usize> {
    let mut colors = vec![None; g.vertex_count()];
    while let Some(v) = most_saturated(g, &colors) {
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != Some(c)))
            .unwrap();
        colors[v] = Some(c);
    }
    colors.into_iter().map(Option::unwrap).collect()
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Option<usize>>,
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    out_of_budget: bool,
}

impl Backtrack<'_> {
    fn run(&mut self, used: usize) -> bool {
        let Some(v) = most_saturated(self.g, &self.colors) else {
            return true;
        };
        // a fresh colour is only ever tried as the next unused one
        for c in 0..self.k.min(used + 1) {
            if self
                .g
                .neighbors(v)
                .iter()
                .any(|&u| self.colors[u] == Some(c))
            {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit
                || (self.nodes.is_multiple_of(1024)
                    && self.deadline.is_some_and(|d| Instant::now() >= d))
            {
                self.out_of_budget = true;
                return false;
            }
            self.colors[v] = Some(c);
            if self.run(used.max(c + 1)) {
                return true;
            }
            self.colors[v] = None;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// `χ(G)` by backtracking between a greedy clique bound and DSATUR. The
/// witness is a colouring with `value` colours.
pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<SolveResult<Vec<usize>>> {
    budget.validate()?;
    if g.vertex_count() == 0 {
        return Err(invalid("the graph has no vertices"));
    }
    let meter = Meter::new(budget);
    let lb = greedy_clique(g);
    let upper_coloring = dsatur(g);
    let ub = upper_coloring.iter().max().unwrap() + 1;
    let mut nodes = 0;
    for k in lb..ub {
        let mut bt = Backtrack {
            g,
            k,
            colors: vec![None; g.vertex_count()],
            nodes: 0,
            limit: meter.limit.saturating_sub(nodes),
            deadline: meter.deadline,
            out_of_budget: false,
        };
        let ok = bt.run(0);
        nodes += bt.nodes.min(bt.limit);
        if ok {
            let coloring: Vec<usize> = bt.colors.into_iter().map(Option::unwrap).collect();
            assert!(is_proper_coloring(g, &coloring));
            return Ok(SolveResult {
                value: k,
                witness: Some(coloring),
                status: Status::Exact,
                nodes_explored: nodes,
                lower: k,
                upper: k,
            });
        }
        if bt.out_of_budget {
            return Ok(SolveResult {
                value: ub,
                witness: Some(upper_coloring),
                status: Status::Timeout,
                nodes_explored: nodes,
                lower: k,
                upper: ub,
            });
        }
    }
    assert!(is_proper_coloring(g, &upper_coloring));
    Ok(SolveResult {
        value: ub,
        witness: Some(upper_coloring),
        status: Status::Exact,
        nodes_explored: nodes,
        lower: ub,
        upper: ub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complete_graph, cycle_graph, petersen_graph};

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, &SearchBudget::unlimited()).unwrap();
        assert_eq!(r.status, Status::Exact);
        assert!(is_proper_coloring(g, r.witness.as_ref().unwrap()));
        assert_eq!(r.witness.unwrap().iter().max().unwrap() + 1, r.value);
        r.value
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&cycle_graph(5).unwrap()), 3);
        assert_eq!(chi(&cycle_graph(6).unwrap()), 2);
        assert_eq!(chi(&complete_graph(5).unwrap()), 5);
        assert_eq!(chi(&petersen_graph()), 3);
        let k3 = complete_graph(3).unwrap();
        assert_eq!(chi(&cartesian_product(&k3, &k3).unwrap()), 3);
        assert_eq!(chi(&Graph::from_edges(4, []).unwrap()), 1);
    }

    #[test]
    fn grotzsch_needs_four() {
        // Mycielskian of C5: triangle-free, so the clique bound is 2
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let g = Graph::from_edges(11, edges).unwrap();
        assert_eq!(chi(&g), 4);
    }

    #[test]
    fn proper_coloring_check() {
        let g = cycle_graph(4).unwrap();
        assert!(is_proper_coloring(&g, &[0, 1, 0, 1]));
        assert!(!is_proper_coloring(&g, &[0, 0, 1, 1]));
        assert!(!is_proper_coloring(&g, &[0, 1, 0]));
    }
}
