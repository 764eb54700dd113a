//! Exact `toi(G)`: the largest `t` with a totally odd strong immersion of `K_t`.
//!
//! The search runs `t` downward from a degree bound. For each `t` it tries
//! terminal sets in a fixed order, and for each set it assigns routes pair by
//! pair with a depth-first path enumeration. Two observations keep this
//! small:
//!
//! * an edge between two terminals can only be used by the route joining
//!   them (any other route would pass through a terminal), so adjacent
//!   terminals are always joined by their edge;
//! * every edge at a terminal serves a route ending there, so a terminal
//!   needs at least as many edges to non-terminals as it has non-adjacent
//!   partners.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::{Meter, SearchBudget, SolveResult, Status};
use crate::certificate::{verify, Certificate, Route};
use crate::error::{invalid, Result};
use crate::graph::{Graph, Vertex};

/// Terminal sets handed to the thread pool at a time.
const CHUNK: usize = 32;

/// The largest `t` such that at least `t` vertices have degree `t - 1` or
/// more, capped at 2 for bipartite graphs (a totally odd `K_3` closes an odd
/// cycle). 0 for the empty graph.
pub fn toi_upper_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let u = (1..=n)
        .take_while(|&t| degrees[t - 1] >= t - 1)
        .last()
        .unwrap_or(0);
    if g.is_bipartite() {
        u.min(2)
    } else {
        u
    }
}

/// Route length cap used when the budget does not set one: no cap for hosts
/// with at most 20 edges, 9 otherwise.
pub fn default_route_cap(g: &Graph) -> usize {
    let m = g.edge_count();
    if m <= 20 {
        m.max(1)
    } else {
        9
    }
}

fn effective_cap(g: &Graph, budget: &SearchBudget) -> (usize, bool) {
    let cap = budget
        .max_route_length
        .unwrap_or_else(|| default_route_cap(g));
    // a path is no longer than n - 1 or m edges
    let longest = g.edge_count().min(g.vertex_count().saturating_sub(1));
    (cap, cap < longest)
}

/// Certificates for `t <= 3` that need no search: a vertex, an edge, an odd
/// cycle split at three consecutive vertices.
fn baseline(g: &Graph, t: usize) -> Option<Certificate> {
    let mut conn = BTreeMap::new();
    let terminals = match t {
        1 => vec![0],
        2 => {
            let &(u, v) = g.edges().first()?;
            conn.insert((0, 1), Route::edge(u, v));
            vec![u, v]
        }
        3 => {
            let c = g.odd_cycle()?;
            conn.insert((0, 1), Route::edge(c[0], c[1]));
            conn.insert((1, 2), Route::edge(c[1], c[2]));
            let mut back: Vec<Vertex> = vec![c[0]];
            back.extend(c[2..].iter().rev());
            conn.insert((0, 2), Route::new(back));
            vec![c[0], c[1], c[2]]
        }
        _ => return None,
    };
    Some(Certificate::new(terminals, conn).expect("baseline pairs are valid"))
}

enum Outcome {
    Found(Certificate),
    Exhausted,
    OutOfBudget,
}

enum SubOutcome {
    Found(Vec<(usize, usize, Vec<Vertex>)>),
    Exhausted,
    OutOfBudget,
    Cancelled,
}

struct Dfs<'a> {
    g: &'a Graph,
    cap: usize,
    is_terminal: Vec<bool>,
    terminals: Vec<Vertex>,
    /// Pairs of non-adjacent terminals, lexicographic.
    pairs: Vec<(usize, usize)>,
    routes: Vec<Vec<Vertex>>,
    used: FixedBitSet,
    on_path: Vec<bool>,
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    found: &'a AtomicUsize,
    index: usize,
    stop: Option<SubOutcome>,
    parent: Vec<usize>,
}

impl Dfs<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.stop = Some(SubOutcome::OutOfBudget);
            return false;
        }
        if self.nodes.is_multiple_of(1024) {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.stop = Some(SubOutcome::OutOfBudget);
                return false;
            }
            if self.found.load(Ordering::Relaxed) < self.index {
                self.stop = Some(SubOutcome::Cancelled);
                return false;
            }
        }
        true
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Every remaining pair can still be joined through free edges and
    /// non-terminal vertices (ignoring parity and sharing).
    fn connectable(&mut self, from: usize) -> bool {
        if from >= self.pairs.len() {
            return true;
        }
        let n = self.g.vertex_count();
        for v in 0..n {
            self.parent[v] = v;
        }
        for (id, &(u, v)) in self.g.edges().iter().enumerate() {
            if !self.used[id] && !self.is_terminal[u] && !self.is_terminal[v] {
                let (a, b) = (self.find(u), self.find(v));
                if a != b {
                    self.parent[a] = b;
                }
            }
        }
        for p in from..self.pairs.len() {
            let (a, b) = self.pairs[p];
            let (x, y) = (self.terminals[a], self.terminals[b]);
            let mut near_x = Vec::new();
            for (z, id) in self.g.incident(x) {
                if !self.used[id] && !self.is_terminal[z] {
                    near_x.push(self.find(z));
                }
            }
            let mut ok = false;
            for (z, id) in self.g.incident(y) {
                if !self.used[id] && !self.is_terminal[z] && near_x.contains(&self.find(z)) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, p: usize) -> bool {
        if p == self.pairs.len() {
            return true;
        }
        let (a, b) = self.pairs[p];
        let (x, y) = (self.terminals[a], self.terminals[b]);
        let mut path = vec![x];
        self.extend(p, &mut path, y)
    }

    fn extend(&mut self, p: usize, path: &mut Vec<Vertex>, target: Vertex) -> bool {
        let g = self.g;
        let cur = *path.last().unwrap();
        let len = path.len() - 1;
        for (nb, id) in g.incident(cur) {
            if self.used[id] {
                continue;
            }
            if nb == target {
                if len % 2 == 1 || len + 1 > self.cap {
                    continue;
                }
                if !self.tick() {
                    return false;
                }
                self.used.insert(id);
                path.push(nb);
                // routes may share vertices, only this route's marks block
                for &z in &path[1..path.len() - 1] {
                    self.on_path[z] = false;
                }
                let done = self.connectable(p + 1) && self.solve(p + 1);
                for &z in &path[1..path.len() - 1] {
                    self.on_path[z] = true;
                }
                if done {
                    self.routes[p] = path.clone();
                    return true;
                }
                path.pop();
                self.used.set(id, false);
                if self.stop.is_some() {
                    return false;
                }
                continue;
            }
            if self.is_terminal[nb] || self.on_path[nb] || len + 2 > self.cap {
                continue;
            }
            if !self.tick() {
                return false;
            }
            self.used.insert(id);
            self.on_path[nb] = true;
            path.push(nb);
            if self.extend(p, path, target) {
                return true;
            }
            path.pop();
            self.on_path[nb] = false;
            self.used.set(id, false);
            if self.stop.is_some() {
                return false;
            }
        }
        false
    }
}

type Shared<'a> = (&'a AtomicUsize, u64, Option<Instant>);

fn run_subset(
    g: &Graph,
    mut terminals: Vec<Vertex>,
    cap: usize,
    shared: Shared<'_>,
    index: usize,
) -> (SubOutcome, u64) {
    let (found, limit, deadline) = shared;
    terminals.sort_unstable();
    let t = terminals.len();
    let n = g.vertex_count();
    let mut is_terminal = vec![false; n];
    for &x in &terminals {
        is_terminal[x] = true;
    }

    let mut used = FixedBitSet::with_capacity(g.edge_count());
    let mut direct = Vec::new();
    let mut pairs = Vec::new();
    let mut partners = vec![0usize; t];
    for a in 0..t {
        for b in a + 1..t {
            match g.edge_id(terminals[a], terminals[b]) {
                Some(id) => {
                    used.insert(id);
                    direct.push((a, b));
                }
                None => {
                    pairs.push((a, b));
                    partners[a] += 1;
                    partners[b] += 1;
                }
            }
        }
    }
    // cheap necessary conditions
    for (a, &x) in terminals.iter().enumerate() {
        let outward = g.neighbors(x).iter().filter(|&&z| !is_terminal[z]).count();
        if outward < partners[a] {
            return (SubOutcome::Exhausted, 0);
        }
    }
    if g.edge_count() - direct.len() < 3 * pairs.len() || (!pairs.is_empty() && cap < 3) {
        return (SubOutcome::Exhausted, 0);
    }

    let mut dfs = Dfs {
        g,
        cap,
        is_terminal,
        routes: vec![Vec::new(); pairs.len()],
        terminals: terminals.clone(),
        pairs,
        used,
        on_path: vec![false; n],
        nodes: 0,
        limit,
        deadline,
        found,
        index,
        stop: None,
        parent: vec![0; n],
    };
    let ok = dfs.connectable(0) && dfs.solve(0);
    let nodes = dfs.nodes;
    if ok {
        let mut routes: Vec<(usize, usize, Vec<Vertex>)> = direct
            .into_iter()
            .map(|(a, b)| (a, b, vec![terminals[a], terminals[b]]))
            .collect();
        for (k, &(a, b)) in dfs.pairs.iter().enumerate() {
            routes.push((a, b, std::mem::take(&mut dfs.routes[k])));
        }
        // terminals travel with the routes through index 0's sorted list
        routes.push((usize::MAX, 0, terminals));
        return (SubOutcome::Found(routes), nodes);
    }
    (dfs.stop.unwrap_or(SubOutcome::Exhausted), nodes)
}

/// Advances `combo` (strictly increasing indices below `len`) to the next
/// combination in lexicographic order; false when exhausted.
fn next_combination(combo: &mut [usize], len: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < len - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn search_t(g: &Graph, t: usize, cap: usize, meter: &Meter, nodes_total: &mut u64) -> Outcome {
    let mut candidates: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) + 1 >= t)
        .collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    if candidates.len() < t {
        return Outcome::Exhausted;
    }
    let mut combo: Vec<usize> = (0..t).collect();
    let mut more = true;
    while more {
        let mut chunk = Vec::with_capacity(CHUNK);
        while more && chunk.len() < CHUNK {
            chunk.push(combo.iter().map(|&i| candidates[i]).collect::<Vec<_>>());
            more = next_combination(&mut combo, candidates.len());
        }
        let remaining = meter.limit.saturating_sub(*nodes_total);
        if remaining == 0 || meter.expired() {
            return Outcome::OutOfBudget;
        }
        let found = AtomicUsize::new(usize::MAX);
        let results: Vec<(SubOutcome, u64)> = chunk
            .into_par_iter()
            .enumerate()
            .map(|(k, terms)| {
                if found.load(Ordering::Relaxed) < k {
                    return (SubOutcome::Cancelled, 0);
                }
                let r = run_subset(g, terms, cap, (&found, remaining, meter.deadline), k);
                if matches!(r.0, SubOutcome::Found(_)) {
                    found.fetch_min(k, Ordering::Relaxed);
                }
                r
            })
            .collect();
        for (outcome, nodes) in results {
            *nodes_total += nodes;
            if *nodes_total > meter.limit {
                return Outcome::OutOfBudget;
            }
            match outcome {
                SubOutcome::Found(mut routes) => {
                    let (_, _, terminals) = routes.pop().unwrap();
                    let conn = routes
                        .into_iter()
                        .map(|(a, b, vs)| ((a, b), Route::new(vs)))
                        .collect();
                    return Outcome::Found(Certificate::new(terminals, conn).unwrap());
                }
                SubOutcome::Exhausted => {}
                SubOutcome::OutOfBudget => return Outcome::OutOfBudget,
                SubOutcome::Cancelled => unreachable!("cancelled only after an earlier success"),
            }
        }
    }
    Outcome::Exhausted
}

fn assert_witness(g: &Graph, cert: &Certificate, t: usize) {
    let report = verify(g, cert).expect("witness ids are host vertices");
    assert!(
        report.all_passed() && cert.clique_size() == t,
        "solver produced an invalid witness: {report}"
    );
}

/// `toi(G)` by exhaustive search.
pub fn exact_toi(g: &Graph, budget: &SearchBudget) -> Result<SolveResult<Certificate>> {
    exact_toi_up_to(g, None, budget)
}

/// As [`exact_toi`], but never tries cliques larger than `max_t`. A result
/// below the degree bound is then only a lower bound.
pub fn exact_toi_up_to(
    g: &Graph,
    max_t: Option<usize>,
    budget: &SearchBudget,
) -> Result<SolveResult<Certificate>> {
    budget.validate()?;
    if g.vertex_count() == 0 {
        return Err(invalid("the graph has no vertices"));
    }
    if max_t == Some(0) {
        return Err(invalid("max t must be positive"));
    }
    let ub = toi_upper_bound(g);
    let top = max_t.map_or(ub, |m| m.min(ub));
    let (cap, capped) = effective_cap(g, budget);
    let meter = Meter::new(budget);

    let mut best_t = top.min(3);
    let mut best = baseline(g, best_t).expect("the degree bound admits the baseline");
    let mut nodes = 0u64;
    let mut timed_out_at = None;
    for t in (best_t + 1..=top).rev() {
        match search_t(g, t, cap, &meter, &mut nodes) {
            Outcome::Found(cert) => {
                best = cert;
                best_t = t;
                break;
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                timed_out_at = Some(t);
                break;
            }
        }
    }
    assert_witness(g, &best, best_t);

    let (status, upper) = if let Some(t) = timed_out_at {
        (Status::Timeout, if capped { ub } else { t })
    } else if best_t == ub {
        (Status::Exact, ub)
    } else if capped || top < ub {
        (
            Status::LowerBoundOnly,
            if capped { ub } else { ub.max(best_t) },
        )
    } else {
        (Status::Exact, best_t)
    };
    Ok(SolveResult {
        value: best_t,
        witness: Some(best),
        status,
        nodes_explored: nodes,
        lower: best_t,
        upper,
    })
}

/// Answer to "does `G` contain a totally odd strong immersion of `K_t`?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliqueSearch {
    Found(Certificate),
    /// Proved impossible.
    Absent,
    /// The budget ran out or a route-length cap made the search incomplete.
    Indeterminate,
}

pub fn has_toi_clique(g: &Graph, t: usize, budget: &SearchBudget) -> Result<CliqueSearch> {
    budget.validate()?;
    if t == 0 {
        return Err(invalid("t must be positive"));
    }
    if t > toi_upper_bound(g) {
        return Ok(CliqueSearch::Absent);
    }
    if let Some(cert) = baseline(g, t) {
        return Ok(CliqueSearch::Found(cert));
    }
    let (cap, capped) = effective_cap(g, budget);
    let meter = Meter::new(budget);
    let mut nodes = 0;
    Ok(match search_t(g, t, cap, &meter, &mut nodes) {
        Outcome::Found(cert) => {
            assert_witness(g, &cert, t);
            CliqueSearch::Found(cert)
        }
        Outcome::Exhausted if !capped => CliqueSearch::Absent,
        _ => CliqueSearch::Indeterminate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        cartesian_product, complete_graph, cycle_graph, path_graph, petersen_graph,
    };

    fn k(t: usize) -> Graph {
        complete_graph(t).unwrap()
    }

    fn solve(g: &Graph) -> SolveResult<Certificate> {
        exact_toi(g, &SearchBudget::unlimited()).unwrap()
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(toi_upper_bound(&k(5)), 5);
        assert_eq!(toi_upper_bound(&cycle_graph(5).unwrap()), 3);
        assert_eq!(toi_upper_bound(&cycle_graph(6).unwrap()), 2);
        assert_eq!(toi_upper_bound(&Graph::from_edges(3, []).unwrap()), 1);
        assert_eq!(toi_upper_bound(&petersen_graph()), 4);
    }

    #[test]
    fn small_exact_values() {
        for (g, want) in [
            (cycle_graph(5).unwrap(), 3),
            (k(4), 4),
            (k(1), 1),
            (path_graph(4).unwrap(), 2),
            (cartesian_product(&k(2), &k(2)).unwrap(), 2),
            (cartesian_product(&k(3), &k(2)).unwrap(), 3),
            // its K_5 needs two routes through the same non-terminal vertex
            (cartesian_product(&k(2), &k(4)).unwrap(), 5),
        ] {
            let r = solve(&g);
            assert_eq!((r.value, r.status), (want, Status::Exact), "{g}");
            assert_eq!((r.lower, r.upper), (want, want));
        }
    }

    #[test]
    fn k3_box_k3_is_four() {
        let g = cartesian_product(&k(3), &k(3)).unwrap();
        let r = solve(&g);
        assert_eq!((r.value, r.status), (4, Status::Exact));
        assert_eq!(
            has_toi_clique(&g, 5, &SearchBudget::unlimited()).unwrap(),
            CliqueSearch::Absent
        );
        assert!(matches!(
            has_toi_clique(&g, 4, &SearchBudget::unlimited()).unwrap(),
            CliqueSearch::Found(_)
        ));
    }

    #[test]
    fn k3_box_k2_has_no_k4() {
        let g = cartesian_product(&k(3), &k(2)).unwrap();
        assert_eq!(
            has_toi_clique(&g, 4, &SearchBudget::unlimited()).unwrap(),
            CliqueSearch::Absent
        );
        assert!(has_toi_clique(&g, 0, &SearchBudget::unlimited()).is_err());
    }

    #[test]
    fn results_do_not_depend_on_thread_count() {
        let hosts = [
            cartesian_product(&k(3), &k(3)).unwrap(),
            cartesian_product(&k(2), &k(4)).unwrap(),
            petersen_graph(),
        ];
        for budget in [
            SearchBudget::unlimited(),
            SearchBudget::unlimited().with_nodes(200),
        ] {
            for g in &hosts {
                let run = |threads| {
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build()
                        .unwrap()
                        .install(|| exact_toi(g, &budget).unwrap())
                };
                let one = run(1);
                assert_eq!(one, run(4));
                assert_eq!(one, run(7));
            }
        }
    }

    #[test]
    fn node_budget_gives_timeout_deterministically() {
        let g = cartesian_product(&k(3), &k(3)).unwrap();
        let budget = SearchBudget::unlimited().with_nodes(5);
        let a = exact_toi(&g, &budget).unwrap();
        assert_eq!(a.status, Status::Timeout);
        assert_eq!(a.value, 3);
        assert!(a.witness.is_some());
        let b = exact_toi(&g, &budget).unwrap();
        assert_eq!((a.nodes_explored, a.value), (b.nodes_explored, b.value));
    }

    #[test]
    fn route_cap_marks_lower_bound_only() {
        let g = petersen_graph();
        let r = exact_toi(&g, &SearchBudget::unlimited().with_max_route_length(3)).unwrap();
        assert!(r.value >= 3);
        if r.value < r.upper {
            assert_eq!(r.status, Status::LowerBoundOnly);
        }
        let r = exact_toi_up_to(&k(5), Some(3), &SearchBudget::unlimited()).unwrap();
        assert_eq!((r.value, r.status), (3, Status::LowerBoundOnly));
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
