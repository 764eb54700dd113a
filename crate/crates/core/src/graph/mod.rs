//! Immutable simple graphs, the standard families, the four graph products
//! and a handful of structural queries.
//!
//! Vertices are dense ids `0..n`. Edges are stored canonically as `(min, max)`
//! in sorted order; every edge also has a dense edge id (its position in that
//! order) which the solver uses to index its occupancy bit-vector.

mod families;
mod format;
mod products;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{invalid, Result};

pub use families::{complete_graph, cycle_graph, path_graph, petersen_graph};
pub use format::{parse_graph, write_graph};
pub use products::{
    cartesian_product, direct_product, lexicographic_product, product, strong_product, ProductKind,
};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Row-major naming of product vertices: `(g, h)` is vertex `g * right_order + h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairIndex {
    pub left_order: usize,
    pub right_order: usize,
}

impl PairIndex {
    pub fn new(left_order: usize, right_order: usize) -> Self {
        PairIndex {
            left_order,
            right_order,
        }
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> Vertex {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    #[inline]
    pub fn decode(&self, v: Vertex) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }

    pub fn len(&self) -> usize {
        self.left_order * self.right_order
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
    // parallel to `neighbors`: the id of the edge to each neighbour
    incident: Vec<Vec<EdgeId>>,
    edge_index: HashMap<(Vertex, Vertex), EdgeId>,
    labels: Option<PairIndex>,
    name: String,
}

/// Two graphs are equal when they have the same vertex count, edge set and
/// product labelling. The display name is not compared.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.labels == other.labels
    }
}

impl Eq for Graph {}

#[inline]
fn canonical(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Self-loops, out-of-range
    /// endpoints and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(invalid(format!("edge {{{u},{v}}} has an endpoint >= {n}")));
            }
            list.push(canonical(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("parallel edge {{{},{}}}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be canonical, sorted and free of duplicates.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
        let mut neighbors: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            neighbors[u].push((v, id));
            neighbors[v].push((u, id));
            edge_index.insert((u, v), id);
        }
        let mut adj = Vec::with_capacity(n);
        let mut incident = Vec::with_capacity(n);
        for mut list in neighbors {
            list.sort_unstable();
            adj.push(list.iter().map(|&(w, _)| w).collect());
            incident.push(list.iter().map(|&(_, id)| id).collect());
        }
        Graph {
            n,
            edges,
            neighbors: adj,
            incident,
            edge_index,
            labels: None,
            name: String::new(),
        }
    }

    /// Deduplicates and sorts an edge list known to be loop-free and in range.
    pub(crate) fn from_raw(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Graph {
        for e in edges.iter_mut() {
            *e = canonical(e.0, e.1);
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(n, edges)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: PairIndex) -> Result<Self> {
        if labels.len() != self.n {
            return Err(invalid(format!(
                "pair labelling covers {} vertices but the graph has {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edges in sorted order; position = edge id.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<PairIndex> {
        self.labels
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// `(neighbour, edge id)` pairs of `v`, neighbours ascending.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, EdgeId)> + '_ {
        self.neighbors[v]
            .iter()
            .copied()
            .zip(self.incident[v].iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edge_index.get(&canonical(u, v)).copied()
    }

    /// Label `(g, h)` of a product vertex, if this graph carries pair labels.
    pub fn label(&self, v: Vertex) -> Option<(usize, usize)> {
        self.labels.map(|p| p.decode(v))
    }

    /// Returns a copy with the given edges removed.
    pub fn without_edges(&self, remove: &[(Vertex, Vertex)]) -> Graph {
        let drop: Vec<_> = remove.iter().map(|&(u, v)| canonical(u, v)).collect();
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| !drop.contains(e))
            .collect();
        let mut g = Self::from_sorted(self.n, kept);
        g.labels = self.labels;
        g.name = self.name.clone();
        g
    }

    /// Returns a copy with one more edge. Fails on loops, out-of-range ids or
    /// an edge that is already present.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        let mut g = Graph::from_edges(self.n, edges)?;
        g.labels = self.labels;
        g.name = self.name.clone();
        Ok(g)
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_cycle().is_none()
    }

    /// A proper 2-colouring, or `None` when the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        self.bfs_two_color().ok()
    }

    /// One odd cycle as a closed vertex sequence `c0, c1, ..., c_{2l}` (the
    /// edge back to `c0` is implied), or `None` if the graph is bipartite.
    ///
    /// BFS from the lowest uncoloured vertex; the first monochromatic edge
    /// closes the cycle through the two BFS branches. On `C_n` (n odd) this
    /// yields `0, 1, ..., n-1`.
    pub fn odd_cycle(&self) -> Option<Vec<Vertex>> {
        self.bfs_two_color().err()
    }

    fn bfs_two_color(&self) -> std::result::Result<Vec<u8>, Vec<Vertex>> {
        const NONE: usize = usize::MAX;
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![NONE; self.n];
        let mut depth = vec![0usize; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &y in &self.neighbors[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        // climb to the lowest common ancestor
                        let (mut a, mut b) = (x, y);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while depth[a] > depth[b] {
                            a = parent[a];
                            left.push(a);
                        }
                        while depth[b] > depth[a] {
                            b = parent[b];
                            right.push(b);
                        }
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            left.push(a);
                            right.push(b);
                        }
                        right.pop();
                        left.reverse();
                        // left: lca .. x, right: y .. (child of lca)
                        let mut cycle = left;
                        cycle.extend(right);
                        return Err(cycle);
                    }
                }
            }
        }
        Ok(color)
    }

    /// A vertex of degree at least two together with two of its neighbours
    /// (the centre and ends of a `P_3` subgraph). Picks the lowest such vertex
    /// and its two lowest neighbours.
    pub fn find_p3_center(&self) -> Option<(Vertex, Vertex, Vertex)> {
        (0..self.n).find(|&v| self.degree(v) >= 2).map(|v| {
            let nb = &self.neighbors[v];
            (v, nb[0], nb[1])
        })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.name.is_empty() {
            "graph"
        } else {
            &self.name
        };
        write!(f, "{name} (n={}, m={})", self.n, self.edges.len())
    }
}
