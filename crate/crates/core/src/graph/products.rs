use std::fmt;
use std::str::FromStr;

use super::{Graph, PairIndex, Vertex};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Lexicographic,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Lexicographic,
        ProductKind::Strong,
    ];

    fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Direct => "×",
            ProductKind::Lexicographic => "∘",
            ProductKind::Strong => "⊠",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Lexicographic => "lex",
            ProductKind::Strong => "strong",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            "strong" => Ok(ProductKind::Strong),
            other => Err(invalid(format!("unknown product kind `{other}`"))),
        }
    }
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(invalid(format!("{kind} product of an empty factor")));
    }
    let idx = PairIndex::new(g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    match kind {
        ProductKind::Cartesian => cartesian_edges(g, h, idx, &mut edges),
        ProductKind::Direct => direct_edges(g, h, idx, &mut edges),
        ProductKind::Strong => {
            cartesian_edges(g, h, idx, &mut edges);
            direct_edges(g, h, idx, &mut edges);
        }
        ProductKind::Lexicographic => {
            for &(g1, g2) in g.edges() {
                for h1 in 0..h.vertex_count() {
                    for h2 in 0..h.vertex_count() {
                        edges.push((idx.encode(g1, h1), idx.encode(g2, h2)));
                    }
                }
            }
            for x in 0..g.vertex_count() {
                for &(h1, h2) in h.edges() {
                    edges.push((idx.encode(x, h1), idx.encode(x, h2)));
                }
            }
        }
    }
    let name = format!("{}{}{}", display_name(g), kind.symbol(), display_name(h));
    Graph::from_raw(idx.len(), edges)
        .with_name(name)
        .with_labels(idx)
}

fn display_name(g: &Graph) -> String {
    if g.name().is_empty() {
        format!("G{}", g.vertex_count())
    } else if g.labels().is_some() {
        format!("({})", g.name())
    } else {
        g.name().to_string()
    }
}

fn cartesian_edges(g: &Graph, h: &Graph, idx: PairIndex, out: &mut Vec<(Vertex, Vertex)>) {
    for x in 0..g.vertex_count() {
        for &(h1, h2) in h.edges() {
            out.push((idx.encode(x, h1), idx.encode(x, h2)));
        }
    }
    for &(g1, g2) in g.edges() {
        for y in 0..h.vertex_count() {
            out.push((idx.encode(g1, y), idx.encode(g2, y)));
        }
    }
}

fn direct_edges(g: &Graph, h: &Graph, idx: PairIndex, out: &mut Vec<(Vertex, Vertex)>) {
    for &(g1, g2) in g.edges() {
        for &(h1, h2) in h.edges() {
            out.push((idx.encode(g1, h1), idx.encode(g2, h2)));
            out.push((idx.encode(g1, h2), idx.encode(g2, h1)));
        }
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(ProductKind::Cartesian, g, h)
}

pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(ProductKind::Direct, g, h)
}

pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(ProductKind::Lexicographic, g, h)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(ProductKind::Strong, g, h)
}
