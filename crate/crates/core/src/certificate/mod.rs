//! Immersion certificates for complete graphs.
//!
//! A certificate for `K_r` in a host graph lists `r` terminals and, for every
//! unordered terminal-index pair `{a, b}` with `a < b`, a [`Route`] in the host
//! joining `terminals[a]` to `terminals[b]`. Routes are stored oriented from
//! the lower index; the verifier also accepts the reverse orientation.

mod json;
mod verify;

use std::collections::BTreeMap;

use crate::error::{invalid, Error, Result};
use crate::graph::Vertex;

pub use json::{parse_certificate, serialize_certificate};
pub use verify::{verify, ClaimLevel, Flag, VerificationReport, Violation};

/// A walk in the host graph given by its vertex sequence. Whether it is a
/// trail, a path, odd, or even made of host edges is left to the verifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Route {
    vertices: Vec<Vertex>,
}

impl Route {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Route { vertices }
    }

    pub fn edge(u: Vertex, v: Vertex) -> Self {
        Route {
            vertices: vec![u, v],
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn first(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn interior(&self) -> &[Vertex] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn reversed(&self) -> Route {
        let mut v = self.vertices.clone();
        v.reverse();
        Route { vertices: v }
    }

    /// Consecutive vertex pairs, in walk order.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Applies a vertex relabelling.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Route {
        Route {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
        }
    }
}

impl From<Vec<Vertex>> for Route {
    fn from(vertices: Vec<Vertex>) -> Self {
        Route::new(vertices)
    }
}

/// Joins routes end to start. The edge count of the result is the sum of
/// the parts' edge counts.
pub fn concatenate_routes(routes: &[Route]) -> Result<Route> {
    let first = routes
        .first()
        .ok_or_else(|| invalid("cannot concatenate an empty list of routes"))?;
    if first.vertices.is_empty() {
        return Err(invalid("route 0 has no vertices"));
    }
    let mut out = first.vertices.clone();
    for (i, r) in routes.iter().enumerate().skip(1) {
        match r.first() {
            Some(start) if start == *out.last().unwrap() => out.extend_from_slice(&r.vertices[1..]),
            Some(start) => {
                return Err(invalid(format!(
                    "route {i} starts at {start} but route {} ends at {}",
                    i - 1,
                    out.last().unwrap()
                )))
            }
            None => return Err(invalid(format!("route {i} has no vertices"))),
        }
    }
    Ok(Route::new(out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    terminals: Vec<Vertex>,
    connections: BTreeMap<(usize, usize), Route>,
}

impl Certificate {
    /// Every key must be a terminal-index pair `(a, b)` with `a < b < r`.
    /// Missing pairs are allowed here and reported by the verifier.
    pub fn new(
        terminals: Vec<Vertex>,
        connections: BTreeMap<(usize, usize), Route>,
    ) -> Result<Self> {
        let r = terminals.len();
        if r == 0 {
            return Err(invalid("a certificate needs at least one terminal"));
        }
        if let Some(&(a, b)) = connections.keys().find(|&&(a, b)| !(a < b && b < r)) {
            return Err(Error::MalformedCertificate(format!(
                "pair ({a},{b}) is not an index pair a < b < {r}"
            )));
        }
        Ok(Certificate {
            terminals,
            connections,
        })
    }

    /// `K_r` in itself: terminals `0..r`, every route a single edge.
    pub fn identity(r: usize) -> Result<Self> {
        let mut conn = BTreeMap::new();
        for a in 0..r {
            for b in a + 1..r {
                conn.insert((a, b), Route::edge(a, b));
            }
        }
        Certificate::new((0..r).collect(), conn)
    }

    pub fn clique_size(&self) -> usize {
        self.terminals.len()
    }

    pub fn terminals(&self) -> &[Vertex] {
        &self.terminals
    }

    pub fn connections(&self) -> &BTreeMap<(usize, usize), Route> {
        &self.connections
    }

    pub fn route(&self, a: usize, b: usize) -> Option<&Route> {
        self.connections.get(&(a.min(b), a.max(b)))
    }

    /// The route between terminals `a` and `b`, oriented from `terminals[a]`.
    /// `a` may be larger than `b`.
    pub fn route_from(&self, a: usize, b: usize) -> Option<Route> {
        let r = self.route(a, b)?;
        let start = self.terminals[a];
        if r.first() == Some(start) {
            Some(r.clone())
        } else {
            Some(r.reversed())
        }
    }

    pub fn set_route(&mut self, a: usize, b: usize, route: Route) -> Result<()> {
        let key = (a.min(b), a.max(b));
        if a == b || key.1 >= self.terminals.len() {
            return Err(Error::MalformedCertificate(format!(
                "pair ({a},{b}) is not an index pair below {}",
                self.terminals.len()
            )));
        }
        self.connections.insert(key, route);
        Ok(())
    }

    pub fn remove_route(&mut self, a: usize, b: usize) -> Option<Route> {
        self.connections.remove(&(a.min(b), a.max(b)))
    }

    pub fn terminals_mut(&mut self) -> &mut Vec<Vertex> {
        &mut self.terminals
    }

    /// Total number of route edges.
    pub fn total_length(&self) -> usize {
        self.connections.values().map(Route::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concatenation_joins_shared_endpoints() {
        let r = concatenate_routes(&[Route::edge(0, 1), Route::edge(1, 2)]).unwrap();
        assert_eq!(r.vertices(), &[0, 1, 2]);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn concatenating_three_odd_routes_is_odd() {
        let parts = [
            Route::new(vec![0, 1]),
            Route::new(vec![1, 5, 6, 2]),
            Route::new(vec![2, 7, 8, 9, 10, 3]),
        ];
        let r = concatenate_routes(&parts).unwrap();
        assert_eq!(r.len(), 1 + 3 + 5);
        assert!(r.is_odd());
    }

    #[test]
    fn concatenation_rejects_mismatch() {
        assert!(concatenate_routes(&[Route::edge(0, 1), Route::edge(2, 3)]).is_err());
        assert!(concatenate_routes(&[]).is_err());
    }

    #[test]
    fn route_from_orients_by_terminal() {
        let mut c = Certificate::identity(3).unwrap();
        c.set_route(0, 2, Route::new(vec![0, 7, 8, 2])).unwrap();
        assert_eq!(c.route_from(2, 0).unwrap().vertices(), &[2, 8, 7, 0]);
        assert_eq!(c.route_from(0, 2).unwrap().vertices(), &[0, 7, 8, 2]);
    }

    #[test]
    fn rejects_bad_pair_keys() {
        let mut conn = BTreeMap::new();
        conn.insert((1, 1), Route::edge(0, 1));
        assert!(Certificate::new(vec![0, 1], conn).is_err());
        let mut c = Certificate::identity(2).unwrap();
        assert!(c.set_route(0, 2, Route::edge(0, 1)).is_err());
    }
}
