//! Lifting an immersion in `K_t × K_s` to `G × H`.

use std::collections::BTreeMap;

use super::m_pair::build_m_pair;
use super::FactorImmersion;
use crate::certificate::{concatenate_routes, verify, Certificate, ClaimLevel, Route};
use crate::error::{invalid, Error, Result};
use crate::graph::{complete_graph, direct_product, Graph, PairIndex, Vertex};

struct Lift<'a> {
    fg: &'a FactorImmersion,
    fh: &'a FactorImmersion,
    base_index: PairIndex,
    h_order: usize,
}

impl Lift<'_> {
    fn phi(&self, c: Vertex) -> Vertex {
        let (x, y) = self.base_index.decode(c);
        self.fg.terminal(x) * self.h_order + self.fh.terminal(y)
    }

    /// Odd route in `G × H` from `φ(h, g)` to `φ(h', g')`, where the two base
    /// vertices differ in both coordinates.
    fn m_star(&self, (h, g): (usize, usize), (h2, g2): (usize, usize)) -> Result<Route> {
        let m = |i: usize, i2: usize, j: usize, j2: usize| {
            build_m_pair(&self.fg.path(i, i2), &self.fh.path(j, j2), self.h_order)
        };
        Ok(match (h < h2, g < g2) {
            (true, true) => m(h, h2, g, g2)?.0,
            (false, false) => m(h2, h, g2, g)?.0.reversed(),
            (true, false) => m(h, h2, g2, g)?.1,
            (false, true) => m(h2, h, g, g2)?.1.reversed(),
        })
    }
}

/// Given totally odd strong immersions of `K_t` in `G` and `K_s` in `H` and a
/// certificate of `K_r` in `K_t × K_s`, builds a totally odd immersion of `K_r`
/// in `G × H` on the product vertex numbering of [`direct_product`].
///
/// Terminal pairs that differ in both coordinates get a single lifted route;
/// the others follow their base route, one lifted segment per base edge.
/// The base must pass every verifier flag. The result is checked to be a
/// totally odd immersion; simplicity and strongness are left to the caller
/// to inspect.
pub fn direct_lift(
    fg: &FactorImmersion,
    fh: &FactorImmersion,
    base: &Certificate,
) -> Result<Certificate> {
    let (t, s) = (fg.clique_size(), fh.clique_size());
    if t < 3 || s < 3 {
        return Err(invalid(format!(
            "direct lifting needs factor immersions of K_t, K_s with t, s >= 3 (got {t}, {s})"
        )));
    }
    let base_host = direct_product(&complete_graph(t)?, &complete_graph(s)?)?;
    let report = verify(&base_host, base).map_err(|e| invalid(format!("base certificate: {e}")))?;
    if !report.all_passed() {
        return Err(invalid(format!(
            "base certificate is not a totally odd strong immersion in K{t}×K{s} (fails {})",
            report
                .failed()
                .iter()
                .map(|f| f.name())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }

    let lift = Lift {
        fg,
        fh,
        base_index: PairIndex::new(t, s),
        h_order: fh.host().vertex_count(),
    };
    let terminals: Vec<Vertex> = base.terminals().iter().map(|&c| lift.phi(c)).collect();
    let mut connections = BTreeMap::new();
    for (&(a, b), route) in base.connections() {
        let (ca, cb) = (base.terminals()[a], base.terminals()[b]);
        let (xa, xb) = (lift.base_index.decode(ca), lift.base_index.decode(cb));
        let lifted = if xa.0 != xb.0 && xa.1 != xb.1 {
            lift.m_star(xa, xb)?
        } else {
            let oriented = base.route_from(a, b).unwrap_or_else(|| route.clone());
            let segments = oriented
                .steps()
                .map(|(x, y)| lift.m_star(lift.base_index.decode(x), lift.base_index.decode(y)))
                .collect::<Result<Vec<_>>>()?;
            concatenate_routes(&segments)?
        };
        connections.insert((a, b), lifted);
    }
    let cert = Certificate::new(terminals, connections)?;

    let host = direct_lift_host(fg, fh)?;
    let report = verify(&host, &cert)?;
    if !report.satisfies(ClaimLevel::TotallyOdd) {
        return Err(Error::SelfCheck(format!(
            "lifted certificate is not a totally odd immersion: {}",
            report
                .violations
                .values()
                .map(|v| v.message.clone())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    Ok(cert)
}

/// The host `G × H` of [`direct_lift`].
pub fn direct_lift_host(fg: &FactorImmersion, fh: &FactorImmersion) -> Result<Graph> {
    direct_product(fg.host(), fh.host())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    fn c5_immersion() -> FactorImmersion {
        let mut c = Certificate::identity(3).unwrap();
        c.set_route(0, 2, Route::new(vec![0, 4, 3, 2])).unwrap();
        FactorImmersion::new(cycle_graph(5).unwrap(), c).unwrap()
    }

    /// Identity `K_3` on the diagonal `(x_i, y_i)` of `K_3 × K_3`.
    fn diagonal_base() -> Certificate {
        let terminals = vec![0, 4, 8];
        let mut conn = BTreeMap::new();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            conn.insert((a, b), Route::edge(terminals[a], terminals[b]));
        }
        Certificate::new(terminals, conn).unwrap()
    }

    #[test]
    fn diagonal_base_lifts_to_c5_times_c5() {
        let g = c5_immersion();
        let cert = direct_lift(&g, &g, &diagonal_base()).unwrap();
        let host = direct_lift_host(&g, &g).unwrap();
        let rep = verify(&host, &cert).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(cert.terminals(), &[0, 6, 12]);
    }

    #[test]
    fn shared_coordinate_pairs_follow_the_base_route() {
        // terminals (x0,y0) and (x0,y1) in K3×K3, joined through (x1,y2), (x2,y0)
        let idx = PairIndex::new(3, 3);
        let (a, b) = (idx.encode(0, 0), idx.encode(0, 1));
        let mut conn = BTreeMap::new();
        conn.insert(
            (0, 1),
            Route::new(vec![a, idx.encode(1, 2), idx.encode(2, 0), b]),
        );
        let base = Certificate::new(vec![a, b], conn).unwrap();
        let g = FactorImmersion::complete(3).unwrap();
        let cert = direct_lift(&g, &g, &base).unwrap();
        assert_eq!(cert.route(0, 1).unwrap().len(), 3);
        let rep = verify(&direct_lift_host(&g, &g).unwrap(), &cert).unwrap();
        assert!(rep.all_passed());
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = c5_immersion();
        let mut base = diagonal_base();
        base.set_route(0, 1, Route::new(vec![0, 4, 8, 4])).unwrap();
        assert!(direct_lift(&g, &g, &base).is_err());
        let k2 = FactorImmersion::complete(2).unwrap();
        assert!(direct_lift(&k2, &g, &diagonal_base()).is_err());
    }
}
