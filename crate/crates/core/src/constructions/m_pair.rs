//! The pair of vertex-disjoint odd routes that lift one `P_{ii'}`, `Q_{jj'}`
//! combination into the direct product.
//!
//! Write `P = u_i, a_1, .., a_k, u_i'` and `Q = v_j, b_1, .., b_l, v_j'`. Both
//! routes walk the two factor paths in lockstep; the shorter one, once
//! exhausted, oscillates between its last two vertices until the longer one
//! finishes. Since `k` and `l` are both even, both routes end at the far
//! endpoints. The second route walks `Q` backwards.

use crate::certificate::Route;
use crate::error::{invalid, Result};
use crate::graph::Vertex;

/// Which shape the lifted routes take, by interior lengths of `P` and `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MPairCase {
    /// `k = l = 0`: two product edges.
    SingleEdges,
    /// `0 < k = l`: pure diagonal.
    Diagonal,
    /// `0 < k < l`: the first coordinate alternates after `a_k`.
    FirstAlternates,
    /// `0 < l < k`: the second coordinate alternates after `b_l`.
    SecondAlternates,
    /// `k = 0 < l`: the first coordinate alternates between `u_i` and `u_i'`.
    FirstStatic,
    /// `l = 0 < k`: the second coordinate alternates between `v_j` and `v_j'`.
    SecondStatic,
}

impl MPairCase {
    pub fn classify(k: usize, l: usize) -> MPairCase {
        use std::cmp::Ordering::*;
        match (k, l, k.cmp(&l)) {
            (0, 0, _) => MPairCase::SingleEdges,
            (0, _, _) => MPairCase::FirstStatic,
            (_, 0, _) => MPairCase::SecondStatic,
            (_, _, Equal) => MPairCase::Diagonal,
            (_, _, Less) => MPairCase::FirstAlternates,
            (_, _, Greater) => MPairCase::SecondAlternates,
        }
    }
}

/// Position along a path with `interior` inner vertices at step `m`: advance
/// until the last inner vertex, then bounce between it and the far end.
fn schedule(interior: usize, m: usize) -> usize {
    if m <= interior {
        m
    } else {
        interior + (m - interior) % 2
    }
}

fn lift(p: &[Vertex], q: &[Vertex], h_order: usize) -> Route {
    let (k, l) = (p.len() - 2, q.len() - 2);
    let steps = k.max(l) + 1;
    Route::new(
        (0..=steps)
            .map(|m| p[schedule(k, m)] * h_order + q[schedule(l, m)])
            .collect(),
    )
}

/// Returns `(M_{(i,j)-(i',j')}, M_{(i,j')-(i',j)})` as routes in `G × H`,
/// with product vertex `(g, h)` numbered `g * h_order + h`.
///
/// `p` runs from `u_i` to `u_i'` in `G`, `q` from `v_j` to `v_j'` in `H`; both
/// must be odd.
pub fn build_m_pair(p: &Route, q: &Route, h_order: usize) -> Result<(Route, Route)> {
    for (name, r) in [("P", p), ("Q", q)] {
        if !r.is_odd() {
            return Err(invalid(format!(
                "{name} must be an odd route, got {} edges",
                r.len()
            )));
        }
    }
    let (pv, qv) = (p.vertices(), q.vertices());
    if let Some(&h) = qv.iter().find(|&&h| h >= h_order) {
        return Err(invalid(format!(
            "vertex {h} of Q exceeds the order {h_order}"
        )));
    }
    let qrev: Vec<Vertex> = qv.iter().rev().copied().collect();
    Ok((lift(pv, qv, h_order), lift(pv, &qrev, h_order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    // Factor vertices double as names: G and H have at most 100 vertices.
    const H: usize = 100;

    fn pairs(r: &Route) -> Vec<(usize, usize)> {
        r.vertices().iter().map(|&v| (v / H, v % H)).collect()
    }

    #[test]
    fn single_edges() {
        let (m1, m2) = build_m_pair(&Route::edge(1, 2), &Route::edge(7, 8), H).unwrap();
        assert_eq!(pairs(&m1), vec![(1, 7), (2, 8)]);
        assert_eq!(pairs(&m2), vec![(1, 8), (2, 7)]);
    }

    #[test]
    fn first_coordinate_alternates_when_p_is_an_edge() {
        // P = u-u', Q = v-b1-b2-v'
        let (u, u2, v, b1, b2, v2) = (1, 2, 10, 11, 12, 13);
        let (m1, m2) =
            build_m_pair(&Route::edge(u, u2), &Route::new(vec![v, b1, b2, v2]), H).unwrap();
        assert_eq!(pairs(&m1), vec![(u, v), (u2, b1), (u, b2), (u2, v2)]);
        assert_eq!(pairs(&m2), vec![(u, v2), (u2, b2), (u, b1), (u2, v)]);
        assert_eq!(MPairCase::classify(0, 2), MPairCase::FirstStatic);
    }

    #[test]
    fn second_coordinate_alternates_when_q_is_an_edge() {
        let (m1, m2) =
            build_m_pair(&Route::new(vec![1, 3, 4, 2]), &Route::edge(10, 13), H).unwrap();
        assert_eq!(pairs(&m1), vec![(1, 10), (3, 13), (4, 10), (2, 13)]);
        assert_eq!(pairs(&m2), vec![(1, 13), (3, 10), (4, 13), (2, 10)]);
    }

    #[test]
    fn diagonal_when_equal_lengths() {
        let (m1, m2) = build_m_pair(
            &Route::new(vec![1, 3, 4, 2]),
            &Route::new(vec![10, 11, 12, 13]),
            H,
        )
        .unwrap();
        assert_eq!(pairs(&m1), vec![(1, 10), (3, 11), (4, 12), (2, 13)]);
        assert_eq!(pairs(&m2), vec![(1, 13), (3, 12), (4, 11), (2, 10)]);
    }

    #[test]
    fn unequal_lengths_follow_the_longer_path() {
        // k = 2, l = 4
        let (m1, m2) = build_m_pair(
            &Route::new(vec![1, 3, 4, 2]),
            &Route::new(vec![10, 11, 12, 14, 15, 13]),
            H,
        )
        .unwrap();
        assert_eq!(
            pairs(&m1),
            vec![(1, 10), (3, 11), (4, 12), (2, 14), (4, 15), (2, 13)]
        );
        assert_eq!(
            pairs(&m2),
            vec![(1, 13), (3, 15), (4, 14), (2, 12), (4, 11), (2, 10)]
        );
        // k = 4, l = 2
        let (m1, m2) = build_m_pair(
            &Route::new(vec![1, 3, 4, 5, 6, 2]),
            &Route::new(vec![10, 11, 12, 13]),
            H,
        )
        .unwrap();
        assert_eq!(
            pairs(&m1),
            vec![(1, 10), (3, 11), (4, 12), (5, 13), (6, 12), (2, 13)]
        );
        assert_eq!(
            pairs(&m2),
            vec![(1, 13), (3, 12), (4, 11), (5, 10), (6, 11), (2, 10)]
        );
    }

    #[test]
    fn rejects_even_routes() {
        assert!(build_m_pair(&Route::new(vec![1, 2, 3]), &Route::edge(1, 2), H).is_err());
        assert!(build_m_pair(&Route::edge(1, 2), &Route::new(vec![5]), H).is_err());
    }

    fn odd_path(interior: usize, base: usize) -> Route {
        Route::new((base..base + interior + 2).collect())
    }

    proptest! {
        #[test]
        fn lifted_routes_are_odd_disjoint_product_paths(k in 0usize..=4, l in 0usize..=4) {
            let (p, q) = (odd_path(2 * k, 0), odd_path(2 * l, 50));
            let (m1, m2) = build_m_pair(&p, &q, H).unwrap();
            let a: HashSet<_> = m1.vertices().iter().collect();
            let b: HashSet<_> = m2.vertices().iter().collect();
            prop_assert!(a.is_disjoint(&b));
            for m in [&m1, &m2] {
                prop_assert!(m.is_odd());
                let distinct: HashSet<_> = m.vertices().iter().collect();
                prop_assert_eq!(distinct.len(), m.vertices().len());
                for (x, y) in m.steps() {
                    // consecutive factor path vertices are adjacent in both coordinates
                    prop_assert_eq!((x / H).abs_diff(y / H), 1);
                    prop_assert_eq!((x % H).abs_diff(y % H), 1);
                }
            }
            prop_assert_eq!(pairs(&m1)[0], (0, 50));
            prop_assert_eq!(*pairs(&m1).last().unwrap(), (2 * k + 1, 50 + 2 * l + 1));
            prop_assert_eq!(pairs(&m2)[0], (0, 50 + 2 * l + 1));
            prop_assert_eq!(*pairs(&m2).last().unwrap(), (2 * k + 1, 50));
        }
    }
}
