//! Totally odd strong immersions in Cartesian products `G □ H`, numbered as
//! [`cartesian_product`]: `(g, h)` is vertex `g * |V(H)| + h`.

use std::collections::BTreeMap;

use super::{ensure_verified, FactorImmersion};
use crate::certificate::{concatenate_routes, Certificate, Route};
use crate::error::{invalid, Error, Result};
use crate::graph::{cartesian_product, Graph, Vertex};

struct Grid {
    nh: usize,
}

impl Grid {
    fn at(&self, g: Vertex, h: Vertex) -> Vertex {
        g * self.nh + h
    }

    /// A route of `G` copied into the row of `H`-vertex `h`.
    fn row(&self, p: &Route, h: Vertex) -> Route {
        p.map(|g| g * self.nh + h)
    }

    /// A route of `H` copied into the column of `G`-vertex `g`.
    fn column(&self, q: &Route, g: Vertex) -> Route {
        q.map(|h| g * self.nh + h)
    }
}

fn finish(
    g: &Graph,
    h: &Graph,
    terminals: Vec<Vertex>,
    conn: BTreeMap<(usize, usize), Route>,
    what: &str,
) -> Result<Certificate> {
    let cert = Certificate::new(terminals, conn)?;
    ensure_verified(&cartesian_product(g, h)?, cert, what)
}

/// `K_{t+s-1}` in `G □ H` from immersions of `K_t` in `G` and `K_s` in `H`,
/// `s >= 4`.
///
/// Terminals are `(u_1, v_j)` for all `j` (indices `0..s`) followed by
/// `(u_i, v_1)` for `i >= 2` (indices `s..s+t-1`). Pairs inside either group
/// use a lifted factor route. A pair `(u_1, v_j)`, `(u_i, v_1)` with `j >= 2`
/// runs along `P_{1i}` in row `v_j`, then in column `u_i` along `Q_{j,j+1}`
/// and `Q_{j+1,1}`; for `j = s` the detour is `Q_{s,2}`, `Q_{2,1}`.
pub fn cartesian_large(fg: &FactorImmersion, fh: &FactorImmersion) -> Result<Certificate> {
    let (t, s) = (fg.clique_size(), fh.clique_size());
    if s < 4 {
        return Err(Error::OutOfRange(format!(
            "requires s >= 4 (the second factor immersion is K{s})"
        )));
    }
    let grid = Grid {
        nh: fh.host().vertex_count(),
    };
    let (u, v) = (|i| fg.terminal(i), |j| fh.terminal(j));

    let mut terminals: Vec<Vertex> = (0..s).map(|j| grid.at(u(0), v(j))).collect();
    terminals.extend((1..t).map(|i| grid.at(u(i), v(0))));
    // terminal index of (u_1, v_j) is j, of (u_i, v_1) is s + i - 1
    let t2 = |i: usize| s + i - 1;

    let mut conn = BTreeMap::new();
    for a in 0..s {
        for b in a + 1..s {
            conn.insert((a, b), grid.column(&fh.path(a, b), u(0)));
        }
    }
    for i in 1..t {
        for i2 in i + 1..t {
            conn.insert((t2(i), t2(i2)), grid.row(&fg.path(i, i2), v(0)));
        }
        conn.insert((0, t2(i)), grid.row(&fg.path(0, i), v(0)));
        for j in 1..s {
            let next = if j + 1 < s { j + 1 } else { 1 };
            let route = concatenate_routes(&[
                grid.row(&fg.path(0, i), v(j)),
                grid.column(&fh.path(j, next), u(i)),
                grid.column(&fh.path(next, 0), u(i)),
            ])?;
            conn.insert((j, t2(i)), route);
        }
    }
    finish(
        fg.host(),
        fh.host(),
        terminals,
        conn,
        "K_{t+s-1} construction",
    )
}

fn require_k3(f: &FactorImmersion, which: &str) -> Result<()> {
    if f.clique_size() == 3 {
        Ok(())
    } else {
        Err(invalid(format!(
            "{which} must be an immersion of K3, got K{}",
            f.clique_size()
        )))
    }
}

/// `K_4` in `G □ H` from immersions of `K_3` in both factors.
///
/// Terminals `(u_1, v_1), (u_2, v_1), (u_3, v_1), (u_1, v_2)`. The first three
/// are joined in row `v_1`, `(u_1, v_1)` to `(u_1, v_2)` in column `u_1`, and
/// `(u_i, v_1)` to `(u_1, v_2)` by `P_{1i}` in row `v_2` followed by `Q_{23}`
/// and `Q_{31}` in column `u_i`.
pub fn cartesian_33(fg: &FactorImmersion, fh: &FactorImmersion) -> Result<Certificate> {
    require_k3(fg, "the first factor")?;
    require_k3(fh, "the second factor")?;
    let grid = Grid {
        nh: fh.host().vertex_count(),
    };
    let (u, v) = (|i| fg.terminal(i), |j| fh.terminal(j));
    let terminals = vec![
        grid.at(u(0), v(0)),
        grid.at(u(1), v(0)),
        grid.at(u(2), v(0)),
        grid.at(u(0), v(1)),
    ];
    let mut conn = BTreeMap::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        conn.insert((a, b), grid.row(&fg.path(a, b), v(0)));
    }
    conn.insert((0, 3), grid.column(&fh.path(0, 1), u(0)));
    for i in 1..3 {
        let from_top = concatenate_routes(&[
            grid.row(&fg.path(0, i), v(1)),
            grid.column(&fh.path(1, 2), u(i)),
            grid.column(&fh.path(2, 0), u(i)),
        ])?;
        conn.insert((i, 3), from_top.reversed());
    }
    finish(
        fg.host(),
        fh.host(),
        terminals,
        conn,
        "K4 construction for K3 factors",
    )
}

/// `K_4` in `G □ H` for non-bipartite `G` and `H` with a vertex of degree at
/// least two, through an odd cycle `u_1 .. u_{2l+1}` of `G` and a path
/// `v_1 v_2 v_3` of `H` centred at `v_2`.
///
/// Terminals `(u_1, v_1), (u_2, v_1), (u_3, v_1), (u_1, v_2)`; three pairs are
/// adjacent, the others go around the cycle in rows `v_1`, `v_2`, and through
/// row `v_3`.
pub fn cartesian_32(g: &Graph, h: &Graph) -> Result<Certificate> {
    let cycle = g.odd_cycle().ok_or_else(|| {
        Error::Precondition("the first factor must contain an odd cycle (it is bipartite)".into())
    })?;
    let (center, end1, end2) = h.find_p3_center().ok_or_else(|| {
        Error::Precondition(
            "the second factor must have a vertex of degree at least 2 (a P3 subgraph)".into(),
        )
    })?;
    let grid = Grid {
        nh: h.vertex_count(),
    };
    let u = |k: usize| cycle[k - 1];
    let (v1, v2, v3) = (end1, center, end2);
    let len = cycle.len();

    let terminals = vec![
        grid.at(u(1), v1),
        grid.at(u(2), v1),
        grid.at(u(3), v1),
        grid.at(u(1), v2),
    ];
    let mut conn = BTreeMap::new();
    conn.insert((0, 1), Route::edge(terminals[0], terminals[1]));
    conn.insert((0, 3), Route::edge(terminals[0], terminals[3]));
    conn.insert((1, 2), Route::edge(terminals[1], terminals[2]));

    // (u_3, v_1) .. (u_{2l+1}, v_1), (u_1, v_1)
    let mut around: Vec<Vertex> = (3..=len).map(|k| grid.at(u(k), v1)).collect();
    around.push(grid.at(u(1), v1));
    conn.insert((0, 2), Route::new(around).reversed());

    // (u_2, v_1), (u_2, v_2) .. (u_{2l+1}, v_2), (u_1, v_2)
    let mut second = vec![grid.at(u(2), v1)];
    second.extend((2..=len).map(|k| grid.at(u(k), v2)));
    second.push(grid.at(u(1), v2));
    conn.insert((1, 3), Route::new(second));

    let third = Route::new(vec![
        grid.at(u(1), v2),
        grid.at(u(1), v3),
        grid.at(u(2), v3),
        grid.at(u(3), v3),
        grid.at(u(3), v2),
        grid.at(u(3), v1),
    ]);
    conn.insert((2, 3), third.reversed());

    finish(
        g,
        h,
        terminals,
        conn,
        "K4 construction through an odd cycle and a P3",
    )
}
