//! A totally odd strong `K_{ts}` in `K_{2t} × K_s` (`t >= 6`, `s >= 5`).
//!
//! Coordinates are 1-based here: `(i, j)` is `(u_i, v_j)` with
//! `1 <= i <= 2t`, `1 <= j <= s`, vertex id `(i - 1) * s + (j - 1)`. The
//! terminals are the vertices with odd `i`. Terminals that differ in both
//! coordinates are adjacent; every other terminal pair gets a route of length
//! three whose edges come from a family of edge classes reserved for its case.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::ensure_verified;
use crate::certificate::{Certificate, Route};
use crate::error::{invalid, Error, Result};
use crate::graph::{complete_graph, direct_product, Vertex};

/// `(i mod 2, i - i', j' - j)` for the edge `(u_i, v_j)(u_i', v_j')` with `j < j'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeClass {
    pub parity: u8,
    pub di: i64,
    pub dj: i64,
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.parity, self.di, self.dj)
    }
}

fn coords(s: usize, v: Vertex) -> (i64, i64) {
    ((v / s) as i64 + 1, (v % s) as i64 + 1)
}

fn vid(s: usize, (i, j): (i64, i64)) -> Vertex {
    (i as usize - 1) * s + (j as usize - 1)
}

fn check_edge(t: usize, s: usize, (u, v): (Vertex, Vertex)) -> Result<((i64, i64), (i64, i64))> {
    let n = 2 * t * s;
    if u >= n || v >= n {
        return Err(Error::OutOfRange(format!(
            "edge {u}-{v} is not in K{}×K{s}",
            2 * t
        )));
    }
    let (a, b) = (coords(s, u), coords(s, v));
    if a.0 == b.0 || a.1 == b.1 {
        return Err(invalid(format!(
            "{u}-{v} is not an edge of K{}×K{s}",
            2 * t
        )));
    }
    if a.0 % 2 == 1 && b.0 % 2 == 1 {
        return Err(invalid(format!(
            "{u}-{v} joins two terminals; such edges carry no class"
        )));
    }
    Ok(if a.1 < b.1 { (a, b) } else { (b, a) })
}

/// The class of an edge of `K_{2t} × K_s` that does not join two terminals.
pub fn edge_class(t: usize, s: usize, e: (Vertex, Vertex)) -> Result<EdgeClass> {
    let ((i, j), (i2, j2)) = check_edge(t, s, e)?;
    Ok(EdgeClass {
        parity: (i % 2) as u8,
        di: i - i2,
        dj: j2 - j,
    })
}

/// Whether `e2` is obtained from `e` by adding `(2a, b)` to both endpoints
/// for some integers `a`, `b` (of either sign).
pub fn is_translation(
    t: usize,
    s: usize,
    e: (Vertex, Vertex),
    e2: (Vertex, Vertex),
) -> Result<bool> {
    let ((i, j), (i2, j2)) = check_edge(t, s, e)?;
    let ((k, l), (k2, l2)) = check_edge(t, s, e2)?;
    let (da, db) = (k - i, l - j);
    Ok(da % 2 == 0 && k2 - i2 == da && l2 - j2 == db)
}

/// Which rule produced a route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KtsCase {
    /// Terminals differing in both coordinates: one edge.
    Direct,
    /// Same row, `i <= t - 1`.
    SameRow,
    /// Same row, `i = t`, wrapping to `u_2`.
    SameRowWrap,
    /// Rows `i`, `i + 1`, `j <= s - 2`.
    NextRow,
    /// Rows `i`, `i + 1`, `j >= s - 1`, `i <= t - 3`.
    NextRowHighJ,
    /// Rows `i`, `i + 1`, `j >= s - 1`, `i >= t - 2`.
    NextRowHighJLate,
    /// Rows `i < i'` with `i' >= i + 2`, `j <= s - 2`.
    FarRow,
    /// Far rows, `j = s - 1`, `i' >= i + 3`, not `(1, t)`.
    FarRowJsMinus1,
    /// Far rows, `j = s`, `i' >= i + 3`, not `(1, t)`.
    FarRowJs,
    /// Rows `1` and `t`, `j >= s - 1`.
    FirstLastRow,
    /// Rows `i`, `i + 2`, `j >= s - 1`. Replaces the far-row rule there, which
    /// collides with [`KtsCase::NextRowHighJ`].
    SkipOneRowHighJ,
}

impl KtsCase {
    pub const ALL: [KtsCase; 11] = [
        KtsCase::Direct,
        KtsCase::SameRow,
        KtsCase::SameRowWrap,
        KtsCase::NextRow,
        KtsCase::NextRowHighJ,
        KtsCase::NextRowHighJLate,
        KtsCase::FarRow,
        KtsCase::FarRowJsMinus1,
        KtsCase::FarRowJs,
        KtsCase::FirstLastRow,
        KtsCase::SkipOneRowHighJ,
    ];

    /// The top-level case (1: same row, 2: adjacent rows, 3: rows further
    /// apart), or 0 for direct edges. Class sets of different top-level
    /// cases are disjoint; subcases of one case share classes but use
    /// different translates.
    pub fn family(self) -> u8 {
        use KtsCase::*;
        match self {
            Direct => 0,
            SameRow | SameRowWrap => 1,
            NextRow | NextRowHighJ | NextRowHighJLate => 2,
            FarRow | FarRowJsMinus1 | FarRowJs | FirstLastRow | SkipOneRowHighJ => 3,
        }
    }

    /// The classes the three edges of a route in this case belong to, in
    /// route order. Empty for [`KtsCase::Direct`], whose edge joins two
    /// terminals.
    pub fn declared_classes(self, t: usize, s: usize) -> Vec<ClassSpec> {
        let (t, s) = (t as i64, s as i64);
        let fixed = |parity, di, dj| ClassSpec::new(parity, di, di, dj, dj);
        let span = |parity, lo, hi, dj| ClassSpec::new(parity, lo, hi, dj, dj);
        match self {
            KtsCase::Direct => vec![],
            KtsCase::SameRow => vec![
                ClassSpec::new(1, -1, -1, 1, s - 1),
                ClassSpec::new(0, 2, 2, 1, s - 1),
                ClassSpec::new(0, 3, 3, 1, s - 1),
            ],
            KtsCase::SameRowWrap => vec![
                ClassSpec::new(1, -1, -1, 1, s - 1),
                ClassSpec::new(0, 2 - 2 * t, 2 - 2 * t, 1, s - 1),
                ClassSpec::new(0, 3 - 2 * t, 3 - 2 * t, 1, s - 1),
            ],
            KtsCase::NextRow => vec![fixed(1, -3, 2), fixed(0, -2, 1), fixed(1, 1, 1)],
            KtsCase::NextRowHighJ => {
                vec![fixed(0, 1, 1), fixed(0, 6, s - 3), fixed(0, 5, s - 2)]
            }
            KtsCase::NextRowHighJLate => {
                vec![fixed(0, -3, s - 2), fixed(0, -4, 1), fixed(0, -1, s - 3)]
            }
            KtsCase::FarRow => vec![
                span(1, 1 - 2 * t, -5, 1),
                span(0, 4, 2 * t - 2, 1),
                span(1, 3, 2 * t - 3, 2),
            ],
            KtsCase::FarRowJsMinus1 => vec![
                span(1, 3 - 2 * t, -5, 1),
                span(0, 4 - 2 * t, -4, s - 1),
                span(0, 5 - 2 * t, -5, s - 2),
            ],
            KtsCase::FarRowJs => vec![
                span(0, 5, 2 * t - 3, s - 1),
                span(0, 4, 2 * t - 4, 1),
                span(0, 5 - 2 * t, -5, s - 2),
            ],
            KtsCase::FirstLastRow => {
                vec![fixed(0, 2 * t - 1, 1), fixed(0, -6, 1), fixed(0, -5, 2)]
            }
            KtsCase::SkipOneRowHighJ => vec![fixed(0, 1, 3), fixed(0, -2, 2), fixed(0, -1, 1)],
        }
    }
}

/// A set of edge classes: fixed parity, `di` in a closed range (stepping by
/// two, so all values share the parity of the bounds), `dj` in a closed range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    pub parity: u8,
    pub di: (i64, i64),
    pub dj: (i64, i64),
}

impl ClassSpec {
    fn new(parity: u8, di_lo: i64, di_hi: i64, dj_lo: i64, dj_hi: i64) -> Self {
        ClassSpec {
            parity,
            di: (di_lo, di_hi),
            dj: (dj_lo, dj_hi),
        }
    }

    pub fn contains(&self, c: EdgeClass) -> bool {
        c.parity == self.parity
            && (self.di.0..=self.di.1).contains(&c.di)
            && (c.di - self.di.0) % 2 == 0
            && (self.dj.0..=self.dj.1).contains(&c.dj)
    }
}

/// One connection of the `K_{ts}` construction with the rule that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KtsRoute {
    pub pair: (usize, usize),
    pub case: KtsCase,
    pub route: Route,
}

fn check_params(t: usize, s: usize) -> Result<()> {
    if t < 6 || s < 5 {
        return Err(Error::OutOfRange(format!(
            "the K_ts construction in K_2t×K_s needs t >= 6 and s >= 5 (got t = {t}, s = {s})"
        )));
    }
    Ok(())
}

/// Route for terminals `(2i-1, j)` and `(2i'-1, j')` with `(i, j) < (i', j')`,
/// as a 1-based vertex sequence.
fn kts_route(
    t: i64,
    s: i64,
    (i, j): (i64, i64),
    (i2, j2): (i64, i64),
) -> (KtsCase, Vec<(i64, i64)>) {
    use KtsCase::*;
    let r = |a: i64| 2 * a - 1;
    if i != i2 && j != j2 {
        return (Direct, vec![(r(i), j), (r(i2), j2)]);
    }
    if i == i2 {
        return if i < t {
            (
                SameRow,
                vec![(r(i), j), (2 * i, j2), (2 * i + 2, j), (r(i), j2)],
            )
        } else {
            (
                SameRowWrap,
                vec![(r(t), j), (2 * t, j2), (2, j), (r(t), j2)],
            )
        };
    }
    // same column j, rows i < i2
    if i2 == i + 1 {
        return if j <= s - 2 {
            (
                NextRow,
                vec![(r(i), j), (2 * i + 2, j + 2), (2 * i, j + 1), (r(i2), j)],
            )
        } else if i <= t - 3 {
            (
                NextRowHighJ,
                vec![
                    (r(i), j),
                    (2 * i, j - 1),
                    (2 * i + 6, j - (s - 2)),
                    (r(i2), j),
                ],
            )
        } else {
            (
                NextRowHighJLate,
                vec![
                    (r(i), j),
                    (2 * i - 4, j - (s - 2)),
                    (2 * i, j - (s - 3)),
                    (r(i2), j),
                ],
            )
        };
    }
    if j <= s - 2 {
        (
            FarRow,
            vec![(r(i), j), (2 * i2, j + 1), (2 * i, j + 2), (r(i2), j)],
        )
    } else if i2 == i + 2 {
        (
            SkipOneRowHighJ,
            vec![(r(i), j), (2 * i, j - 3), (2 * i + 2, j - 1), (r(i2), j)],
        )
    } else if (i, i2) == (1, t) {
        (
            FirstLastRow,
            vec![(1, j), (2 * t, j - 1), (2 * t - 6, j - 2), (r(t), j)],
        )
    } else if j == s - 1 {
        (
            FarRowJsMinus1,
            vec![(r(i), s - 1), (2 * i2, s), (2 * i, 1), (r(i2), s - 1)],
        )
    } else {
        (
            FarRowJs,
            vec![(r(i), s), (2 * i2, 1), (2 * i, 2), (r(i2), s)],
        )
    }
}

/// Every connection of the construction, tagged with its rule, in pair order.
/// Terminal `k` is `(u_{2i-1}, v_j)` with `k = (i - 1) * s + (j - 1)`.
pub fn direct_kts_routes(t: usize, s: usize) -> Result<Vec<KtsRoute>> {
    check_params(t, s)?;
    let (ti, si) = (t as i64, s as i64);
    let pos = |k: usize| ((k / s) as i64 + 1, (k % s) as i64 + 1);
    let r = t * s;
    let mut out = Vec::with_capacity(r * (r - 1) / 2);
    for a in 0..r {
        for b in a + 1..r {
            let (case, seq) = kts_route(ti, si, pos(a), pos(b));
            out.push(KtsRoute {
                pair: (a, b),
                case,
                route: Route::new(seq.into_iter().map(|c| vid(s, c)).collect()),
            });
        }
    }
    Ok(out)
}

/// The terminals `(u_{2i-1}, v_j)` in row-major order.
fn kts_terminals(t: usize, s: usize) -> Vec<Vertex> {
    (1..=t as i64)
        .flat_map(|i| (1..=s as i64).map(move |j| (2 * i - 1, j)))
        .map(|c| vid(s, c))
        .collect()
}

/// A certificate of `K_{ts}` in `K_{2t} × K_s`, numbered as
/// [`direct_product`]`(K_{2t}, K_s)`.
pub fn direct_kts(t: usize, s: usize) -> Result<Certificate> {
    let routes = direct_kts_routes(t, s)?;
    let conn: BTreeMap<_, _> = routes.into_iter().map(|r| (r.pair, r.route)).collect();
    let cert = Certificate::new(kts_terminals(t, s), conn)?;
    let host = direct_product(&complete_graph(2 * t)?, &complete_graph(s)?)?;
    ensure_verified(&host, cert, "K_ts construction")
}
