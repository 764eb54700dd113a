use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One verifier property. Each is computed independently of the others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    EndpointsOk,
    AllOdd,
    EdgeDisjoint,
    RoutesSimple,
    Strong,
    TerminalsDistinct,
    Complete,
    EdgesExist,
}

impl Flag {
    pub const ALL: [Flag; 8] = [
        Flag::EndpointsOk,
        Flag::AllOdd,
        Flag::EdgeDisjoint,
        Flag::RoutesSimple,
        Flag::Strong,
        Flag::TerminalsDistinct,
        Flag::Complete,
        Flag::EdgesExist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::EndpointsOk => "endpoints_ok",
            Flag::AllOdd => "all_odd",
            Flag::EdgeDisjoint => "edge_disjoint",
            Flag::RoutesSimple => "routes_simple",
            Flag::Strong => "strong",
            Flag::TerminalsDistinct => "terminals_distinct",
            Flag::Complete => "complete",
            Flag::EdgesExist => "edges_exist",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a certificate proves, from weakest to strongest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimLevel {
    None,
    /// Edge-disjoint walks between distinct terminals (parity unchecked).
    Immersion,
    /// Additionally every route is odd.
    TotallyOdd,
    /// Every flag holds: odd paths, no terminal interior to any route.
    TotallyOddStrong,
}

impl ClaimLevel {
    fn required(self) -> &'static [Flag] {
        const IMMERSION: &[Flag] = &[
            Flag::EndpointsOk,
            Flag::EdgeDisjoint,
            Flag::TerminalsDistinct,
            Flag::Complete,
            Flag::EdgesExist,
        ];
        const TOTALLY_ODD: &[Flag] = &[
            Flag::EndpointsOk,
            Flag::AllOdd,
            Flag::EdgeDisjoint,
            Flag::TerminalsDistinct,
            Flag::Complete,
            Flag::EdgesExist,
        ];
        match self {
            ClaimLevel::None => &[],
            ClaimLevel::Immersion => IMMERSION,
            ClaimLevel::TotallyOdd => TOTALLY_ODD,
            ClaimLevel::TotallyOddStrong => &Flag::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClaimLevel::None => "none",
            ClaimLevel::Immersion => "immersion",
            ClaimLevel::TotallyOdd => "totally-odd",
            ClaimLevel::TotallyOddStrong => "totally-odd-strong",
        }
    }
}

impl std::str::FromStr for ClaimLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(ClaimLevel::None),
            "immersion" => Ok(ClaimLevel::Immersion),
            "totally-odd" => Ok(ClaimLevel::TotallyOdd),
            "totally-odd-strong" => Ok(ClaimLevel::TotallyOddStrong),
            other => Err(Error::InvalidArgument(format!(
                "unknown claim level `{other}`"
            ))),
        }
    }
}

/// Diagnostic for the first failure of a flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The offending pair, when the failure belongs to a route.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    /// For edge conflicts: the pair that used the edge first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other_pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<(Vertex, Vertex)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vertex>,
    pub message: String,
}

impl Violation {
    fn at_pair(pair: (usize, usize), message: String) -> Self {
        Violation {
            pair: Some(pair),
            other_pair: None,
            edge: None,
            vertex: None,
            message,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub clique_size: usize,
    pub endpoints_ok: bool,
    pub all_odd: bool,
    pub edge_disjoint: bool,
    pub routes_simple: bool,
    pub strong: bool,
    pub terminals_distinct: bool,
    pub complete: bool,
    pub edges_exist: bool,
    /// First violation of every failed flag.
    pub violations: BTreeMap<Flag, Violation>,
}

impl VerificationReport {
    pub fn flag(&self, flag: Flag) -> bool {
        match flag {
            Flag::EndpointsOk => self.endpoints_ok,
            Flag::AllOdd => self.all_odd,
            Flag::EdgeDisjoint => self.edge_disjoint,
            Flag::RoutesSimple => self.routes_simple,
            Flag::Strong => self.strong,
            Flag::TerminalsDistinct => self.terminals_distinct,
            Flag::Complete => self.complete,
            Flag::EdgesExist => self.edges_exist,
        }
    }

    pub fn flags(&self) -> [(Flag, bool); 8] {
        Flag::ALL.map(|f| (f, self.flag(f)))
    }

    pub fn failed(&self) -> Vec<Flag> {
        Flag::ALL.into_iter().filter(|&f| !self.flag(f)).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.failed().is_empty()
    }

    pub fn satisfies(&self, level: ClaimLevel) -> bool {
        level.required().iter().all(|&f| self.flag(f))
    }

    pub fn claim_level(&self) -> ClaimLevel {
        [
            ClaimLevel::TotallyOddStrong,
            ClaimLevel::TotallyOdd,
            ClaimLevel::Immersion,
        ]
        .into_iter()
        .find(|&l| self.satisfies(l))
        .unwrap_or(ClaimLevel::None)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "clique_size: {}", self.clique_size)?;
        for (flag, ok) in self.flags() {
            write!(f, "{:<19} {}", flag.name(), ok)?;
            if let Some(v) = self.violations.get(&flag) {
                write!(f, "  ({})", v.message)?;
            }
            writeln!(f)?;
        }
        write!(f, "claim: {}", self.claim_level().name())
    }
}

/// Checks a certificate against a host graph.
///
/// Fails only when the certificate names a vertex outside the host; every
/// other defect shows up as a false flag. All flags are always computed.
pub fn verify(host: &Graph, cert: &Certificate) -> Result<VerificationReport> {
    let n = host.vertex_count();
    if let Some(&t) = cert.terminals().iter().find(|&&t| t >= n) {
        return Err(Error::MalformedCertificate(format!(
            "terminal {t} is not a vertex of the host (n = {n})"
        )));
    }
    for (&(a, b), route) in cert.connections() {
        if let Some(&v) = route.vertices().iter().find(|&&v| v >= n) {
            return Err(Error::MalformedCertificate(format!(
                "route {{{a},{b}}} visits {v}, which is not a vertex of the host (n = {n})"
            )));
        }
    }

    let r = cert.clique_size();
    let terminals = cert.terminals();
    let mut violations = BTreeMap::new();
    let mut fail = |flag: Flag, v: Violation| {
        violations.entry(flag).or_insert(v);
    };

    // terminals_distinct
    let mut seen = HashMap::new();
    for (i, &t) in terminals.iter().enumerate() {
        if let Some(&j) = seen.get(&t) {
            fail(
                Flag::TerminalsDistinct,
                Violation {
                    pair: Some((j, i)),
                    other_pair: None,
                    edge: None,
                    vertex: Some(t),
                    message: format!("terminals {j} and {i} are both vertex {t}"),
                },
            );
            break;
        }
        seen.insert(t, i);
    }

    // complete
    'outer: for a in 0..r {
        for b in a + 1..r {
            if !cert.connections().contains_key(&(a, b)) {
                fail(
                    Flag::Complete,
                    Violation::at_pair((a, b), format!("no route for pair {{{a},{b}}}")),
                );
                break 'outer;
            }
        }
    }

    let terminal_set: HashSet<Vertex> = terminals.iter().copied().collect();
    let mut owner: HashMap<(Vertex, Vertex), (usize, usize)> = HashMap::new();

    for (&pair, route) in cert.connections() {
        let (a, b) = pair;
        let vs = route.vertices();

        let ends = (route.first(), route.last());
        let (ta, tb) = (terminals[a], terminals[b]);
        let endpoints_match = ends == (Some(ta), Some(tb)) || ends == (Some(tb), Some(ta));
        if !endpoints_match || vs.len() < 2 {
            fail(
                Flag::EndpointsOk,
                Violation::at_pair(
                    pair,
                    format!(
                        "route {{{a},{b}}} runs {:?}..{:?}, expected {ta}..{tb}",
                        ends.0, ends.1
                    ),
                ),
            );
        }

        if !route.is_odd() {
            fail(
                Flag::AllOdd,
                Violation::at_pair(pair, format!("route {{{a},{b}}} has {} edges", route.len())),
            );
        }

        for (u, v) in route.steps() {
            if !host.has_edge(u, v) {
                fail(
                    Flag::EdgesExist,
                    Violation {
                        pair: Some(pair),
                        other_pair: None,
                        edge: Some((u, v)),
                        vertex: None,
                        message: format!("route {{{a},{b}}} steps {u}-{v}, not a host edge"),
                    },
                );
            }
            let key = (u.min(v), u.max(v));
            match owner.get(&key) {
                Some(&first) => fail(
                    Flag::EdgeDisjoint,
                    Violation {
                        pair: Some(pair),
                        other_pair: Some(first),
                        edge: Some(key),
                        vertex: None,
                        message: format!(
                            "edge {}-{} used by route {{{},{}}} and route {{{a},{b}}}",
                            key.0, key.1, first.0, first.1
                        ),
                    },
                ),
                None => {
                    owner.insert(key, pair);
                }
            }
        }

        let mut on_route = HashSet::with_capacity(vs.len());
        if let Some(&v) = vs.iter().find(|&&v| !on_route.insert(v)) {
            fail(
                Flag::RoutesSimple,
                Violation {
                    pair: Some(pair),
                    other_pair: None,
                    edge: None,
                    vertex: Some(v),
                    message: format!("route {{{a},{b}}} visits {v} twice"),
                },
            );
        }

        if let Some(&v) = route.interior().iter().find(|v| terminal_set.contains(v)) {
            fail(
                Flag::Strong,
                Violation {
                    pair: Some(pair),
                    other_pair: None,
                    edge: None,
                    vertex: Some(v),
                    message: format!("terminal {v} is interior to route {{{a},{b}}}"),
                },
            );
        }
    }

    let ok = |f: Flag| !violations.contains_key(&f);
    Ok(VerificationReport {
        clique_size: r,
        endpoints_ok: ok(Flag::EndpointsOk),
        all_odd: ok(Flag::AllOdd),
        edge_disjoint: ok(Flag::EdgeDisjoint),
        routes_simple: ok(Flag::RoutesSimple),
        strong: ok(Flag::Strong),
        terminals_distinct: ok(Flag::TerminalsDistinct),
        complete: ok(Flag::Complete),
        edges_exist: ok(Flag::EdgesExist),
        violations,
    })
}
