//! Exhaustive search for `toi(G)` and `χ(G)` on small graphs.
//!
//! Both solvers return a [`SolveResult`] whose status says how much was
//! proved: `Exact` means the search excluded every larger value,
//! `LowerBoundOnly` means a route-length cap kept the search from being
//! exhaustive, `Timeout` means the node or time budget ran out.
//!
//! Node counts, values and statuses depend only on the input and the node
//! budget, never on the thread schedule. The time limit is the one
//! schedule-dependent knob.

mod chromatic;
mod conjecture;
mod toi;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{invalid, Result};

pub use chromatic::{chromatic_number, is_proper_coloring};
pub use conjecture::{check_conjecture, ConjectureReport};
pub use toi::{
    default_route_cap, exact_toi, exact_toi_up_to, has_toi_clique, toi_upper_bound, CliqueSearch,
};

/// Resource limits. `None` means unlimited; for the route length it means
/// the default cap of [`default_route_cap`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    pub max_route_length: Option<usize>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn with_nodes(mut self, n: u64) -> Self {
        self.max_nodes = Some(n);
        self
    }

    pub fn with_time_limit(mut self, d: Duration) -> Self {
        self.time_limit = Some(d);
        self
    }

    pub fn with_max_route_length(mut self, l: usize) -> Self {
        self.max_route_length = Some(l);
        self
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) {
            return Err(invalid("node limit must be positive"));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(invalid("time limit must be positive"));
        }
        if self.max_route_length == Some(0) {
            return Err(invalid("route length cap must be positive"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBoundOnly,
    Timeout,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::LowerBoundOnly => "lower-bound-only",
            Status::Timeout => "timeout",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a search. `lower..=upper` is the proven range of the true
/// value, and the witness (when present) attains `value`: the best clique
/// found for `toi`, the best colouring found for `χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: Option<W>,
    pub status: Status,
    pub nodes_explored: u64,
    pub lower: usize,
    pub upper: usize,
}

/// Node and time accounting shared by the solvers.
pub(crate) struct Meter {
    pub limit: u64,
    pub deadline: Option<Instant>,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Meter {
            limit: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}
