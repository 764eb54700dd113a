use super::{chromatic_number, exact_toi, SearchBudget, SolveResult, Status};
use crate::certificate::Certificate;
use crate::error::Result;
use crate::graph::Graph;

/// `χ(G)` against `toi(G)` for the conjecture `χ(G) <= toi(G)`.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub chi: SolveResult<Vec<usize>>,
    pub toi: SolveResult<Certificate>,
    /// `Some(true)` when the bounds already prove `χ <= toi`, `Some(false)`
    /// only for a counterexample with both values exact, `None` otherwise.
    pub satisfied: Option<bool>,
}

/// Runs both solvers, each with the whole `budget`.
pub fn check_conjecture(g: &Graph, budget: &SearchBudget) -> Result<ConjectureReport> {
    let chi = chromatic_number(g, budget)?;
    let toi = exact_toi(g, budget)?;
    let satisfied = if chi.upper <= toi.lower {
        Some(true)
    } else if chi.status == Status::Exact && toi.status == Status::Exact {
        Some(false)
    } else {
        None
    };
    Ok(ConjectureReport {
        chi,
        toi,
        satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, complete_graph, cycle_graph, petersen_graph};

    #[test]
    fn holds_on_small_graphs() {
        let c5k3 =
            cartesian_product(&cycle_graph(5).unwrap(), &complete_graph(3).unwrap()).unwrap();
        for g in [
            cycle_graph(5).unwrap(),
            complete_graph(5).unwrap(),
            petersen_graph(),
            c5k3,
        ] {
            let r = check_conjecture(&g, &SearchBudget::unlimited()).unwrap();
            assert_eq!(r.satisfied, Some(true), "{g}");
        }
        let r = check_conjecture(&cycle_graph(5).unwrap(), &SearchBudget::unlimited()).unwrap();
        assert_eq!((r.chi.value, r.toi.value), (3, 3));
    }

    #[test]
    fn truncated_search_is_indeterminate() {
        let k4 = complete_graph(4).unwrap();
        let g = cartesian_product(&k4, &k4).unwrap();
        let r = check_conjecture(&g, &SearchBudget::unlimited().with_nodes(3)).unwrap();
        assert_eq!(r.toi.status, Status::Timeout);
        assert_eq!(r.satisfied, None);
    }
}
