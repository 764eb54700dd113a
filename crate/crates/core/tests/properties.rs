use std::collections::BTreeMap;

use proptest::prelude::*;
use toi_core::certificate::{parse_certificate, serialize_certificate, verify, Certificate, Route};
use toi_core::graph::{parse_graph, product, write_graph};
use toi_core::solver::{
    chromatic_number, exact_toi, has_toi_clique, CliqueSearch, SearchBudget, Status,
};
use toi_core::{Graph, ProductKind, Vertex};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Every simple odd path from `x` to `y` whose interior avoids `blocked`.
fn odd_paths(g: &Graph, x: Vertex, y: Vertex, blocked: &[bool]) -> Vec<Vec<Vertex>> {
    fn go(
        g: &Graph,
        y: Vertex,
        blocked: &[bool],
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let cur = *path.last().unwrap();
        for &nb in g.neighbors(cur) {
            if nb == y {
                if path.len() % 2 == 1 {
                    let mut p = path.clone();
                    p.push(y);
                    out.push(p);
                }
            } else if !blocked[nb] && !path.contains(&nb) {
                path.push(nb);
                go(g, y, blocked, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, y, blocked, &mut vec![x], &mut out);
    out
}

fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

/// Plain backtracking over all path choices, no pruning.
fn assign(options: &[Vec<Vec<Vertex>>], k: usize, used: &mut Vec<(Vertex, Vertex)>) -> bool {
    if k == options.len() {
        return true;
    }
    for p in &options[k] {
        let edges: Vec<_> = p.windows(2).map(|w| edge_key(w[0], w[1])).collect();
        if edges.iter().any(|e| used.contains(e)) {
            continue;
        }
        let before = used.len();
        used.extend(&edges);
        if assign(options, k + 1, used) {
            return true;
        }
        used.truncate(before);
    }
    false
}

fn combinations(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    if n < t {
        return vec![];
    }
    let mut out = combinations(n - 1, t);
    for mut c in combinations(n - 1, t - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// toi by brute force, independent of the solver's pruning rules.
fn oracle_toi(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 1;
    for t in 2..=n {
        let found = combinations(n, t).into_iter().any(|terms| {
            let mut blocked = vec![false; n];
            for &x in &terms {
                blocked[x] = true;
            }
            let mut options = Vec::new();
            for a in 0..t {
                for b in a + 1..t {
                    options.push(odd_paths(g, terms[a], terms[b], &blocked));
                }
            }
            assign(&options, 0, &mut Vec::new())
        });
        if found {
            best = t;
        }
    }
    best
}

/// χ by trying every colouring with k colours.
fn oracle_chi(g: &Graph) -> usize {
    let n = g.vertex_count();
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|code| {
                let colors: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
            })
        })
        .unwrap()
}

#[test]
fn solver_matches_brute_force_on_all_small_graphs() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let r = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
            assert_eq!(r.status, Status::Exact);
            assert_eq!(r.value, oracle_toi(&g), "{}", write_graph(&g));
        }
    }
}

#[test]
fn solver_matches_brute_force_on_small_products() {
    use toi_core::graph::{complete_graph, cycle_graph, path_graph};
    let k = |t| complete_graph(t).unwrap();
    let hosts = [
        product(ProductKind::Cartesian, &k(2), &k(4)).unwrap(),
        product(ProductKind::Cartesian, &k(3), &k(2)).unwrap(),
        product(
            ProductKind::Cartesian,
            &cycle_graph(3).unwrap(),
            &path_graph(3).unwrap(),
        )
        .unwrap(),
        product(ProductKind::Direct, &k(3), &k(3)).unwrap(),
        product(ProductKind::Direct, &k(4), &k(2)).unwrap(),
    ];
    for g in hosts {
        let r = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        assert_eq!(
            (r.value, r.status),
            (oracle_toi(&g), Status::Exact),
            "{}",
            write_graph(&g)
        );
    }
}

#[test]
fn bipartite_law_on_all_graphs_up_to_five_vertices() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let v = exact_toi(&g, &SearchBudget::unlimited()).unwrap().value;
            let want_small = if g.edge_count() == 0 {
                Some(1)
            } else if g.is_bipartite() {
                Some(2)
            } else {
                None
            };
            match want_small {
                Some(w) => assert_eq!(v, w),
                None => assert!(v >= 3),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_brute_force_on_six_and_seven_vertices(g in graph_strategy(7)) {
        prop_assume!(g.vertex_count() >= 6);
        let r = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        prop_assert_eq!(r.status, Status::Exact);
        prop_assert_eq!(r.value, oracle_toi(&g));
    }

    #[test]
    fn toi_is_monotone_under_edge_addition(g in graph_strategy(7), pick in any::<prop::sample::Index>()) {
        let n = g.vertex_count();
        let missing: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let bigger = g.with_edge(u, v).unwrap();
        let a = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        let b = exact_toi(&bigger, &SearchBudget::unlimited()).unwrap();
        prop_assert!(a.value <= b.value);
    }

    #[test]
    fn witnesses_verify_and_respect_the_degree_bound(g in graph_strategy(7)) {
        let r = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        let w = r.witness.unwrap();
        prop_assert!(verify(&g, &w).unwrap().all_passed());
        prop_assert_eq!(w.clique_size(), r.value);
        prop_assert!(r.value <= g.max_degree() + 1);
        // one larger is reported absent, one equal is found
        let budget = SearchBudget::unlimited();
        prop_assert_eq!(has_toi_clique(&g, r.value + 1, &budget).unwrap(), CliqueSearch::Absent);
        prop_assert!(matches!(has_toi_clique(&g, r.value, &budget).unwrap(), CliqueSearch::Found(_)));
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graph_strategy(7)) {
        let r = chromatic_number(&g, &SearchBudget::unlimited()).unwrap();
        prop_assert_eq!(r.status, Status::Exact);
        prop_assert_eq!(r.value, oracle_chi(&g));
    }

    #[test]
    fn solver_is_deterministic(g in graph_strategy(7)) {
        let a = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        let b = exact_toi(&g, &SearchBudget::unlimited()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn certificate_json_round_trips(g in graph_strategy(7)) {
        let w = exact_toi(&g, &SearchBudget::unlimited()).unwrap().witness.unwrap();
        let text = serialize_certificate(&w);
        let back = parse_certificate(&text).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(serialize_certificate(&back), text);
    }

    #[test]
    fn product_files_round_trip_with_labels(g in graph_strategy(5), h in graph_strategy(5), k in 0usize..4) {
        let kind = ProductKind::ALL[k];
        let p = product(kind, &g, &h).unwrap();
        let text = write_graph(&p);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(write_graph(&back), text);
        for v in 0..p.vertex_count() {
            prop_assert_eq!(back.label(v), Some((v / h.vertex_count(), v % h.vertex_count())));
        }
    }

    #[test]
    fn direct_product_with_a_bipartite_factor_is_bipartite(g in graph_strategy(6), h in graph_strategy(6)) {
        prop_assume!(g.is_bipartite());
        prop_assert!(product(ProductKind::Direct, &g, &h).unwrap().is_bipartite());
        prop_assert!(product(ProductKind::Direct, &h, &g).unwrap().is_bipartite());
    }

    #[test]
    fn strong_product_splits_into_cartesian_and_direct(g in graph_strategy(6), h in graph_strategy(6)) {
        let s = product(ProductKind::Strong, &g, &h).unwrap();
        let c = product(ProductKind::Cartesian, &g, &h).unwrap();
        let d = product(ProductKind::Direct, &g, &h).unwrap();
        let mut both: Vec<_> = c.edges().iter().chain(d.edges()).copied().collect();
        both.sort_unstable();
        prop_assert_eq!(both, s.edges().to_vec());
    }

    #[test]
    fn relabelled_certificates_fail_only_where_expected(g in graph_strategy(6)) {
        // moving a route onto a reversed copy keeps every flag
        let w = exact_toi(&g, &SearchBudget::unlimited()).unwrap().witness.unwrap();
        let conn: BTreeMap<(usize, usize), Route> =
            w.connections().iter().map(|(&p, r)| (p, r.reversed())).collect();
        let flipped = Certificate::new(w.terminals().to_vec(), conn).unwrap();
        prop_assert!(verify(&g, &flipped).unwrap().all_passed());
    }
}
