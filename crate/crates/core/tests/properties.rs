use std::sync::OnceLock;

use itertools::Itertools;
use proptest::prelude::*;

use planar_c5::embedding::is_planar;
use planar_c5::enumeration::{corpus, Triangulation};
use planar_c5::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use planar_c5::verification::{monotonicity_counterexample, verify_lemmas};
use planar_c5::*;

fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let edges = (0..n)
        .tuple_combinations()
        .zip(mask)
        .filter(|(_, &keep)| keep)
        .map(|(e, _)| e);
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |m| graph_from_mask(n, &m))
    })
}

fn arb_relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn corpus9() -> &'static [Triangulation] {
    static C: OnceLock<Vec<Triangulation>> = OnceLock::new();
    C.get_or_init(|| corpus(9, 1).unwrap())
}

/// A corpus triangulation on 9 vertices with a random subset of edges kept.
fn arb_planar() -> impl Strategy<Value = Graph> {
    (0..corpus9().len(), prop::collection::vec(any::<bool>(), 21)).prop_map(|(i, keep)| {
        let g = corpus9()[i].graph();
        let edges = g.edges().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e);
        Graph::from_edges(g.n(), edges).unwrap()
    })
}

fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return false;
    }
    (0..n)
        .permutations(n)
        .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fast_counters_match_bruteforce(g in arb_graph(8)) {
        for k in 3..=5 {
            prop_assert_eq!(count_cycles(&g, k).unwrap(), count_cycles_bruteforce(&g, k).unwrap());
        }
    }

    #[test]
    fn handshake_identities(g in arb_graph(10)) {
        let r = cycle_report(&g).unwrap();
        prop_assert!(r.handshake_holds());
        prop_assert_eq!(r.c5, count_cycles(&g, 5).unwrap());
        prop_assert_eq!(r.per_edge_c5.len(), g.m());
    }

    #[test]
    fn graph_invariants(g in arb_graph(12)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(nb.iter().all(|&w| g.has_edge(w, v) && w != v));
        }
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_relabeled(10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn canonical_form_decides_isomorphism(a in arb_graph(6), b in arb_graph(6)) {
        if a.n() == b.n() {
            let same = canonical_form(&a) == canonical_form(&b);
            prop_assert_eq!(same, isomorphic_by_permutation(&a, &b));
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn subgraphs_of_triangulations_are_planar(g in arb_planar()) {
        let e = planar_embed(&g).expect("subgraph of a planar graph");
        let back = Embedding::from_text(&e.to_text()).unwrap();
        prop_assert_eq!(back.rotations(), e.rotations());
        prop_assert_eq!(verify_lemmas(&[g]).unwrap().violations(), 0);
    }

    #[test]
    fn adding_edges_never_lowers_c5(g in arb_planar()) {
        let mut checked = 0;
        prop_assert_eq!(monotonicity_counterexample(&g, &mut checked).unwrap(), None);
    }

    #[test]
    fn parsers_never_panic(s in "[?-~]{0,40}|[0-9 \n:]{0,60}|(.|\n){0,60}") {
        if let Ok(g) = from_graph6(&s) {
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
        if let Ok(g) = from_edge_list(&s) {
            prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
        if let Ok(e) = Embedding::from_text(&s) {
            prop_assert_eq!(Embedding::from_text(&e.to_text()).unwrap().to_text(), e.to_text());
        }
        let _ = io::parse_graph(&s, None);
    }

    #[test]
    fn fast_counters_match_on_planar_graphs(g in arb_planar()) {
        prop_assert_eq!(count_cycles(&g, 5).unwrap(), count_cycles_bruteforce(&g, 5).unwrap());
    }
}

#[test]
fn triangulation_plus_any_edge_is_not_planar() {
    for t in corpus9() {
        let g = t.graph();
        for (u, v) in (0..g.n()).tuple_combinations() {
            if !g.has_edge(u, v) {
                assert!(!is_planar(&g.with_edge(u, v).unwrap()));
            }
        }
    }
}

#[test]
fn corpus_neighborhoods_are_cycles() {
    for t in corpus9() {
        for v in 0..t.graph().n() {
            let cyc = t.embedding.neighborhood_cycle(v).unwrap();
            assert_eq!(cyc.len(), t.graph().degree(v).unwrap());
            for (a, b) in cyc.iter().circular_tuple_windows() {
                assert!(t.graph().has_edge(*a, *b));
            }
        }
    }
}
