use planar_c5::canon::are_isomorphic;
use planar_c5::constructions::*;
use planar_c5::enumeration::corpus;
use planar_c5::io::{from_graph6, to_graph6};
use planar_c5::*;

#[test]
fn golden_file_matches_builders() {
    let golden = golden_catalog();
    let specs = catalog_specs();
    assert_eq!(golden.len(), specs.len());
    for (entry, spec) in golden.iter().zip(&specs) {
        assert_eq!(entry.spec().unwrap(), *spec);
        assert_eq!(*entry, golden_entry(spec).unwrap(), "{}", entry.family);
    }
}

#[test]
fn golden_counts_match_bruteforce_oracle() {
    for entry in golden_catalog() {
        let g = from_graph6(&entry.graph6).unwrap();
        assert_eq!(
            count_cycles_bruteforce(&g, 5).unwrap(),
            entry.expected_c5,
            "{} n={}",
            entry.family,
            entry.n
        );
        assert_eq!(canonical_form(&g), entry.canonical_form);
    }
}

#[test]
fn d_apexes_non_adjacent_e_apexes_adjacent() {
    for n in 5..=20 {
        let d = build_d(n).unwrap();
        let e = build_e(n).unwrap();
        assert!(!d.has_edge(n - 2, n - 1));
        assert!(e.has_edge(n - 2, n - 1));
        assert_eq!(d.degree(n - 1).unwrap(), n - 2);
        assert_eq!(e.degree(n - 1).unwrap(), n - 1);
    }
}

#[test]
fn d_has_n_minus_two_degree_four_vertices() {
    for n in 7..=30 {
        let d = build_d(n).unwrap();
        let fours = (0..n).filter(|&v| d.degree(v).unwrap() == 4).count();
        assert_eq!(fours, n - 2);
    }
}

#[test]
fn a_graphs_have_one_degree_three_vertex_per_face() {
    for n in [8, 11] {
        let g = build_a(n).unwrap();
        assert!((0..n).all(|v| g.degree(v).unwrap() != 4));
        let e = planar_embed(&g).unwrap();
        assert!(e.is_triangulation());
        for f in e.faces() {
            let threes = f.boundary.iter().filter(|&&v| g.degree(v).unwrap() == 3).count();
            assert_eq!(threes, 1, "face {:?} of A_{n}", f.boundary);
        }
    }
}

#[test]
fn a8_is_not_d8() {
    assert!(!are_isomorphic(&build_a(8).unwrap(), &build_d(8).unwrap()));
    assert!(!are_isomorphic(&build_a(11).unwrap(), &build_d(11).unwrap()));
    assert!(are_isomorphic(&build_exceptional(1).unwrap(), &build_a(8).unwrap()));
    assert!(are_isomorphic(&build_exceptional(5).unwrap(), &build_a(11).unwrap()));
}

/// A degree-3 vertex whose neighbor triangle has a second apex, and no
/// degree-4 vertex anywhere.
fn residual_case(g: &Graph) -> bool {
    let n = g.n();
    if (0..n).any(|v| g.degree(v).unwrap() == 4) {
        return false;
    }
    (0..n).any(|v| {
        let nb = g.neighbors(v);
        nb.len() == 3 && (0..n).any(|u| u != v && nb.iter().all(|&w| g.has_edge(u, w)))
    })
}

#[test]
fn catalog_is_pinned_by_enumeration() {
    for (i, (&n, &c5)) in EXCEPTIONAL_ORDERS.iter().zip(&EXCEPTIONAL_C5).enumerate() {
        let hits: Vec<CanonicalForm> = corpus(n, 1)
            .unwrap()
            .into_iter()
            .filter(|t| residual_case(t.graph()) && count_cycles(t.graph(), 5).unwrap() == c5)
            .map(|t| t.form)
            .collect();
        assert_eq!(hits.len(), 1, "entry {i}: ambiguous or missing candidates {hits:?}");
        assert_eq!(hits[0], canonical_form(&build_exceptional(i).unwrap()), "entry {i}");
    }
}

#[test]
fn graph6_of_constructions_round_trips() {
    for spec in catalog_specs() {
        let g = expand(&spec).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
