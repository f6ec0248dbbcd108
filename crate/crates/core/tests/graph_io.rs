mod common;

use proptest::prelude::*;

use common::reference_graph6;
use twofactor::graph::{
    canonical_form, complete, dedup_isomorphic, enumerate_nonisomorphic, enumerate_small_graphs, from_edge_list,
    from_graph6, petersen, to_edge_list, to_graph6, Graph, GraphError,
};

fn edge_bits(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
        let mut edges = Vec::new();
        let mut it = bits.into_iter();
        for j in 1..n {
            for i in 0..j {
                if it.next().unwrap() {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(edge_bits)
}

proptest! {
    #[test]
    fn graph6_matches_reference_and_round_trips(g in any_graph(62)) {
        let s = to_graph6(&g);
        prop_assert_eq!(&s, &reference_graph6(&g));
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trips(g in any_graph(20)) {
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_label_invariant(g in any_graph(9), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }
}

#[test]
fn large_orders_use_long_size_field() {
    for n in [63, 100, 300] {
        let g = Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }
}

#[test]
fn known_strings() {
    assert_eq!(to_graph6(&complete(4)), "C~");
    assert_eq!(to_graph6(&petersen()).len(), 1 + 45usize.div_ceil(6));
    assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), complete(4));
}

#[test]
fn malformed_input_is_rejected() {
    for bad in ["", "C", "C~~", "C\u{7f}", "~?"] {
        assert!(matches!(from_graph6(bad), Err(GraphError::Parse { .. })), "{bad:?}");
    }
}

#[test]
fn isomorph_free_enumeration_agrees_with_labeled_dedup() {
    for n in 1..=6 {
        for connected in [false, true] {
            let labeled: Vec<Graph> = enumerate_small_graphs(n, connected).unwrap().collect();
            let mut a: Vec<String> = dedup_isomorphic(labeled).iter().map(|g| to_graph6(&canonical_form(g))).collect();
            let mut b: Vec<String> =
                enumerate_nonisomorphic(n, connected).unwrap().iter().map(|g| to_graph6(&canonical_form(g))).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "n={n} connected={connected}");
        }
    }
}
