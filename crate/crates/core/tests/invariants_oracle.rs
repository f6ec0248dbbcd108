mod common;

use proptest::prelude::*;

use common::{independent, naive_alpha, naive_connectivity, naive_sigma_m, naive_sigma_t_m, top_t_degree_sum};
use twofactor::graph::{complete, complete_bipartite, cycle, enumerate_nonisomorphic, petersen, Graph};
use twofactor::invariants::{
    connectivity, delta_t, independence_number, independent_sets_of_size, local_connectivity, maximum_independent_set,
    sigma_m, sigma_t_m, ExtendedValue,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sigma_matches_subset_enumeration(g in graph_strategy(10)) {
        for m in 1..=5 {
            prop_assert_eq!(sigma_m(&g, m).finite(), naive_sigma_m(&g, m));
        }
        for (t, m) in [(1, 2), (2, 2), (2, 3), (2, 4), (3, 4), (2, 5)] {
            prop_assert_eq!(sigma_t_m(&g, t, m).unwrap().finite(), naive_sigma_t_m(&g, t, m));
        }
    }

    #[test]
    fn alpha_and_witness(g in graph_strategy(11)) {
        let set = maximum_independent_set(&g);
        prop_assert!(independent(&g, &set));
        prop_assert_eq!(set.len(), naive_alpha(&g));
        prop_assert_eq!(independence_number(&g), set.len());
    }

    #[test]
    fn kappa_matches_cut_search(g in graph_strategy(8)) {
        prop_assert_eq!(connectivity(&g), naive_connectivity(&g));
    }

    #[test]
    fn independent_sets_are_exactly_the_independent_subsets(g in graph_strategy(9), m in 1usize..=4) {
        let mut got: Vec<Vec<usize>> = independent_sets_of_size(&g, m).collect();
        got.sort();
        let mut want: Vec<Vec<usize>> = common::subsets(g.order(), m)
            .into_iter()
            .map(common::members)
            .filter(|s| independent(&g, s))
            .collect();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn delta_t_is_top_degree_sum(g in graph_strategy(9), t in 1usize..=3) {
        let set: Vec<usize> = (0..g.order()).step_by(2).collect();
        match delta_t(&g, &set, t) {
            Ok(v) => prop_assert_eq!(v, top_t_degree_sum(&g, &set, t)),
            Err(_) => prop_assert!(set.len() < t),
        }
    }

    #[test]
    fn sigma_is_monotone_in_t(g in graph_strategy(9)) {
        let a = sigma_t_m(&g, 2, 4).unwrap();
        let b = sigma_t_m(&g, 3, 4).unwrap();
        let c = sigma_m(&g, 4);
        prop_assert!(a <= b && b <= c);
    }
}

#[test]
fn local_connectivity_bounds_global() {
    for n in 2..=6 {
        for g in enumerate_nonisomorphic(n, true).unwrap() {
            let kappa = connectivity(&g);
            let min_local = (0..n)
                .flat_map(|s| (0..n).map(move |t| (s, t)))
                .filter(|&(s, t)| s < t && !g.has_edge(s, t))
                .map(|(s, t)| local_connectivity(&g, s, t))
                .min();
            match min_local {
                Some(v) => assert_eq!(kappa, v),
                None => assert_eq!(kappa, n - 1),
            }
        }
    }
}

#[test]
fn named_graph_values() {
    assert_eq!(sigma_m(&complete(5), 2), ExtendedValue::Infinite);
    assert_eq!(sigma_m(&cycle(7), 3), ExtendedValue::Finite(6));
    assert_eq!(sigma_m(&cycle(7), 4), ExtendedValue::Infinite);
    let k34 = complete_bipartite(3, 4);
    assert_eq!(connectivity(&k34), 3);
    assert_eq!(independence_number(&k34), 4);
    assert_eq!(sigma_t_m(&k34, 2, 4).unwrap(), ExtendedValue::Finite(6));
    let p = petersen();
    assert_eq!((connectivity(&p), independence_number(&p)), (3, 4));
    assert_eq!(sigma_m(&p, 4), ExtendedValue::Finite(12));
}

#[test]
fn invalid_parameters_are_rejected() {
    let g = cycle(5);
    assert!(sigma_t_m(&g, 0, 2).is_err());
    assert!(sigma_t_m(&g, 3, 2).is_err());
    assert!(delta_t(&g, &[0, 2], 3).is_err());
}
