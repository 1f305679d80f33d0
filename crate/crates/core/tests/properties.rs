use domfree::construct::{construct_dominating_set, BoundParams, ConstructOptions};
use domfree::domination::*;
use domfree::format::{parse_graph6, to_graph6};
use domfree::subgraph::{contains_induced, contains_induced_brute_force, is_free};
use domfree::witness::extract_all_layers;
use domfree::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            for ((i, j), on) in pairs.zip(bits) {
                if on {
                    g.try_add_edge(i, j).unwrap();
                }
            }
            g
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gamma_matches_brute_force(g in graph(8)) {
        let r = gamma_exact(&g).unwrap();
        prop_assert!(is_dominating(&g, &r.witness));
        prop_assert_eq!(r.witness.len(), r.gamma);
        prop_assert_eq!(r.gamma, gamma_brute_force(&g).unwrap());
        prop_assert!(r.gamma <= independence_number(&g));
    }

    #[test]
    fn minimal_subsets_are_minimal(g in graph(9)) {
        let all = VertexSet::full(g.order());
        let d = minimal_dominating_subset(&g, &all, &all).unwrap();
        prop_assert!(is_dominating(&g, &d));
        for v in d.iter() {
            let mut smaller = d.clone();
            smaller.remove(v);
            prop_assert!(!is_dominating(&g, &smaller));
        }
        // every member of an inclusion-minimal dominating set has a private neighbour
        prop_assert!(private_neighbors(&g, &d, &all).is_ok());
    }

    #[test]
    fn construction_dominates(g in connected(12)) {
        let (d, report) = construct_dominating_set(&g, &ConstructOptions::default()).unwrap();
        prop_assert!(is_dominating(&g, &d));
        prop_assert_eq!(report.distinct_size, d.len());
        prop_assert!(report.total_size >= d.len());
        prop_assert!(gamma_exact(&g).unwrap().gamma <= d.len());
    }

    #[test]
    fn bound_holds_on_free_graphs(g in connected(11), k in 2usize..=4, l in 1usize..=3, m in 3usize..=6) {
        let params = BoundParams::new(k, l, m).unwrap();
        prop_assume!(is_free(&g, &params.forbidden()).is_free());
        let options = ConstructOptions { root: None, params: Some(params), check_freeness: true };
        let (d, report) = construct_dominating_set(&g, &options).unwrap();
        prop_assert!(is_dominating(&g, &d));
        prop_assert_eq!(report.bound_held, Some(true));
    }

    #[test]
    fn witnesses_are_induced(g in connected(10), k in 1usize..=4, l in 1usize..=3) {
        for root in g.vertices() {
            for (_, w) in extract_all_layers(&g, root, k, l).unwrap() {
                if let Some(w) = w {
                    prop_assert!(w.is_valid(&g));
                }
            }
        }
    }

    #[test]
    fn induced_search_matches_brute_force(host in graph(7), pattern in graph(4)) {
        let fast = contains_induced(&host, &pattern);
        prop_assert_eq!(fast.is_some(), contains_induced_brute_force(&host, &pattern));
        if let Some(e) = fast {
            prop_assert!(e.is_valid(&host, &pattern));
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}
