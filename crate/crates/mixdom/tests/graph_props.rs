mod common;

use common::sample_graph;
use mixdom::format::{parse_gr, write_gr};
use mixdom::oracle::brute_force;
use mixdom::{Graph, MixedSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn set_from_bits(g: &Graph, bits: u64) -> MixedSet {
    let mut s = MixedSet::empty(g.element_count());
    for i in 0..g.element_count() {
        if bits >> i & 1 == 1 {
            s.insert(i);
        }
    }
    s
}

/// Smallest vertex cover by exhaustive search.
fn min_vertex_cover(g: &Graph) -> u32 {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|mask| g.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones())
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn closed_neighborhoods_are_reflexive_and_symmetric(g in arb_graph(8)) {
        for i in 0..g.element_count() {
            let r = g.element_at(i);
            let nr = g.mixed_closed_neighborhood(r).unwrap();
            prop_assert!(nr.contains(&r));
            for s in &nr {
                prop_assert!(g.mixed_closed_neighborhood(*s).unwrap().contains(&r));
            }
        }
    }

    #[test]
    fn full_set_dominates(g in arb_graph(8)) {
        prop_assert!(g.is_mixed_dominating_set(&g.full_set()));
    }

    #[test]
    fn supersets_of_dominating_sets_dominate(g in arb_graph(6), a in any::<u64>(), b in any::<u64>()) {
        let s = set_from_bits(&g, a);
        let t = s.union(&set_from_bits(&g, b));
        prop_assert!(s.is_subset(&t));
        if g.is_mixed_dominating_set(&s) {
            prop_assert!(g.is_mixed_dominating_set(&t));
        }
    }

    #[test]
    fn vertex_cover_bounds_gamma_without_isolated_vertices(g in arb_graph(7)) {
        let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count() as u32;
        let gamma = brute_force(&g, false).unwrap().gamma;
        // A vertex cover plus every isolated vertex dominates everything.
        prop_assert!(gamma <= min_vertex_cover(&g) + isolated);
        prop_assert!(gamma >= isolated);
    }

    #[test]
    fn gr_round_trip(g in arb_graph(10)) {
        prop_assert_eq!(parse_gr(&write_gr(&g)).unwrap(), g);
    }
}

#[test]
fn sample_graph_has_exactly_two_minimum_sets() {
    let g = sample_graph();
    let oracle = brute_force(&g, true).unwrap();
    assert_eq!(oracle.gamma, 2);
    let described: Vec<_> = oracle.min_sets.iter().map(|s| g.split(s)).collect();
    // Vertex 4 with edge {1,2} or with edge {2,3}, 1-based.
    let mut want = vec![(vec![3], vec![g.edge_id(0, 1).unwrap()]), (vec![3], vec![g.edge_id(1, 2).unwrap()])];
    want.sort();
    let mut got = described.clone();
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn oracle_refuses_large_graphs() {
    let edges: Vec<_> = (0..9).flat_map(|u| (u + 1..9).map(move |v| (u, v))).collect();
    let g = Graph::new(9, &edges).unwrap();
    assert!(matches!(brute_force(&g, false), Err(mixdom::Error::OracleTooLarge { got: 45, .. })));
}
