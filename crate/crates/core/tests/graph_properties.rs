mod common;

use diter_core::graph::{parse_edge_list, write_text};
use diter_core::{
    build_graph, compute_stats, read_binary, transpose, write_binary, zero_in_degree_closure, EdgeList, NodeId,
};
use proptest::prelude::*;

fn edge_list() -> impl Strategy<Value = EdgeList> {
    (1usize..60, 0usize..10).prop_flat_map(|(n, extra)| {
        prop::collection::vec((0..n as NodeId, 0..n as NodeId), 0..4 * n)
            .prop_map(move |edges| EdgeList::with_declared_n(edges, n + extra).unwrap())
    })
}

proptest! {
    #[test]
    fn binary_round_trip(e in edge_list()) {
        prop_assert_eq!(read_binary(&write_binary(&e)).unwrap(), e);
    }

    #[test]
    fn text_round_trip(e in edge_list()) {
        let mut buf = Vec::new();
        write_text(&e, &mut buf).unwrap();
        prop_assert_eq!(parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap(), e);
    }

    #[test]
    fn degrees_are_consistent(e in edge_list(), limit in proptest::option::of(0usize..70)) {
        let g = build_graph(&e, limit);
        let out: usize = g.out_degrees().sum();
        let inc: usize = g.in_degrees().sum();
        prop_assert_eq!(out, g.link_count());
        prop_assert_eq!(inc, g.link_count());
        for i in 0..g.node_count() {
            prop_assert_eq!(g.is_dangling(i), g.out_degree(i) == 0);
            prop_assert_eq!(g.has_self_loop(i), g.out_neighbors(i).contains(&(i as NodeId)));
            // Multiplicity of i -> j equals multiplicity of j <- i.
            for &j in g.out_neighbors(i) {
                let fwd = g.out_neighbors(i).iter().filter(|&&k| k == j).count();
                let back = g.in_neighbors(j as usize).iter().filter(|&&k| k as usize == i).count();
                prop_assert_eq!(fwd, back);
            }
        }
    }

    #[test]
    fn truncation_is_an_induced_subgraph(e in edge_list(), limit in 0usize..70) {
        let g = build_graph(&e, Some(limit));
        let expected: Vec<(NodeId, NodeId)> = {
            let mut v: Vec<_> = e.edges().iter().copied()
                .filter(|&(s, t)| (s as usize) < limit && (t as usize) < limit)
                .collect();
            v.sort_by_key(|&(s, _)| s);
            v
        };
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn transpose_is_an_involution(e in edge_list()) {
        let g = build_graph(&e, None);
        prop_assert_eq!(transpose(&transpose(&g)), g.clone());
        prop_assert_eq!(transpose(&g), build_graph(&e.reversed(), None));
    }

    #[test]
    fn transpose_stat_duality(e in edge_list()) {
        let g = build_graph(&e, None);
        let s = compute_stats(&g);
        let t = compute_stats(&transpose(&g));
        prop_assert_eq!(s.max_in, t.max_out);
        prop_assert_eq!(s.max_out, t.max_in);
        prop_assert_eq!(s.o_count, t.o_count);
        prop_assert_eq!(s.l, t.l);
    }

    #[test]
    fn closure_matches_brute_force(e in edge_list()) {
        let g = build_graph(&e, None);
        let fast = zero_in_degree_closure(&g);
        let slow = common::brute_force_closure(&g);
        let members: Vec<usize> = fast.members().iter().map(|&i| i as usize).collect();
        prop_assert_eq!(members, slow.into_iter().collect::<Vec<_>>());
        for &i in fast.members() {
            for &j in g.in_neighbors(i as usize) {
                prop_assert!(fast.contains(j as usize));
                prop_assert!(fast.depth(j as usize) < fast.depth(i as usize));
            }
        }
    }
}

#[test]
fn stats_e_count_agrees_with_closure() {
    for c in common::corpus(50, 11) {
        assert_eq!(compute_stats(&c.graph).e_count, zero_in_degree_closure(&c.graph).len());
    }
}
