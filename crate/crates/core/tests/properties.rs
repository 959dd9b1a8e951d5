//! Property tests for the structural invariants that hold across the whole
//! input space rather than on named examples.

use proptest::prelude::*;

use srclab::coloring::{is_strongly_rainbow_connected, EdgeColoring};
use srclab::graph::{emit_graph6, parse_graph6, Graph};
use srclab::solver::{rc_exact, src_exact};
use srclab::structure::{d2_tree, gbar_triangle_count, line_graph, star_cliques};

/// Arbitrary graph on up to `n_max` vertices from an edge-presence bitmask.
fn arb_graph(n_max: usize) -> impl Strategy<Value = Graph> {
    (2..=n_max, any::<u64>()).prop_map(|(n, mask)| {
        let mut pairs = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> (bit % 64) & 1 == 1 {
                    pairs.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    })
}

/// Connected variant: joins a random spanning path first.
fn arb_connected_graph(n_max: usize) -> impl Strategy<Value = Graph> {
    (2..=n_max, any::<u64>()).prop_map(|(n, mask)| {
        let mut pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 2)..n {
                if mask >> (bit % 64) & 1 == 1 {
                    pairs.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in arb_graph(10)) {
        let encoded = emit_graph6(&g).unwrap();
        let back = parse_graph6(&encoded).unwrap();
        let mut want = g.edges().to_vec();
        want.sort_unstable();
        prop_assert_eq!(back.edges().to_vec(), want);
        prop_assert_eq!(emit_graph6(&back).unwrap(), encoded);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        g in arb_graph(7),
        seed in any::<u64>(),
    ) {
        let n = g.vertex_count();
        // Fisher-Yates off a simple LCG so the permutation is reproducible
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let pairs: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edge_list(n, &pairs).unwrap();
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
    }

    #[test]
    fn sandwich_holds_on_small_connected_graphs(g in arb_connected_graph(5)) {
        let src = src_exact(&g, None).unwrap().value;
        let rc = rc_exact(&g, None).unwrap().value;
        let diam = g.diameter().unwrap();
        prop_assert!(diam <= rc);
        prop_assert!(rc <= src);
        prop_assert!(src <= g.edge_count());
    }

    #[test]
    fn splitting_a_class_preserves_strong_rainbow(
        g in arb_connected_graph(6),
        edge_pick in any::<u32>(),
    ) {
        let cert = src_exact(&g, None).unwrap().certificate;
        prop_assert!(is_strongly_rainbow_connected(&g, &cert).unwrap().ok);
        let e = edge_pick as usize % g.edge_count();
        let mut split = cert.colors().to_vec();
        split[e] = u32::MAX; // a label used nowhere else
        let refined = EdgeColoring::new(split);
        prop_assert!(is_strongly_rainbow_connected(&g, &refined).unwrap().ok);
    }

    #[test]
    fn geodesic_dag_chains_have_exact_length(g in arb_connected_graph(7)) {
        for s in 0..g.vertex_count() {
            let dag = g.shortest_path_dag(s).unwrap();
            for v in 0..g.vertex_count() {
                let d = dag.dist[v].unwrap();
                // walk any maximal descending chain
                let mut cur = v;
                let mut steps = 0;
                while cur != s {
                    cur = dag.parents[cur][0];
                    steps += 1;
                }
                prop_assert_eq!(steps, d);
            }
        }
    }

    #[test]
    fn block_edge_sets_partition_edges(g in arb_connected_graph(7)) {
        let b = g.blocks().unwrap();
        let mut all: Vec<usize> = b.blocks.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn star_cliques_partition_line_graph_edges(g in arb_graph(7)) {
        let l = line_graph(&g);
        let cliques = star_cliques(&g);
        for &(a, b) in l.edges() {
            let containing = cliques.iter().filter(|c| c.contains(&a) && c.contains(&b)).count();
            prop_assert_eq!(containing, 1);
        }
        for v in 0..l.vertex_count() {
            prop_assert!(cliques.iter().filter(|c| c.contains(&v)).count() <= 2);
        }
    }

    #[test]
    fn d2_trees_are_trees_with_expected_size(g in arb_connected_graph(8)) {
        if let Some(t) = gbar_triangle_count(&g) {
            if t >= 1 {
                let tree = d2_tree(&g).unwrap();
                prop_assert!(tree.is_connected());
                prop_assert!(tree.girth().is_none());
                prop_assert_eq!(tree.edge_count(), g.edge_count() - 2 * t);
            }
        }
    }
}
