mod common;

use proptest::prelude::*;

use common::{brute_counts, net, End};
use ohgraph::io::{parse_instance, parse_matrix, parse_theta, serialize_instance, serialize_matrix, serialize_theta, MatrixFormat};
use ohgraph::random::{random_instance, random_switching, rng_from_seed, RandomParams};
use ohgraph::{adjacency_matrix, incidence_matrix, laplacian, AnchorKind, OrientedHypergraph, OrientedSignedGraph, WalkEngine};

fn instance(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = OrientedHypergraph> {
    (any::<u64>(), 1..=max_vertices, 0..=max_edges, 1usize..=4, any::<bool>(), 0.0..0.6f64).prop_map(
        |(seed, n, m, size, simple, rate)| {
            let params = RandomParams {
                n_vertices: n,
                n_edges: m,
                max_edge_size: if simple { size.min(n) } else { size },
                simple,
                non_simple_rate: rate,
            };
            random_instance(seed, &params).unwrap()
        },
    )
}

fn end(kind: AnchorKind, i: usize) -> End {
    match kind {
        AnchorKind::Vertex => End::V(i),
        AnchorKind::Edge => End::E(i),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_matches_exhaustive_scan(g in instance(4, 3), n in 0usize..=4, weak in any::<bool>()) {
        let engine = WalkEngine::new(&g);
        for (rows, cols) in [
            (AnchorKind::Vertex, AnchorKind::Vertex),
            (AnchorKind::Vertex, AnchorKind::Edge),
            (AnchorKind::Edge, AnchorKind::Vertex),
            (AnchorKind::Edge, AnchorKind::Edge),
        ] {
            if (rows == cols) != (n % 2 == 0) {
                prop_assert!(engine.count_table(rows, cols, n, weak).is_err());
                continue;
            }
            let table = engine.count_table(rows, cols, n, weak).unwrap();
            for (i, row) in table.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    let (total, pos, neg) = brute_counts(&g, end(rows, i), end(cols, j), n, weak);
                    prop_assert_eq!((c.total, c.positive, c.negative), (total, pos, neg));
                    prop_assert_eq!(c.signed_net, net((total, pos, neg)));
                }
            }
        }
    }

    #[test]
    fn dual_is_involution(g in instance(8, 8)) {
        let dual = g.incidence_dual();
        prop_assert_eq!(dual.degrees(), g.edge_sizes());
        prop_assert_eq!(dual.incidence_dual(), g);
    }

    #[test]
    fn switching_twice_restores(g in instance(8, 8), seed in any::<u64>()) {
        let theta = random_switching(&mut rng_from_seed(seed), g.vertices());
        let once = g.switch(&theta).unwrap();
        prop_assert_eq!(adjacency_matrix(&once).is_symmetric(), true);
        prop_assert_eq!(once.degrees(), g.degrees());
        prop_assert!(laplacian(&once).is_symmetric());
        prop_assert_eq!(once.switch(&theta).unwrap(), g);
    }

    #[test]
    fn instance_text_round_trips(g in instance(8, 8)) {
        let text = serialize_instance(&g);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(serialize_instance(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn matrix_and_theta_round_trip(g in instance(6, 6), seed in any::<u64>()) {
        let h = incidence_matrix(&g);
        for format in [MatrixFormat::Csv, MatrixFormat::Json] {
            prop_assert_eq!(parse_matrix(&serialize_matrix(&h, format), format).unwrap(), h.clone());
        }
        let theta = random_switching(&mut rng_from_seed(seed), g.vertices());
        prop_assert_eq!(parse_theta(&serialize_theta(&theta)).unwrap(), theta);
    }

    #[test]
    fn even_vertex_walk_matrices_are_symmetric(g in instance(5, 4), k in 0usize..=3) {
        let engine = WalkEngine::new(&g);
        prop_assert!(engine.walk_matrix(AnchorKind::Vertex, AnchorKind::Vertex, 2 * k).unwrap().is_symmetric());
        prop_assert!(engine.weak_walk_matrix(AnchorKind::Edge, AnchorKind::Edge, 2 * k).unwrap().is_symmetric());
    }

    #[test]
    fn two_uniform_round_trip(seed in any::<u64>(), n in 2usize..7, m in 0usize..6) {
        let m = m.min(n * (n - 1) / 2);
        let s = ohgraph::random::random_signed_graph(seed, n, m).unwrap();
        let g = s.to_hypergraph();
        prop_assert!(g.is_k_uniform(2) || m == 0);
        prop_assert_eq!(OrientedSignedGraph::from_hypergraph(&g).unwrap(), s.clone());
        prop_assert!(ohgraph::signed_graph_identities(&s).unwrap().is_empty());
    }
}

#[test]
fn cross_walk_reversal_is_not_symmetric() {
    // v1 -> e1 may turn back at v2 through the incidence it arrived on; the
    // reversed sequence would pair those two incidences, which is forbidden.
    let g = common::two_vertex_edge();
    let engine = WalkEngine::new(&g);
    assert_eq!(engine.walk_counts("v1", "e1", 3, false).unwrap().signed_net, -1);
    assert_eq!(engine.walk_counts("e1", "v1", 3, false).unwrap().total, 0);
    assert_eq!(brute_counts(&g, End::V(0), End::E(0), 3, false), (1, 0, 1));
    assert_eq!(brute_counts(&g, End::E(0), End::V(0), 3, false), (0, 0, 0));
}
