//! Library results against naive enumeration.

use ordram::analysis::interval_chromatic_number;
use ordram::coloring::{Color, EdgeColoring};
use ordram::containment::{find_embedding, Demand};
use ordram::graph::OrderedGraph;
use ordram::scheme::{build_scheme, SchemeSpec};
use ordram::solver::{
    exists_avoiding, pattern_matrix, turan_bipartite, BinaryMatrix, Budget, Engine, SearchOutcome,
};
use proptest::prelude::*;

mod common;
use common::*;

const CASES: u32 = 10_000;

fn graph(max_n: usize) -> impl Strategy<Value = OrderedGraph> {
    (1..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        // thin the random mask so sparse and dense graphs both show up
        let mut mask = 0u64;
        let mut state = seed;
        for k in 0..pairs(n).len() {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            if ((state >> 33) as f64 / (1u64 << 31) as f64) < density {
                mask |= 1 << k;
            }
        }
        graph_from_mask(n, mask)
    })
}

fn matrix(max: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(0u32..1 << cols, rows).prop_map(move |data| BinaryMatrix {
            rows,
            cols,
            data,
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn containment_matches_enumeration(host in graph(8), pattern in graph(5)) {
        let got = find_embedding(&host, &pattern).map(|e| e.images().to_vec());
        prop_assert_eq!(got, naive_embedding(&host, &pattern));
    }

    #[test]
    fn exists_avoiding_matches_enumeration(
        colors in 1usize..=3,
        n_raw in 1usize..=6,
        patterns in proptest::collection::vec(graph(4), 3),
        engine_branch in any::<bool>(),
    ) {
        // three colors stay at N <= 4 so enumeration is 3^6 colorings at most
        let n = if colors == 3 { n_raw.min(4) } else { n_raw };
        let demands: Vec<(OrderedGraph, Color)> = patterns
            .into_iter()
            .take(colors)
            .enumerate()
            .map(|(k, p)| (p, k + 1))
            .collect();
        let typed: Vec<Demand> = demands
            .iter()
            .map(|(p, c)| Demand::new(p.clone(), *c))
            .collect();
        let engine = if engine_branch { Engine::Branch } else { Engine::Auto };
        let report = exists_avoiding(&typed, n, &Budget::unlimited().with_engine(engine)).unwrap();
        let expected = naive_avoiding(&demands, colors, n);
        match report.outcome {
            SearchOutcome::Found(coloring) => {
                prop_assert!(expected);
                prop_assert_eq!(coloring.n(), n);
                for (p, c) in &demands {
                    let class = coloring.color_class(*c).unwrap();
                    prop_assert!(naive_embedding(&class, p).is_none());
                }
            }
            SearchOutcome::NoneExists => prop_assert!(!expected),
            SearchOutcome::BudgetExhausted => prop_assert!(false, "unlimited budget ran out"),
        }
    }

    #[test]
    fn symmetric_demands_match_enumeration(
        colors in 2usize..=3,
        n_raw in 1usize..=6,
        pattern in graph(4),
    ) {
        // the solver fixes the first edge's color when demands are symmetric
        let n = if colors == 3 { n_raw.min(4) } else { n_raw };
        let demands: Vec<(OrderedGraph, Color)> =
            (1..=colors).map(|c| (pattern.clone(), c)).collect();
        let typed: Vec<Demand> = demands
            .iter()
            .map(|(p, c)| Demand::new(p.clone(), *c))
            .collect();
        let report = exists_avoiding(&typed, n, &Budget::unlimited()).unwrap();
        let found = matches!(report.outcome, SearchOutcome::Found(_));
        prop_assert_eq!(found, naive_avoiding(&demands, colors, n));
    }

    #[test]
    fn interval_chromatic_matches_partitions(g in graph(10)) {
        prop_assert_eq!(interval_chromatic_number(&g), naive_interval_chromatic(&g));
    }

    #[test]
    fn matrix_containment_matches_enumeration(host in matrix(5), pattern in matrix(3)) {
        prop_assert_eq!(host.contains(&pattern), naive_matrix_contains(&host, &pattern));
    }
}

#[test]
fn alternating_path_matrices_are_minimalist() {
    let mut checked = 0;
    for len in 2..=8 {
        let p = build_scheme(&SchemeSpec::AlternatingPath(len)).unwrap();
        let mat = pattern_matrix(&p).unwrap();
        let (r, s) = (mat.rows, mat.cols);
        assert_eq!((r, s), (len.div_ceil(2), len / 2));
        for m in 1..=4 {
            for n in 1..=4 {
                assert_eq!(
                    turan_bipartite(&p, m, n).unwrap(),
                    minimalist_value(r, s, m, n),
                    "alt path {len} in {m}x{n}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 7 * 16);
}

#[test]
fn naive_oracles_sanity() {
    let k3 = build_scheme(&SchemeSpec::Complete(3)).unwrap();
    assert!(naive_avoiding(&[(k3.clone(), 1), (k3.clone(), 2)], 2, 5));
    assert!(!naive_avoiding(&[(k3.clone(), 1), (k3, 2)], 2, 6));
    let alt = build_scheme(&SchemeSpec::AlternatingPath(5)).unwrap();
    assert_eq!(naive_interval_chromatic(&alt), 2);
    let host = EdgeColoring::uniform(4, 2, 1)
        .unwrap()
        .color_class(1)
        .unwrap();
    assert_eq!(naive_embedding(&host, &alt), None);
}
