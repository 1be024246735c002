mod common;

use capcol::capital::{colour5, validate_capital, ListAssignment};
use capcol::exact::{capital_list_colouring, chi_capital, probe_choosability, random_lists, ExactError, ProbeOutcome, SolveBudget};
use capcol::generators;
use capcol::plane_graph::PlaneGraph;
use proptest::prelude::*;

fn small_graph(seed: u64, splits: usize, extra: usize) -> PlaneGraph {
    common::with_parallel_edges(&common::random_connected(seed, splits), seed, extra)
}

/// Every colouring from the lists, by odometer.
fn brute_list_colourable(g: &PlaneGraph, lists: &ListAssignment) -> bool {
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let col: Vec<u32> = (0..n).map(|v| lists.list(v)[idx[v]]).collect();
        if common::naive_is_capital(g, &col) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists.list(i).len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn validator_agrees_with_naive(seed in 0u64..10_000, splits in 0usize..3, extra in 0usize..3, palette in 1u32..5) {
        let g = small_graph(seed, splits, extra);
        let n = g.vertex_count();
        common::any_colouring(n, palette, |col| {
            assert_eq!(validate_capital(&g, col).is_valid(), common::naive_is_capital(&g, col), "{col:?}");
            false
        });
    }

    #[test]
    fn chi_matches_brute_force(seed in 0u64..10_000, splits in 0usize..4, extra in 0usize..3) {
        let g = small_graph(seed, splits, extra);
        let chi = chi_capital(&g, SolveBudget::default()).unwrap();
        prop_assert_eq!(chi, common::brute_chi_capital(&g));
        prop_assert!(chi >= common::brute_chromatic(&g));
    }

    #[test]
    fn list_search_matches_enumeration(seed in 0u64..10_000, splits in 0usize..4, extra in 0usize..3, k in 1u32..4, m in 3u32..6) {
        let g = small_graph(seed, splits, extra);
        let lists = random_lists(g.vertex_count(), k, m, seed).unwrap();
        let found = capital_list_colouring(&g, &lists, SolveBudget::default()).unwrap();
        prop_assert_eq!(found.is_some(), brute_list_colourable(&g, &lists));
        if let Some(col) = found {
            prop_assert!(common::naive_is_capital(&g, &col));
            prop_assert!((0..g.vertex_count()).all(|v| lists.list(v).contains(&col[v])));
        }
    }

    #[test]
    fn colour5_is_capital(seed in 0u64..10_000, splits in 0usize..20, extra in 0usize..6) {
        let g = small_graph(seed, splits, extra);
        let col = colour5(&g).unwrap();
        prop_assert!(col.iter().all(|&c| (1..=5).contains(&c)));
        prop_assert!(common::naive_is_capital(&g, &col));
    }
}

#[test]
fn chi_on_named_small_graphs() {
    for (name, g) in common::small_family_graphs() {
        if g.vertex_count() > 8 {
            continue;
        }
        let chi = chi_capital(&g, SolveBudget::default()).unwrap();
        assert_eq!(chi, common::brute_chi_capital(&g), "{name}");
    }
}

#[test]
fn small_known_values() {
    let k1 = PlaneGraph::edgeless(1);
    let k2 = generators::grid(1, 2).unwrap();
    let c4 = generators::cycle(4).unwrap();
    assert_eq!(chi_capital(&k1, SolveBudget::default()).unwrap(), 1);
    assert_eq!(chi_capital(&k2, SolveBudget::default()).unwrap(), 2);
    assert_eq!(chi_capital(&c4, SolveBudget::default()).unwrap(), 3);

    let two = ListAssignment::uniform(2, 2);
    let col = capital_list_colouring(&k2, &two, SolveBudget::default()).unwrap().unwrap();
    assert!(col == vec![1, 2] || col == vec![2, 1]);
    assert_eq!(capital_list_colouring(&c4, &ListAssignment::uniform(4, 2), SolveBudget::default()).unwrap(), None);

    assert!(matches!(probe_choosability(&k2, 2, 3, SolveBudget::default()).unwrap(), ProbeOutcome::AllSatisfied { .. }));
    for m in 1..=4 {
        assert!(matches!(probe_choosability(&k1, 1, m, SolveBudget::default()).unwrap(), ProbeOutcome::AllSatisfied { .. }));
    }
}

#[test]
fn budget_exhaustion_is_not_absence() {
    let g = generators::icosahedron().unwrap();
    let r = capital_list_colouring(&g, &ListAssignment::uniform(12, 3), SolveBudget::nodes(10));
    assert!(matches!(r, Err(ExactError::BudgetExceeded { .. })));
}

/// Every assignment of k-subsets, without the relabelling shortcut.
fn brute_choosable(g: &PlaneGraph, k: u32, m: u32) -> bool {
    let subsets: Vec<Vec<u32>> = (0u32..1 << m)
        .filter(|b| b.count_ones() == k)
        .map(|b| (1..=m).filter(|c| b & (1 << (c - 1)) != 0).collect())
        .collect();
    let n = g.vertex_count();
    let mut idx = vec![0usize; n];
    loop {
        let lists = ListAssignment::new(idx.iter().map(|&i| subsets[i].clone()).collect()).unwrap();
        if !brute_list_colourable(g, &lists) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            idx[i] += 1;
            if idx[i] < subsets.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn choosability_probe_matches_full_enumeration() {
    let graphs = [
        generators::grid(1, 2).unwrap(),
        generators::grid(1, 3).unwrap(),
        generators::cycle(3).unwrap(),
        generators::cycle(4).unwrap(),
    ];
    for g in &graphs {
        for (k, m) in [(1, 2), (2, 2), (2, 3), (2, 4), (3, 4)] {
            let probe = probe_choosability(g, k, m, SolveBudget::default()).unwrap();
            let all = matches!(probe, ProbeOutcome::AllSatisfied { .. });
            assert_eq!(all, brute_choosable(g, k, m), "n={} k={k} m={m}", g.vertex_count());
            if let ProbeOutcome::Counterexample { lists } = probe {
                let lists = ListAssignment::new(lists).unwrap();
                assert!(!brute_list_colourable(g, &lists));
            }
        }
    }
}
