mod common;

use common::{brute_hitting_set, lp_vertex_enumeration};
use mixdim::cover::{greedy_hitting_set, min_hitting_set, CoverInstance};
use mixdim::lp::{solve_covering_lp, CoveringLp, LP_TOLERANCE};
use mixdim::VertexSet;
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..=12).prop_flat_map(|n| {
        let set = proptest::collection::btree_set(0..n, 1..=n.min(5)).prop_map(|s| s.into_iter().collect());
        (Just(n), proptest::collection::vec(set, 0..14))
    })
}

fn to_sets(sets: &[Vec<usize>]) -> Vec<VertexSet> {
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_matches_enumeration((n, sets) in instance()) {
        let inst = CoverInstance::new(n, to_sets(&sets)).unwrap();
        let got = min_hitting_set(&inst, None).unwrap().optimal().unwrap();
        let (k, first) = brute_hitting_set(n, &sets).unwrap();
        prop_assert_eq!(got.size(), k);
        prop_assert_eq!(got.elements.to_vec(), first);
        prop_assert!(greedy_hitting_set(&inst).unwrap().size() >= k);
    }

    #[test]
    fn forced_and_excluded((n, sets) in instance(), f in any::<u16>(), x in any::<u16>()) {
        let mask = (1u64 << n) - 1;
        let forced = VertexSet(f as u64 & mask);
        let excluded = VertexSet(x as u64 & mask & !forced.0);
        let inst = CoverInstance::new(n, to_sets(&sets)).unwrap().with_forced(forced).unwrap().with_excluded(excluded).unwrap();
        // forced elements as singleton sets, excluded elements removed
        let mut oracle_sets: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| s.iter().copied().filter(|v| !excluded.contains(*v)).collect())
            .collect();
        oracle_sets.extend(forced.iter().map(|v| vec![v]));
        match (min_hitting_set(&inst, None), brute_hitting_set(n, &oracle_sets)) {
            (Ok(v), Some((k, _))) => prop_assert_eq!(v.optimal().unwrap().size(), k),
            (Err(_), None) => {}
            (a, b) => prop_assert!(false, "solver {:?} vs oracle {:?}", a, b),
        }
    }

    #[test]
    fn cutoff_reports_above((n, sets) in instance(), c in 0usize..6) {
        let inst = CoverInstance::new(n, to_sets(&sets)).unwrap();
        let (k, _) = brute_hitting_set(n, &sets).unwrap();
        let v = min_hitting_set(&inst, Some(c)).unwrap();
        prop_assert_eq!(v.optimal().is_some(), k <= c);
    }

    #[test]
    fn lp_at_most_integer((n, sets) in instance()) {
        prop_assume!(!sets.is_empty());
        let lp = solve_covering_lp(&CoveringLp::new(n, to_sets(&sets)).unwrap()).unwrap();
        let (k, _) = brute_hitting_set(n, &sets).unwrap();
        prop_assert!(lp.value <= k as f64 + LP_TOLERANCE);
        for s in &sets {
            prop_assert!(s.iter().map(|&v| lp.y[v]).sum::<f64>() >= 1.0 - LP_TOLERANCE);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lp_matches_vertex_enumeration(
        (n, sets) in (1usize..=5).prop_flat_map(|n| {
            let set = proptest::collection::btree_set(0..n, 1..=n).prop_map(|s| s.into_iter().collect::<Vec<_>>());
            (Just(n), proptest::collection::vec(set, 1..8))
        })
    ) {
        let got = solve_covering_lp(&CoveringLp::unreduced(n, to_sets(&sets)).unwrap()).unwrap();
        let oracle = lp_vertex_enumeration(n, &sets);
        prop_assert!((got.value - oracle).abs() < 1e-7, "{} vs {}", got.value, oracle);
    }
}
