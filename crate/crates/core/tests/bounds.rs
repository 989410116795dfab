mod common;

use common::*;
use mixdim::bounds::{self, bounds_report, edge_side_sets};
use mixdim::enumerate::connected_graphs_of_order;
use mixdim::{DistanceOracle, FamilySpec, Graph};

fn corpus() -> Vec<Graph> {
    let mut gs: Vec<Graph> = (2..=5).flat_map(|k| connected_graphs_of_order(k).unwrap()).collect();
    gs.extend(random_corpus());
    gs
}

fn twin_oracle(g: &Graph) -> usize {
    let n = g.order();
    let nb = |v: usize| (0..n).filter(|&u| g.has_edge(u, v)).collect::<Vec<_>>();
    let closed = |v: usize| {
        let mut s = nb(v);
        s.push(v);
        s.sort();
        s
    };
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let simplicial = nb(v).iter().all(|&a| nb(v).iter().all(|&b| a == b || g.has_edge(a, b)));
        let twin = (0..n).any(|u| u != v && closed(u) == closed(v));
        if simplicial || twin {
            sets.push(vec![v]);
        }
        for u in v + 1..n {
            if nb(u) == nb(v) && closed(u) != closed(v) {
                sets.push(vec![v, u]);
            }
        }
    }
    brute_hitting_set(n, &sets).unwrap().0
}

#[test]
fn bounds_match_oracles() {
    for g in corpus() {
        let d = floyd_warshall(&g);
        let r = bounds_report(&g, false).unwrap();
        let max_deg = (0..g.order()).map(|v| g.degree(v)).max().unwrap();
        let min_deg = (0..g.order()).map(|v| g.degree(v)).min().unwrap();
        assert_eq!(r.l1, ceil_log2(max_deg));
        assert_eq!(r.l2, 1 + ceil_log2(min_deg));
        assert_eq!(r.n1, 1 + ceil_log2(min_deg + 1));
        assert_eq!(r.l3, twin_oracle(&g), "L3 of {g:?}");

        let sides: Vec<Vec<usize>> = side_sets(&g, &d).into_iter().flat_map(|(a, b)| [a, b]).collect();
        assert_eq!(r.n2, brute_hitting_set(g.order(), &sides).unwrap().0, "N2 of {g:?}");
        assert!(sides.iter().all(|s| s.iter().any(|&v| r.n2_witness.contains(v))));

        let items = g.order() + g.size();
        let diam = diameter(&d);
        let rhs = |k: usize| diam.pow(k as u32) + k * (max_deg + 1);
        assert!(items <= rhs(r.n3));
        assert!(r.n3 == 1 || items > rhs(r.n3 - 1));
    }
}

#[test]
fn lp_bound_matches_vertex_enumeration() {
    let gs = (2..=5).flat_map(|k| connected_graphs_of_order(k).unwrap());
    for g in gs {
        let oracle = lp_vertex_enumeration(g.order(), &mixed_pair_sets(&g));
        let got = bounds::l4_relaxation(&g).unwrap();
        assert!((got - oracle).abs() < 1e-7, "{g:?}: {got} vs {oracle}");
        assert_eq!(bounds::lb_l4(&g).unwrap(), (oracle - 1e-6).ceil() as usize);
    }
}

#[test]
fn side_set_invariants() {
    for g in corpus() {
        let o = DistanceOracle::new(&g).unwrap();
        for s in edge_side_sets(&o) {
            let (u, v) = s.edge;
            assert!(s.less.contains(u) && s.greater.contains(v));
            assert!(!s.less.intersects(s.greater));
        }
    }
}

#[test]
fn bounds_below_mixed_dimension() {
    for g in corpus() {
        let r = bounds_report(&g, true).unwrap();
        let bm = r.exact.unwrap().beta_m.value;
        assert!(r.values().iter().all(|&b| b <= bm), "{g:?}: {:?} vs {bm}", r.values());
        assert!(r.violations().is_empty());
        assert!(r.n1 >= r.l2);
    }
}

#[test]
fn published_spot_values() {
    let report = |s: &str| bounds_report(&s.parse::<FamilySpec>().unwrap().generate().unwrap(), true).unwrap();
    let r = report("gen_petersen:8,3");
    assert_eq!(r.values(), [2, 3, 0, 2, 3, 3, 3]);
    assert_eq!(r.exact.unwrap().beta_m.value, 4);
    let r = report("hypercube:5");
    assert_eq!((r.n1, r.n2, r.n3, r.l4), (4, 2, 3, 2));
    assert_eq!(r.exact.unwrap().beta_m.value, 4);
    let r = report("paley:13");
    assert_eq!(r.values(), [3, 4, 0, 4, 4, 5, 5]);
    assert_eq!(r.exact.unwrap().beta_m.value, 6);
    let r = report("hamming:3,3");
    assert_eq!((r.n1, r.n3), (4, 4));
    assert_eq!(r.exact.unwrap().beta_m.value, 6);
}
