//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency string (graph6 bit order, `0 < 1`) over all
//! vertex permutations. Strings are held as integers, first bit most
//! significant, so integer order equals string order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Canonical adjacency string of `g` and the relabeling attaining it.
/// `perm[p]` is the original vertex placed at position `p`.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.order();
    assert!(n <= 11, "canonical form limited to 11 vertices");
    let total = n * n.saturating_sub(1) / 2;
    let mut search = CanonSearch {
        g,
        n,
        total,
        best: None,
        best_perm: (0..n).collect(),
        perm: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.place(0);
    (search.best.unwrap_or(0), search.best_perm)
}

/// Canonical adjacency string only.
pub fn canonical_string(g: &Graph) -> u64 {
    canonical_form(g).0
}

/// Rebuilds the graph whose graph6-order adjacency string is `code`.
pub fn graph_from_string(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("decoded adjacency is a valid graph")
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    best: Option<u64>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl CanonSearch<'_> {
    // `prefix` holds the bits of columns 1..perm.len()
    fn place(&mut self, prefix: u64) {
        let placed = self.perm.len();
        if placed == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut next = prefix;
            for &u in &self.perm {
                next = next << 1 | self.g.has_edge(u, v) as u64;
            }
            let len = (placed + 1) * placed / 2;
            if let Some(best) = self.best {
                let best_prefix = best >> (self.total - len);
                if next > best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            self.place(next);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical strings of all graphs (connected or not) on `k` vertices.
fn all_canonical(k: usize) -> BTreeSet<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=k {
        let prev = order - 1;
        let parents: Vec<u64> = level.into_iter().collect();
        level = parents
            .par_iter()
            .flat_map_iter(|&code| {
                let base = graph_from_string(prev, code);
                (0u64..1 << prev).map(move |nbrs| {
                    let edges = base
                        .edges()
                        .iter()
                        .copied()
                        .chain((0..prev).filter(|&i| nbrs >> i & 1 == 1).map(|i| (i, prev)));
                    let g = Graph::new(order, edges).expect("extension is valid");
                    canonical_string(&g)
                })
            })
            .collect();
    }
    level
}

/// One canonical representative per isomorphism class of connected graphs
/// on `k` vertices, sorted by (edge count, canonical string).
pub fn connected_graphs_of_order(k: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&k) {
        return Err(Error::invalid(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {k}"
        )));
    }
    let mut reps: Vec<(usize, u64, Graph)> = all_canonical(k)
        .into_iter()
        .map(|code| graph_from_string(k, code))
        .filter(Graph::is_connected)
        .map(|g| (g.size(), canonical_string(&g), g))
        .collect();
    reps.sort_by_key(|(m, code, _)| (*m, *code));
    Ok(reps.into_iter().map(|(_, _, g)| g).collect())
}
