//! Brute-force oracles shared by the integration tests. They avoid the
//! library's solvers and distance code entirely.

#![allow(dead_code)]

use std::collections::HashSet;

use mixdim::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX / 4;

/// Five vertices, seven edges: true twins 1, 2 joined to each of 0, 3, 4.
pub fn small_graph() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Items {
    Vertices,
    Edges,
    Mixed,
}

/// Distance rows: `rows[w][i]` is the distance from vertex `w` to item `i`.
pub fn item_rows(g: &Graph, d: &[Vec<u32>], items: Items) -> Vec<Vec<u32>> {
    (0..g.order())
        .map(|w| {
            let verts = (0..g.order()).map(|v| d[w][v]);
            let edges = g.edges().iter().map(|&(u, v)| d[w][u].min(d[w][v]));
            match items {
                Items::Vertices => verts.collect(),
                Items::Edges => edges.collect(),
                Items::Mixed => verts.chain(edges).collect(),
            }
        })
        .collect()
}

pub fn resolves(rows: &[Vec<u32>], subset: &[usize]) -> bool {
    let count = rows[0].len();
    let mut seen = HashSet::with_capacity(count);
    (0..count).all(|i| seen.insert(subset.iter().map(|&w| rows[w][i]).collect::<Vec<_>>()))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Smallest nonempty resolving set size, and every resolving set of that size.
pub fn brute_dimension(g: &Graph, items: Items) -> (usize, Vec<Vec<usize>>) {
    let d = floyd_warshall(g);
    let rows = item_rows(g, &d, items);
    for k in 1..=g.order() {
        let bases: Vec<Vec<usize>> = subsets(g.order(), k).into_iter().filter(|s| resolves(&rows, s)).collect();
        if !bases.is_empty() {
            return (k, bases);
        }
    }
    panic!("the full vertex set always resolves a connected graph");
}

/// Exhaustive minimum hitting set; `None` if some set is empty.
pub fn brute_hitting_set(universe: usize, sets: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    if sets.iter().any(Vec::is_empty) {
        return None;
    }
    for k in 0..=universe {
        for s in subsets(universe, k) {
            if sets.iter().all(|set| set.iter().any(|x| s.contains(x))) {
                return Some((k, s));
            }
        }
    }
    None
}

/// Side sets `(less, greater)` of every edge.
pub fn side_sets(g: &Graph, d: &[Vec<u32>]) -> Vec<(Vec<usize>, Vec<usize>)> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let less = (0..g.order()).filter(|&w| d[u][w] < d[v][w]).collect();
            let greater = (0..g.order()).filter(|&w| d[u][w] > d[v][w]).collect();
            (less, greater)
        })
        .collect()
}

/// Distinguisher sets of all mixed item pairs, deduplicated.
pub fn mixed_pair_sets(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd_warshall(g);
    let rows = item_rows(g, &d, Items::Mixed);
    let count = rows[0].len();
    let mut sets = Vec::new();
    for a in 0..count {
        for b in a + 1..count {
            sets.push((0..g.order()).filter(|&w| rows[w][a] != rows[w][b]).collect::<Vec<_>>());
        }
    }
    sets.sort();
    sets.dedup();
    sets
}

pub fn ceil_log2(x: usize) -> usize {
    let mut t = 0;
    while (1usize << t) < x {
        t += 1;
    }
    t
}

pub fn diameter(d: &[Vec<u32>]) -> usize {
    d.iter().flatten().copied().max().unwrap_or(0) as usize
}

/// Min `Σ y` subject to `Σ_{v∈row} y_v ≥ 1`, `0 ≤ y ≤ 1`, by enumerating
/// every vertex of the polytope. Only for a handful of variables.
pub fn lp_vertex_enumeration(num_vars: usize, rows: &[Vec<usize>]) -> f64 {
    let mut rows: Vec<Vec<usize>> = rows.to_vec();
    rows.sort();
    rows.dedup();
    let kept: Vec<Vec<usize>> = rows
        .iter()
        .filter(|r| !rows.iter().any(|o| o != *r && o.iter().all(|x| r.contains(x))))
        .cloned()
        .collect();

    // constraints a·y >= b (or tight equalities at a vertex)
    let mut cons: Vec<(Vec<f64>, f64)> = Vec::new();
    for r in &kept {
        let mut a = vec![0.0; num_vars];
        for &v in r {
            a[v] = 1.0;
        }
        cons.push((a, 1.0));
    }
    for v in 0..num_vars {
        let mut a = vec![0.0; num_vars];
        a[v] = 1.0;
        cons.push((a.clone(), 0.0));
        a[v] = -1.0;
        cons.push((a, -1.0));
    }

    let feasible = |y: &[f64]| {
        cons.iter().all(|(a, b)| a.iter().zip(y).map(|(p, q)| p * q).sum::<f64>() >= b - 1e-9)
    };
    let mut best = f64::INFINITY;
    for pick in subsets(cons.len(), num_vars) {
        let mut m: Vec<Vec<f64>> = pick
            .iter()
            .map(|&i| {
                let mut row = cons[i].0.clone();
                row.push(cons[i].1);
                row
            })
            .collect();
        if let Some(y) = gauss(&mut m, num_vars) {
            if feasible(&y) {
                best = best.min(y.iter().sum());
            }
        }
    }
    best
}

fn gauss(m: &mut [Vec<f64>], n: usize) -> Option<Vec<f64>> {
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                if f != 0.0 {
                    for c in col..=n {
                        m[r][c] -= f * m[col][c];
                    }
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n] / m[i][i]).collect())
}

/// Random connected graph: a random tree plus extra edges with a random
/// density.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.7);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// 50 random connected graphs on 2..=8 vertices, fixed seed.
pub fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d69_7864);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            random_connected(&mut rng, n)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of isomorphism classes of connected graphs on `n` vertices,
/// by minimizing the adjacency bit string over all permutations of every
/// labelled graph.
pub fn brute_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, edges.clone()).unwrap();
        if floyd_warshall(&g).iter().flatten().any(|&x| x == INF) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut adj = vec![false; n * n];
                for &(u, v) in &edges {
                    let (a, b) = (p[u], p[v]);
                    adj[a * n + b] = true;
                    adj[b * n + a] = true;
                }
                pairs.iter().fold(0u64, |acc, &(i, j)| acc << 1 | adj[i * n + j] as u64)
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
