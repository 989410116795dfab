//! Mixed resolving sets of size four for tori `C_m □ C_n`.
//!
//! Vertex `(i, j)` is numbered `i * n + j`. Verification runs BFS on
//! adjacency lists, so it is not bound by the 64-vertex limit of
//! [`Graph`].

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::bounds::lb_n1;
use crate::dims::{self, DimOptions, ItemUniverse};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{Graph, MixedItem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    OddOdd,
    OddEven,
    EvenOdd,
    EvenEven,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::OddOdd => "odd-odd",
            Parity::OddEven => "odd-even",
            Parity::EvenOdd => "even-odd",
            Parity::EvenEven => "even-even",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCase {
    pub m: usize,
    pub n: usize,
    pub parity: Parity,
    pub k: usize,
    pub l: usize,
    /// Candidate set as `(i, j)` coordinates.
    pub coords: [(usize, usize); 4],
}

impl TorusCase {
    pub fn vertices(&self) -> Vec<usize> {
        self.coords.iter().map(|&(i, j)| i * self.n + j).collect()
    }
}

pub fn torus_candidate(m: usize, n: usize) -> Result<TorusCase> {
    if m < 3 || n < 3 {
        return Err(Error::invalid(format!("torus needs m, n >= 3, got {m} x {n}")));
    }
    let (k, l) = (m / 2, n / 2);
    let (parity, coords) = match (m % 2 == 1, n % 2 == 1) {
        (true, true) => (Parity::OddOdd, [(0, 0), (0, l), (1, l + 1), (k + 1, l + 1)]),
        (true, false) => (Parity::OddEven, [(0, 0), (0, l), (1, 0), (k + 1, 1)]),
        (false, true) => (Parity::EvenOdd, [(0, 0), (k, 0), (0, 1), (1, l + 1)]),
        (false, false) => (Parity::EvenEven, [(0, 0), (0, 1), (1, l), (k, 0)]),
    };
    Ok(TorusCase { m, n, parity, k, l, coords })
}

/// Edge list of `C_m □ C_n`, each edge `(a, b)` with `a < b`, sorted.
pub fn torus_edges(m: usize, n: usize) -> Vec<(usize, usize)> {
    let id = |i: usize, j: usize| i * n + j;
    let mut edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..n).flat_map(move |j| [(id(i, j), id((i + 1) % m, j)), (id(i, j), id(i, (j + 1) % n))]))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    Valid,
    /// Two items with equal resolving vectors; vertices are `Vertex(v)`,
    /// edges index into the sorted edge list.
    Collision(MixedItem, MixedItem),
}

impl Resolution {
    pub fn is_valid(&self) -> bool {
        matches!(self, Resolution::Valid)
    }
}

/// Checks that `basis` gives every vertex and edge of the graph a distinct
/// vector of distances. `edges` must be sorted with `u < v` per edge and
/// describe a connected graph.
pub fn verify_mixed_resolving_edges(
    order: usize,
    edges: &[(usize, usize)],
    basis: &[usize],
) -> Result<Resolution> {
    if basis.is_empty() {
        return Err(Error::invalid("basis must be nonempty"));
    }
    if let Some(&w) = basis.iter().find(|&&w| w >= order) {
        return Err(Error::invalid(format!("basis vertex {w} out of range")));
    }
    let mut adj = vec![Vec::new(); order];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let rows: Vec<Vec<u32>> = basis
        .iter()
        .map(|&s| {
            let mut dist = vec![u32::MAX; order];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == u32::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
        .collect();
    if let Some(v) = rows[0].iter().position(|&d| d == u32::MAX) {
        return Err(Error::Disconnected(basis[0], v));
    }

    let items = (0..order)
        .map(|v| (MixedItem::Vertex(v), rows.iter().map(|r| r[v]).collect::<Vec<_>>()))
        .chain(edges.iter().enumerate().map(|(e, &(u, v))| {
            (MixedItem::Edge(e), rows.iter().map(|r| r[u].min(r[v])).collect())
        }));
    let mut seen: HashMap<Vec<u32>, MixedItem> = HashMap::with_capacity(order + edges.len());
    for (item, key) in items {
        if let Some(&prev) = seen.get(&key) {
            return Ok(Resolution::Collision(prev, item));
        }
        seen.insert(key, item);
    }
    Ok(Resolution::Valid)
}

pub fn verify_mixed_resolving(g: &Graph, basis: &[usize]) -> Result<Resolution> {
    verify_mixed_resolving_edges(g.order(), g.edges(), basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusReport {
    pub case: TorusCase,
    pub resolution: Resolution,
    /// Degree lower bound; 4 for every torus.
    pub n1: usize,
    pub exact: Option<usize>,
}

impl TorusReport {
    /// Upper bound from the candidate meets the lower bound, and the exact
    /// value (when computed) agrees.
    pub fn confirms_four(&self) -> bool {
        self.resolution.is_valid() && self.n1 == 4 && self.exact.is_none_or(|b| b == 4)
    }
}

/// Checks the candidate set, the degree bound and optionally the exact
/// mixed dimension (graphs up to 64 vertices).
pub fn torus_theorem_check(m: usize, n: usize, exact: bool) -> Result<TorusReport> {
    let case = torus_candidate(m, n)?;
    let edges = torus_edges(m, n);
    let resolution = verify_mixed_resolving_edges(m * n, &edges, &case.vertices())?;
    let n1 = 1 + crate::bounds::ceil_log2(4 + 1);
    let exact = if exact {
        let g = families::torus(m, n)?;
        debug_assert_eq!(lb_n1(&g), n1);
        Some(dims::dimension(&g, ItemUniverse::Mixed, &DimOptions::default())?.value)
    } else {
        None
    };
    Ok(TorusReport { case, resolution, n1, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidates() {
        let c = torus_candidate(5, 5).unwrap();
        assert_eq!(c.parity, Parity::OddOdd);
        assert_eq!(c.coords, [(0, 0), (0, 2), (1, 3), (3, 3)]);
        assert_eq!(torus_candidate(4, 4).unwrap().coords, [(0, 0), (0, 1), (1, 2), (2, 0)]);
        let c = torus_candidate(4, 5).unwrap();
        assert_eq!(c.parity, Parity::EvenOdd);
        assert_eq!(c.coords, [(0, 0), (2, 0), (0, 1), (1, 3)]);
        assert_eq!(torus_candidate(5, 4).unwrap().parity, Parity::OddEven);
        assert!(torus_candidate(2, 5).is_err());
    }

    #[test]
    fn edges_match_family() {
        for (m, n) in [(3, 3), (3, 4), (4, 6)] {
            let g = families::torus(m, n).unwrap();
            assert_eq!(torus_edges(m, n), g.edges());
        }
        assert_eq!(torus_edges(15, 15).len(), 450);
    }

    #[test]
    fn verifier() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            verify_mixed_resolving(&p3, &[0]).unwrap(),
            Resolution::Collision(MixedItem::Vertex(0), MixedItem::Edge(0))
        );
        assert!(verify_mixed_resolving(&p3, &[0, 2]).unwrap().is_valid());
        assert!(verify_mixed_resolving(&p3, &[]).is_err());
        let small = Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(verify_mixed_resolving(&small, &[0, 1, 2, 3, 4]).unwrap().is_valid());
        assert!(!verify_mixed_resolving(&small, &[0, 1, 2, 3]).unwrap().is_valid());
    }

    #[test]
    fn theorem_small() {
        let r = torus_theorem_check(3, 3, true).unwrap();
        assert!(r.confirms_four(), "{r:?}");
        let r = torus_theorem_check(6, 7, false).unwrap();
        assert!(r.confirms_four());
    }
}
