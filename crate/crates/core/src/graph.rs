//! Simple undirected graphs, BFS distances and vertex-to-item distances.
//!
//! Items are the elements of `V ∪ E`. Their global order is fixed: all
//! vertices ascending, then all edges in sorted edge-list order, so item
//! `i < n` is vertex `i` and item `n + j` is edge `j`.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{VertexSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Hop count between two vertices.
pub type Dist = u16;

const UNREACHED: Dist = Dist::MAX;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a canonical graph: edges are oriented `u < v`, deduplicated
    /// and sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::invalid(format!(
                "graphs are limited to {MAX_ELEMENTS} vertices, got {n}"
            )));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in &list {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// `|V| + |E|`.
    pub fn item_count(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Index of edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// First vertex pair with no connecting path, if any.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        if self.n == 0 {
            return None;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        VertexSet::full(self.n).difference(seen).first().map(|v| (0, v))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair().is_none()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation of a valid graph is valid")
    }

    /// Global item list: vertices then edges.
    pub fn items(&self) -> impl Iterator<Item = MixedItem> + '_ {
        (0..self.n)
            .map(MixedItem::Vertex)
            .chain((0..self.edges.len()).map(MixedItem::Edge))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// An element of `V ∪ E`. Edges are referred to by their index in the
/// graph's sorted edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedItem {
    Vertex(usize),
    Edge(usize),
}

impl MixedItem {
    /// Position in the global item order of a graph with `n` vertices.
    pub fn global_index(self, n: usize) -> usize {
        match self {
            MixedItem::Vertex(v) => v,
            MixedItem::Edge(e) => n + e,
        }
    }

    pub fn from_global_index(index: usize, n: usize) -> Self {
        if index < n {
            MixedItem::Vertex(index)
        } else {
            MixedItem::Edge(index - n)
        }
    }

    /// Human-readable label such as `v3` or `e(1,4)`.
    pub fn label(self, g: &Graph) -> String {
        match self {
            MixedItem::Vertex(v) => format!("v{v}"),
            MixedItem::Edge(e) => {
                let (u, v) = g.edge(e);
                format!("e({u},{v})")
            }
        }
    }
}

/// All-pairs vertex distances plus vertex-to-item distances.
#[derive(Clone, Debug)]
pub struct DistanceOracle {
    n: usize,
    edges: Vec<(usize, usize)>,
    dv: Vec<Dist>,
    dmix: Vec<Dist>,
    diameter: usize,
    degrees: Vec<usize>,
}

impl DistanceOracle {
    /// BFS from every vertex. Fails on disconnected or empty graphs.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n == 0 {
            return Err(Error::invalid("graph has no vertices"));
        }
        let mut dv = vec![UNREACHED; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dv[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for w in g.neighbors(u) {
                    if row[w] == UNREACHED {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
            if let Some(t) = row.iter().position(|&d| d == UNREACHED) {
                return Err(Error::Disconnected(s.min(t), s.max(t)));
            }
        }

        let items = g.item_count();
        let mut dmix = vec![0; n * items];
        for w in 0..n {
            let row = &dv[w * n..(w + 1) * n];
            let out = &mut dmix[w * items..(w + 1) * items];
            out[..n].copy_from_slice(row);
            for (j, &(u, v)) in g.edges().iter().enumerate() {
                out[n + j] = row[u].min(row[v]);
            }
        }
        let diameter = dv.iter().copied().max().unwrap_or(0) as usize;

        Ok(DistanceOracle {
            n,
            edges: g.edges().to_vec(),
            dv,
            dmix,
            diameter,
            degrees: g.degrees(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn item_count(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Dist {
        self.dv[u * self.n + v]
    }

    /// Distances from `w` to every item, in global item order.
    #[inline]
    pub fn item_row(&self, w: usize) -> &[Dist] {
        let items = self.item_count();
        &self.dmix[w * items..(w + 1) * items]
    }

    /// `d(w, x)`: the BFS distance for a vertex, the nearer endpoint for an edge.
    pub fn item_distance(&self, w: usize, x: MixedItem) -> Result<Dist> {
        if w >= self.n {
            return Err(Error::invalid(format!("vertex {w} out of range")));
        }
        let idx = match x {
            MixedItem::Vertex(v) if v < self.n => v,
            MixedItem::Edge(e) if e < self.edges.len() => self.n + e,
            _ => return Err(Error::invalid(format!("item {x:?} out of range"))),
        };
        Ok(self.item_row(w)[idx])
    }

    /// `r(x, S)`: the distances from `x` to each vertex of `basis`, in order.
    pub fn resolving_vector(&self, x: MixedItem, basis: &[usize]) -> Result<Vec<Dist>> {
        if basis.is_empty() {
            return Err(Error::invalid("resolving vector needs a nonempty vertex list"));
        }
        for (i, &w) in basis.iter().enumerate() {
            if basis[..i].contains(&w) {
                return Err(Error::invalid(format!("vertex {w} repeated in basis")));
            }
        }
        basis.iter().map(|&w| self.item_distance(w, x)).collect()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_canonicalizes() {
        assert_eq!(p3().edges(), &[(0, 1), (1, 2)]);
        let g = Graph::new(5, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::InvalidInput(_))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::InvalidInput(_))));
        assert!(Graph::new(65, []).is_err());
    }

    #[test]
    fn path_distances() {
        let o = DistanceOracle::new(&p3()).unwrap();
        assert_eq!(o.dist(0, 2), 2);
        assert_eq!(o.item_distance(2, MixedItem::Edge(0)).unwrap(), 1);
        assert_eq!(o.diameter(), 2);
        // incident edge is at distance zero
        assert_eq!(o.item_distance(1, MixedItem::Edge(0)).unwrap(), 0);
        assert!(o.item_distance(3, MixedItem::Vertex(0)).is_err());
        assert!(o.item_distance(0, MixedItem::Edge(2)).is_err());
    }

    #[test]
    fn cycle_item_distance() {
        let g = c4();
        let o = DistanceOracle::new(&g).unwrap();
        let e23 = g.edge_index(2, 3).unwrap();
        assert_eq!(o.item_distance(0, MixedItem::Edge(e23)).unwrap(), 1);
        let e12 = g.edge_index(1, 2).unwrap();
        assert_eq!(o.resolving_vector(MixedItem::Edge(e12), &[0, 3]).unwrap(), vec![1, 1]);
    }

    #[test]
    fn resolving_vectors_on_path() {
        let o = DistanceOracle::new(&p3()).unwrap();
        assert_eq!(o.resolving_vector(MixedItem::Vertex(1), &[0, 2]).unwrap(), vec![1, 1]);
        assert_eq!(o.resolving_vector(MixedItem::Edge(0), &[0, 2]).unwrap(), vec![0, 1]);
        assert!(o.resolving_vector(MixedItem::Vertex(1), &[]).is_err());
        assert!(o.resolving_vector(MixedItem::Vertex(1), &[0, 0]).is_err());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(DistanceOracle::new(&g), Err(Error::Disconnected(0, 2))));
    }

    #[test]
    fn global_item_order() {
        let g = p3();
        let items: Vec<_> = g.items().collect();
        assert_eq!(
            items,
            vec![
                MixedItem::Vertex(0),
                MixedItem::Vertex(1),
                MixedItem::Vertex(2),
                MixedItem::Edge(0),
                MixedItem::Edge(1)
            ]
        );
        for (i, x) in items.iter().enumerate() {
            assert_eq!(x.global_index(3), i);
            assert_eq!(MixedItem::from_global_index(i, 3), *x);
        }
        assert_eq!(MixedItem::Edge(1).label(&g), "e(1,2)");
    }
}
