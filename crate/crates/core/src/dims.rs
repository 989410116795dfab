//! Exact metric, edge metric and mixed metric dimension.
//!
//! Each dimension is a minimum hitting set: for every pair of items that
//! must be told apart, the set of vertices at different distances from the
//! two items has to be hit. All three are solved by [`crate::cover`].

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::cover::{self, CoverInstance, SolveOptions, Verdict};
use crate::error::{Error, Result};
use crate::families::k_subsets;
use crate::graph::{DistanceOracle, Graph, MixedItem};

/// Which items a resolving set must distinguish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ItemUniverse {
    Vertex,
    Edge,
    Mixed,
}

impl ItemUniverse {
    fn range(self, n: usize, m: usize) -> std::ops::Range<usize> {
        match self {
            ItemUniverse::Vertex => 0..n,
            ItemUniverse::Edge => n..n + m,
            ItemUniverse::Mixed => 0..n + m,
        }
    }
}

/// A pair of items and the vertices that resolve it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairConstraint {
    pub x: MixedItem,
    pub y: MixedItem,
    pub distinguishers: VertexSet,
}

#[derive(Clone, Debug)]
pub struct PairCover {
    /// One set per distinct distinguisher set; universe = all vertices.
    pub instance: CoverInstance,
    pub pairs: Vec<PairConstraint>,
    /// Pairs no vertex resolves.
    pub infeasible_pairs: Vec<(MixedItem, MixedItem)>,
}

/// Builds the pair-distinguishing hitting-set instance for `universe`.
pub fn pair_cover_instance(oracle: &DistanceOracle, universe: ItemUniverse) -> PairCover {
    let n = oracle.order();
    let m = oracle.edges().len();
    let range = universe.range(n, m);
    let rows: Vec<&[u16]> = (0..n).map(|w| oracle.item_row(w)).collect();

    let pairs: Vec<PairConstraint> = range
        .clone()
        .into_par_iter()
        .flat_map_iter(|a| {
            let rows = &rows;
            (a + 1..range.end).map(move |b| {
                let mut mask = VertexSet::EMPTY;
                for (w, row) in rows.iter().enumerate() {
                    if row[a] != row[b] {
                        mask.insert(w);
                    }
                }
                PairConstraint {
                    x: MixedItem::from_global_index(a, n),
                    y: MixedItem::from_global_index(b, n),
                    distinguishers: mask,
                }
            })
        })
        .collect();

    let infeasible_pairs = pairs
        .iter()
        .filter(|p| p.distinguishers.is_empty())
        .map(|p| (p.x, p.y))
        .collect();
    let mut sets: Vec<VertexSet> = pairs.iter().map(|p| p.distinguishers).collect();
    sets.sort_unstable();
    sets.dedup();
    let instance = CoverInstance::new(n, sets).expect("distinguishers lie within the vertex set");
    PairCover { instance, pairs, infeasible_pairs }
}

/// A dimension value with a witness basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dimension {
    pub value: usize,
    pub basis: VertexSet,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DimOptions {
    /// A valid lower bound on the dimension; smaller sizes are not tried.
    pub lower_bound: usize,
    pub deadline: Option<Instant>,
    /// Mixed dimension only: seed the search with forced vertices and
    /// drop high-degree vertices per candidate size.
    pub structural_rules: bool,
}

impl DimOptions {
    pub fn structural() -> Self {
        DimOptions { structural_rules: true, ..Default::default() }
    }
}

pub fn beta(g: &Graph) -> Result<Dimension> {
    dimension(g, ItemUniverse::Vertex, &DimOptions::default())
}

pub fn beta_e(g: &Graph) -> Result<Dimension> {
    dimension(g, ItemUniverse::Edge, &DimOptions::default())
}

pub fn beta_m(g: &Graph) -> Result<Dimension> {
    dimension(g, ItemUniverse::Mixed, &DimOptions::structural())
}

/// Minimum size of a nonempty vertex set resolving every pair of items
/// in `universe`.
pub fn dimension(g: &Graph, universe: ItemUniverse, opts: &DimOptions) -> Result<Dimension> {
    if g.order() < 2 {
        return Err(Error::invalid("dimension needs at least two vertices"));
    }
    let oracle = DistanceOracle::new(g)?;
    let pc = pair_cover_instance(&oracle, universe);
    if let Some(&(x, y)) = pc.infeasible_pairs.first() {
        return Err(Error::invalid(format!(
            "items {} and {} cannot be resolved",
            x.label(g),
            y.label(g)
        )));
    }

    let dim = if universe == ItemUniverse::Mixed && opts.structural_rules {
        mixed_with_rules(g, &pc.instance, opts)?
    } else {
        let solve = SolveOptions { cutoff: None, lower_bound: opts.lower_bound, deadline: opts.deadline };
        let h = cover::min_hitting_set_with(&pc.instance, &solve)?
            .optimal()
            .expect("no cutoff requested");
        Dimension { value: h.size(), basis: h.elements }
    };

    // a basis is a nonempty set even when nothing needs resolving (one edge)
    let dim = if dim.value == 0 {
        Dimension { value: 1, basis: VertexSet::singleton(0) }
    } else {
        dim
    };
    if let Some((x, y)) = find_collision(&oracle, universe, dim.basis) {
        panic!("basis {} leaves {x:?} and {y:?} unresolved", dim.basis);
    }
    Ok(dim)
}

fn mixed_with_rules(g: &Graph, base: &CoverInstance, opts: &DimOptions) -> Result<Dimension> {
    let forced = forced_vertices(g).forced;
    let start = opts.lower_bound.max(forced.len()).max(1);
    for k in start..=g.order() {
        let excluded = excluded_vertices(g, k);
        if excluded.intersects(forced) {
            // a forced vertex cannot sit in a basis of size k
            continue;
        }
        let inst = base.clone().with_forced(forced)?.with_excluded(excluded)?;
        let solve = SolveOptions { cutoff: Some(k), lower_bound: k, deadline: opts.deadline };
        match cover::min_hitting_set_with(&inst, &solve) {
            Ok(Verdict::Optimal(h)) => {
                return Ok(Dimension { value: h.size(), basis: h.elements });
            }
            Ok(Verdict::AboveCutoff(_)) | Err(Error::Infeasible { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::invalid("no mixed resolving set found"))
}

/// First pair of items in `universe` whose resolving vectors with respect
/// to `basis` coincide.
pub fn find_collision(
    oracle: &DistanceOracle,
    universe: ItemUniverse,
    basis: VertexSet,
) -> Option<(MixedItem, MixedItem)> {
    let n = oracle.order();
    let range = universe.range(n, oracle.edges().len());
    let members = basis.to_vec();
    let mut seen: HashMap<Vec<u16>, usize> = HashMap::with_capacity(range.len());
    for idx in range {
        let key: Vec<u16> = members.iter().map(|&w| oracle.item_row(w)[idx]).collect();
        if let Some(&prev) = seen.get(&key) {
            return Some((MixedItem::from_global_index(prev, n), MixedItem::from_global_index(idx, n)));
        }
        seen.insert(key, idx);
    }
    None
}

/// Twin classes and vertices that every mixed resolving set must contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedStructure {
    /// True-twin members, simplicial vertices and leaves.
    pub forced: VertexSet,
    pub true_twin_pairs: Vec<(usize, usize)>,
    pub false_twin_pairs: Vec<(usize, usize)>,
    pub simplicial: VertexSet,
    pub leaves: VertexSet,
}

pub fn forced_vertices(g: &Graph) -> ForcedStructure {
    let n = g.order();
    let mut true_twin_pairs = Vec::new();
    let mut false_twin_pairs = Vec::new();
    let mut forced = VertexSet::EMPTY;
    for u in 0..n {
        for v in u + 1..n {
            if g.closed_neighbors(u) == g.closed_neighbors(v) {
                true_twin_pairs.push((u, v));
                forced.insert(u);
                forced.insert(v);
            } else if g.neighbors(u) == g.neighbors(v) {
                false_twin_pairs.push((u, v));
            }
        }
    }
    let simplicial: VertexSet = (0..n)
        .filter(|&v| g.neighbors(v).iter().all(|a| g.neighbors(v).difference(g.closed_neighbors(a)).is_empty()))
        .collect();
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    forced = forced.union(simplicial).union(leaves);
    ForcedStructure { forced, true_twin_pairs, false_twin_pairs, simplicial, leaves }
}

/// Vertices too high in degree to belong to a mixed basis of size `k`:
/// `deg v > 2^(k-1) - 1`.
pub fn excluded_vertices(g: &Graph, k: usize) -> VertexSet {
    assert!(k >= 1, "candidate dimension must be positive");
    let threshold = if k > 64 { u128::MAX } else { (1u128 << (k - 1)) - 1 };
    (0..g.order()).filter(|&v| g.degree(v) as u128 > threshold).collect()
}

/// Every mixed resolving set of minimum size. Exhaustive, so limited to
/// graphs on at most 10 vertices.
pub fn all_min_mixed_bases(g: &Graph) -> Result<Vec<VertexSet>> {
    const LIMIT: usize = 10;
    if g.order() > LIMIT {
        return Err(Error::invalid(format!(
            "exhaustive basis listing is limited to {LIMIT} vertices, got {}",
            g.order()
        )));
    }
    let k = beta_m(g)?.value;
    let oracle = DistanceOracle::new(g)?;
    let pc = pair_cover_instance(&oracle, ItemUniverse::Mixed);
    Ok(k_subsets(g.order(), k)
        .into_iter()
        .filter(|&s| pc.instance.is_hitting_set(s))
        .collect())
}
