//! Lower bounds on the mixed metric dimension.
//!
//! `L1`..`L4` are bounds known before the mixed side-set results; `N1`..`N3`
//! come from degree, side-set and diameter arguments.

use std::time::Instant;

use crate::bitset::VertexSet;
use crate::cover::{self, CoverInstance};
use crate::dims::{self, forced_vertices, pair_cover_instance, DimOptions, Dimension, ItemUniverse};
use crate::error::{Error, Result};
use crate::graph::{DistanceOracle, Graph};
use crate::lp::{ceil_with_tolerance, solve_covering_lp, CoveringLp};

/// Smallest `t` with `2^t >= x`; zero for `x <= 1`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Side sets of one edge `uv`, `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeSides {
    pub edge: (usize, usize),
    /// Vertices strictly closer to `u`.
    pub less: VertexSet,
    /// Vertices strictly closer to `v`.
    pub greater: VertexSet,
}

pub type SideSets = Vec<EdgeSides>;

pub fn edge_side_sets(oracle: &DistanceOracle) -> SideSets {
    oracle
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut less = VertexSet::EMPTY;
            let mut greater = VertexSet::EMPTY;
            for w in 0..oracle.order() {
                let (du, dv) = (oracle.dist(u, w), oracle.dist(v, w));
                if du < dv {
                    less.insert(w);
                } else if du > dv {
                    greater.insert(w);
                }
            }
            EdgeSides { edge: (u, v), less, greater }
        })
        .collect()
}

fn connected_oracle(g: &Graph) -> Result<DistanceOracle> {
    if g.order() < 2 {
        return Err(Error::invalid("bounds need at least two vertices"));
    }
    DistanceOracle::new(g)
}

pub fn lb_l1(g: &Graph) -> usize {
    ceil_log2(g.max_degree())
}

pub fn lb_l2(g: &Graph) -> usize {
    1 + ceil_log2(g.min_degree())
}

/// Smallest set holding every forced vertex and meeting every false-twin pair.
pub fn lb_l3(g: &Graph) -> Result<usize> {
    let fs = forced_vertices(g);
    let sets = fs.false_twin_pairs.iter().map(|&(u, v)| [u, v].into_iter().collect()).collect();
    let inst = CoverInstance::new(g.order(), sets)?.with_forced(fs.forced)?;
    let h = cover::min_hitting_set(&inst, None)?.optimal().expect("no cutoff requested");
    Ok(h.size())
}

/// Rounded-up optimum of the LP relaxation of the mixed pair cover.
pub fn lb_l4(g: &Graph) -> Result<usize> {
    Ok(ceil_with_tolerance(l4_relaxation(g)?))
}

/// Unrounded LP optimum behind [`lb_l4`].
pub fn l4_relaxation(g: &Graph) -> Result<f64> {
    let oracle = connected_oracle(g)?;
    let pc = pair_cover_instance(&oracle, ItemUniverse::Mixed);
    let lp = CoveringLp::new(g.order(), pc.instance.sets().to_vec())?;
    Ok(solve_covering_lp(&lp)?.value)
}

pub fn lb_n1(g: &Graph) -> usize {
    1 + ceil_log2(g.min_degree() + 1)
}

/// Minimum hitting set of all edge side sets, with a lexicographically
/// smallest witness.
pub fn lb_n2(g: &Graph) -> Result<(usize, VertexSet)> {
    let oracle = connected_oracle(g)?;
    let inst = side_set_instance(&oracle)?;
    let h = cover::min_hitting_set(&inst, None)?.optimal().expect("no cutoff requested");
    Ok((h.size(), h.elements))
}

pub fn side_set_instance(oracle: &DistanceOracle) -> Result<CoverInstance> {
    let mut sets: Vec<VertexSet> =
        edge_side_sets(oracle).iter().flat_map(|s| [s.less, s.greater]).collect();
    sets.sort_unstable();
    sets.dedup();
    CoverInstance::new(oracle.order(), sets)
}

/// Smallest `k >= 1` with `|V| + |E| <= D^k + k (Δ + 1)`.
pub fn lb_n3(g: &Graph) -> Result<usize> {
    let oracle = connected_oracle(g)?;
    Ok(n3_from(g.item_count(), oracle.diameter(), g.max_degree()))
}

fn n3_from(items: usize, diameter: usize, max_degree: usize) -> usize {
    let items = items as u128;
    let mut power = 1u128;
    for k in 1.. {
        power = power.saturating_mul(diameter as u128);
        if items <= power.saturating_add(k as u128 * (max_degree as u128 + 1)) {
            return k;
        }
    }
    unreachable!()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactDims {
    pub beta: Dimension,
    pub beta_e: Dimension,
    pub beta_m: Dimension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
    pub l4: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n2_witness: VertexSet,
    pub exact: Option<ExactDims>,
}

impl BoundsReport {
    /// `[L1, L2, L3, L4, N1, N2, N3]`.
    pub fn values(&self) -> [usize; 7] {
        [self.l1, self.l2, self.l3, self.l4, self.n1, self.n2, self.n3]
    }

    pub fn best(&self) -> usize {
        self.values().into_iter().max().unwrap_or(0)
    }

    /// Bounds (by column name) that exceed the exact mixed dimension.
    pub fn violations(&self) -> Vec<&'static str> {
        let Some(exact) = self.exact else { return Vec::new() };
        BOUND_NAMES
            .iter()
            .zip(self.values())
            .filter(|&(_, b)| b > exact.beta_m.value)
            .map(|(&name, _)| name)
            .collect()
    }
}

pub const BOUND_NAMES: [&str; 7] = ["L1", "L2", "L3", "L4", "N1", "N2", "N3"];

pub fn bounds_report(g: &Graph, compute_exact: bool) -> Result<BoundsReport> {
    bounds_report_with(g, compute_exact, None)
}

/// As [`bounds_report`]; `deadline` limits the exact dimension searches.
pub fn bounds_report_with(
    g: &Graph,
    compute_exact: bool,
    deadline: Option<Instant>,
) -> Result<BoundsReport> {
    connected_oracle(g)?;
    let (n2, n2_witness) = lb_n2(g)?;
    let mut report = BoundsReport {
        n: g.order(),
        m: g.size(),
        l1: lb_l1(g),
        l2: lb_l2(g),
        l3: lb_l3(g)?,
        l4: lb_l4(g)?,
        n1: lb_n1(g),
        n2,
        n2_witness,
        n3: lb_n3(g)?,
        exact: None,
    };
    if compute_exact {
        let plain = DimOptions { deadline, ..Default::default() };
        let beta = dims::dimension(g, ItemUniverse::Vertex, &plain)?;
        let beta_e = dims::dimension(g, ItemUniverse::Edge, &plain)?;
        let mixed = DimOptions {
            lower_bound: report.best().max(beta.value).max(beta_e.value),
            deadline,
            structural_rules: true,
        };
        let beta_m = dims::dimension(g, ItemUniverse::Mixed, &mixed)?;
        assert!(
            beta_m.value >= beta.value.max(beta_e.value),
            "mixed dimension below vertex or edge dimension"
        );
        report.exact = Some(ExactDims { beta, beta_e, beta_m });
    }
    Ok(report)
}
