//! Exact minimum hitting set over a universe of at most 64 elements.
//!
//! The search is a depth-first branch and bound that branches on the
//! elements of the smallest unhit set, bounds with a greedy packing of
//! pairwise disjoint unhit sets, and deepens the size budget one step at a
//! time starting from the root bound. Once the optimum size is known the
//! lexicographically smallest optimal witness is fixed element by element.

use std::time::Instant;

use crate::bitset::{VertexSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// A hitting-set instance: select elements of `0..universe_size` so that
/// every set is hit, every `forced` element is selected and no `excluded`
/// element is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    universe_size: usize,
    sets: Vec<VertexSet>,
    forced: VertexSet,
    excluded: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub elements: VertexSet,
}

impl HittingSet {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Optimal(HittingSet),
    /// The optimum is larger than the requested cutoff.
    AboveCutoff(usize),
}

impl Verdict {
    pub fn optimal(self) -> Option<HittingSet> {
        match self {
            Verdict::Optimal(h) => Some(h),
            Verdict::AboveCutoff(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Stop with [`Verdict::AboveCutoff`] once sizes up to this are ruled out.
    pub cutoff: Option<usize>,
    /// A known valid lower bound on the optimum; sizes below it are skipped.
    pub lower_bound: usize,
    pub deadline: Option<Instant>,
}

impl CoverInstance {
    pub fn new(universe_size: usize, sets: Vec<VertexSet>) -> Result<Self> {
        if universe_size > MAX_ELEMENTS {
            return Err(Error::invalid(format!(
                "universe of {universe_size} exceeds the limit of {MAX_ELEMENTS}"
            )));
        }
        let universe = VertexSet::full(universe_size);
        if let Some(i) = sets.iter().position(|s| !s.is_subset(universe)) {
            return Err(Error::invalid(format!("set #{i} leaves the universe")));
        }
        Ok(CoverInstance {
            universe_size,
            sets,
            forced: VertexSet::EMPTY,
            excluded: VertexSet::EMPTY,
        })
    }

    pub fn with_forced(mut self, forced: VertexSet) -> Result<Self> {
        if !forced.is_subset(VertexSet::full(self.universe_size)) {
            return Err(Error::invalid("forced elements leave the universe"));
        }
        if forced.intersects(self.excluded) {
            return Err(Error::invalid("an element is both forced and excluded"));
        }
        self.forced = forced;
        Ok(self)
    }

    pub fn with_excluded(mut self, excluded: VertexSet) -> Result<Self> {
        if excluded.intersects(self.forced) {
            return Err(Error::invalid("an element is both forced and excluded"));
        }
        self.excluded = excluded.intersection(VertexSet::full(self.universe_size));
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn forced(&self) -> VertexSet {
        self.forced
    }

    pub fn excluded(&self) -> VertexSet {
        self.excluded
    }

    /// Checks `h` against the original, unreduced family.
    pub fn is_hitting_set(&self, h: VertexSet) -> bool {
        h.is_subset(VertexSet::full(self.universe_size))
            && self.forced.is_subset(h)
            && !h.intersects(self.excluded)
            && self.sets.iter().all(|s| s.intersects(h))
    }

    /// Sets that still need hitting once forced elements are taken, with
    /// excluded elements removed, deduplicated and reduced to the
    /// inclusion-minimal ones, ordered by (size, bits).
    pub fn reduced_sets(&self) -> Result<Vec<VertexSet>> {
        let mut out = Vec::with_capacity(self.sets.len());
        for (i, s) in self.sets.iter().enumerate() {
            if s.intersects(self.forced) {
                continue;
            }
            let avail = s.difference(self.excluded);
            if avail.is_empty() {
                return Err(Error::Infeasible { set: i });
            }
            out.push(avail);
        }
        Ok(minimal_sets(out))
    }
}

/// Deduplicates and drops every set that is a superset of another.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Max-coverage greedy, ties to the smallest element.
pub fn greedy_hitting_set(inst: &CoverInstance) -> Result<HittingSet> {
    let sets = inst.reduced_sets()?;
    Ok(HittingSet { elements: greedy_on(&sets, inst.forced, inst.universe_size) })
}

fn greedy_on(sets: &[VertexSet], forced: VertexSet, universe: usize) -> VertexSet {
    let mut chosen = forced;
    let mut open: Vec<VertexSet> = sets.to_vec();
    while !open.is_empty() {
        let mut counts = vec![0usize; universe];
        for s in &open {
            for e in *s {
                counts[e] += 1;
            }
        }
        let best = (0..universe)
            .max_by_key(|&e| (counts[e], std::cmp::Reverse(e)))
            .expect("nonempty universe when sets remain");
        chosen.insert(best);
        open.retain(|s| !s.contains(best));
    }
    chosen
}

/// Exact minimum hitting set, or [`Verdict::AboveCutoff`] when the optimum
/// exceeds `cutoff`.
pub fn min_hitting_set(inst: &CoverInstance, cutoff: Option<usize>) -> Result<Verdict> {
    min_hitting_set_with(inst, &SolveOptions { cutoff, ..SolveOptions::default() })
}

pub fn min_hitting_set_with(inst: &CoverInstance, opts: &SolveOptions) -> Result<Verdict> {
    let sets = inst.reduced_sets()?;
    let forced = inst.forced;
    let banned = inst.excluded;
    let greedy = greedy_on(&sets, forced, inst.universe_size);

    let raw: Vec<u64> = sets.iter().map(|s| s.0).collect();
    let all: Vec<u32> = (0..raw.len() as u32).collect();
    let mut search = Search { sets: &raw, deadline: opts.deadline, nodes: 0 };

    let root_lb = forced.len() + packing_bound(&raw, &all, banned.0);
    let hi = greedy.len();
    let lo = root_lb.max(opts.lower_bound).min(hi);

    let mut optimum = hi;
    for k in lo..hi {
        if opts.cutoff.is_some_and(|c| k > c) {
            return Ok(Verdict::AboveCutoff(opts.cutoff.unwrap()));
        }
        if search.exists(&all, forced.0, banned.0, k - forced.len())?.is_some() {
            optimum = k;
            break;
        }
    }
    if opts.cutoff.is_some_and(|c| optimum > c) {
        return Ok(Verdict::AboveCutoff(opts.cutoff.unwrap()));
    }

    // Fix elements in ascending order: take `e` whenever an optimal
    // solution extending the current prefix still exists.
    let mut chosen = forced.0;
    let mut refused = banned.0;
    for e in 0..inst.universe_size {
        if raw.iter().all(|&s| s & chosen != 0) {
            break;
        }
        let bit = 1u64 << e;
        if (chosen | refused) & bit != 0 {
            continue;
        }
        let taken = chosen.count_ones() as usize;
        let feasible = taken < optimum
            && search.exists(&all, chosen | bit, refused, optimum - taken - 1)?.is_some();
        if feasible {
            chosen |= bit;
        } else {
            refused |= bit;
        }
    }
    let witness = VertexSet(chosen);
    assert_eq!(witness.len(), optimum, "lexicographic refinement lost optimality");
    assert!(inst.is_hitting_set(witness), "witness fails the original family");
    Ok(Verdict::Optimal(HittingSet { elements: witness }))
}

/// Number of pairwise disjoint sets (restricted to unbanned elements)
/// collected greedily in the given order.
fn packing_bound(sets: &[u64], live: &[u32], banned: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &i in live {
        let avail = sets[i as usize] & !banned;
        if avail & used == 0 {
            used |= avail;
            count += 1;
        }
    }
    count
}

struct Search<'a> {
    sets: &'a [u64],
    deadline: Option<Instant>,
    nodes: u64,
}

impl Search<'_> {
    /// A hitting set containing `chosen`, avoiding `banned`, using at most
    /// `budget` further elements.
    fn exists(&mut self, live: &[u32], chosen: u64, banned: u64, budget: usize) -> Result<Option<u64>> {
        self.nodes += 1;
        if self.nodes & 0x3ff == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::TimedOut);
                }
            }
        }

        let mut next = Vec::with_capacity(live.len());
        let mut pick = 0u64;
        let mut pick_len = u32::MAX;
        let mut common = !banned;
        for &i in live {
            let s = self.sets[i as usize];
            if s & chosen != 0 {
                continue;
            }
            let avail = s & !banned;
            let len = avail.count_ones();
            if len == 0 {
                return Ok(None);
            }
            if len < pick_len {
                pick_len = len;
                pick = avail;
            }
            common &= avail;
            next.push(i);
        }
        if next.is_empty() {
            return Ok(Some(chosen));
        }
        match budget {
            0 => return Ok(None),
            1 => {
                return Ok((common != 0).then(|| chosen | (common & common.wrapping_neg())));
            }
            _ => {}
        }
        if pick_len > 1 {
            let mut used = 0u64;
            let mut lb = 0;
            for &i in &next {
                let avail = self.sets[i as usize] & !banned;
                if avail & used == 0 {
                    used |= avail;
                    lb += 1;
                    if lb > budget {
                        return Ok(None);
                    }
                }
            }
        }

        let mut banned_here = banned;
        let mut rest = pick;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if let Some(found) = self.exists(&next, chosen | bit, banned_here, budget - 1)? {
                return Ok(Some(found));
            }
            banned_here |= bit;
        }
        Ok(None)
    }
}
