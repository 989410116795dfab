//! Covering linear programs `min Σ y_v  s.t.  Σ_{v ∈ row} y_v ≥ 1, y ≥ 0`.
//!
//! Upper bounds `y_v ≤ 1` are implied: lowering any `y_v > 1` to 1 keeps
//! every row satisfied. The solver runs a dense primal simplex on the dual
//! packing program `max Σ z_r  s.t.  Σ_{r ∋ v} z_r ≤ 1, z ≥ 0`, whose slack
//! basis is feasible at the origin, and reads the covering solution off the
//! final reduced costs of the slack columns.

use crate::bitset::VertexSet;
use crate::cover::minimal_sets;
use crate::error::{Error, Result};

/// Absolute tolerance on the optimum and on row feasibility.
pub const LP_TOLERANCE: f64 = 1e-7;

const PIVOT_EPS: f64 = 1e-9;
const DEGENERATE_STREAK: usize = 50;

#[derive(Clone, Debug)]
pub struct CoveringLp {
    num_vars: usize,
    rows: Vec<VertexSet>,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    /// Objective `Σ y_v` recomputed from `y`.
    pub value: f64,
    /// Optimal covering variables.
    pub y: Vec<f64>,
    /// Optimal packing multipliers, one per row.
    pub z: Vec<f64>,
    pub pivots: usize,
}

impl CoveringLp {
    /// Rows are deduplicated and dominated (superset) rows dropped.
    pub fn new(num_vars: usize, rows: Vec<VertexSet>) -> Result<Self> {
        let lp = Self::unreduced(num_vars, rows)?;
        Ok(CoveringLp { rows: minimal_sets(lp.rows), ..lp })
    }

    /// Keeps the rows exactly as given.
    pub fn unreduced(num_vars: usize, rows: Vec<VertexSet>) -> Result<Self> {
        if let Some(row) = rows.iter().position(|r| r.is_empty()) {
            return Err(Error::LpInfeasible { row });
        }
        let universe = VertexSet::full(num_vars);
        if rows.iter().any(|r| !r.is_subset(universe)) {
            return Err(Error::invalid("row references a variable out of range"));
        }
        Ok(CoveringLp { num_vars, rows })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }
}

/// Smallest integer not below `x − 1e-6`.
pub fn ceil_with_tolerance(x: f64) -> usize {
    (x - 1e-6).ceil().max(0.0) as usize
}

pub fn solve_covering_lp(lp: &CoveringLp) -> Result<LpSolution> {
    let m = lp.num_vars;
    let r = lp.rows.len();
    if r == 0 {
        return Ok(LpSolution { value: 0.0, y: vec![0.0; m], z: Vec::new(), pivots: 0 });
    }
    let cols = r + m;

    // Tableau rows are the packing constraints (one per covering variable).
    let mut tab = vec![0.0f64; m * cols];
    for (j, row) in lp.rows.iter().enumerate() {
        for v in *row {
            tab[v * cols + j] = 1.0;
        }
    }
    for v in 0..m {
        tab[v * cols + r + v] = 1.0;
    }
    let mut rhs = vec![1.0f64; m];
    // reduced costs for maximization: entering candidates have d_j > 0
    let mut cost: Vec<f64> = (0..cols).map(|j| if j < r { 1.0 } else { 0.0 }).collect();
    let mut objective = 0.0f64;
    let mut basis: Vec<usize> = (r..cols).collect();

    let mut pivots = 0usize;
    let mut streak = 0usize;
    let max_pivots = 50 * (cols + m) + 1000;
    loop {
        let bland = streak >= DEGENERATE_STREAK;
        let entering = if bland {
            (0..cols).find(|&j| cost[j] > PIVOT_EPS)
        } else {
            let mut best = None;
            let mut best_cost = PIVOT_EPS;
            for (j, &c) in cost.iter().enumerate() {
                if c > best_cost {
                    best_cost = c;
                    best = Some(j);
                }
            }
            best
        };
        let Some(q) = entering else { break };

        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            let a = tab[i * cols + q];
            if a > PIVOT_EPS {
                let ratio = rhs[i] / a;
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best_ratio - 1e-12
                            || (ratio <= best_ratio + 1e-12 && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio.min(best_ratio);
                    leave = Some(i);
                }
            }
        }
        // the packing polytope is bounded, so some row always limits the step
        let p = leave.ok_or_else(|| Error::LpNumerical("unbounded packing program".into()))?;

        if best_ratio <= 1e-12 {
            streak += 1;
        } else {
            streak = 0;
        }

        let pivot = tab[p * cols + q];
        for j in 0..cols {
            tab[p * cols + j] /= pivot;
        }
        rhs[p] /= pivot;
        let (before, rest) = tab.split_at_mut(p * cols);
        let (prow, after) = rest.split_at_mut(cols);
        for (i, row) in before.chunks_exact_mut(cols).enumerate() {
            eliminate(row, prow, q, &mut rhs, i, p);
        }
        for (k, row) in after.chunks_exact_mut(cols).enumerate() {
            eliminate(row, prow, q, &mut rhs, p + 1 + k, p);
        }
        let f = cost[q];
        for j in 0..cols {
            cost[j] -= f * prow[j];
        }
        objective += f * rhs[p];
        basis[p] = q;

        pivots += 1;
        if pivots > max_pivots {
            return Err(Error::LpNumerical(format!("no convergence after {pivots} pivots")));
        }
    }

    let mut z = vec![0.0; r];
    for (i, &b) in basis.iter().enumerate() {
        if b < r {
            z[b] = rhs[i].max(0.0);
        }
    }
    // dual prices of the packing rows are minus the slack reduced costs
    let y: Vec<f64> = (0..m).map(|v| (-cost[r + v]).max(0.0)).collect();

    for (k, row) in lp.rows.iter().enumerate() {
        let s: f64 = row.iter().map(|v| y[v]).sum();
        if s < 1.0 - LP_TOLERANCE {
            return Err(Error::LpNumerical(format!(
                "covering row #{k} sums to {s}, below 1"
            )));
        }
    }
    let value: f64 = y.iter().sum();
    let packed: f64 = z.iter().sum();
    if (value - packed).abs() > LP_TOLERANCE * value.max(1.0) || (value - objective).abs() > 1e-6 {
        return Err(Error::LpNumerical(format!(
            "duality gap: covering {value}, packing {packed}"
        )));
    }
    Ok(LpSolution { value, y, z, pivots })
}

fn eliminate(row: &mut [f64], prow: &[f64], q: usize, rhs: &mut [f64], i: usize, p: usize) {
    let f = row[q];
    if f == 0.0 {
        return;
    }
    for (a, &b) in row.iter_mut().zip(prow) {
        *a -= f * b;
    }
    row[q] = 0.0;
    rhs[i] -= f * rhs[p];
    if rhs[i] < 0.0 && rhs[i] > -1e-12 {
        rhs[i] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(family: &[&[usize]]) -> Vec<VertexSet> {
        family.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn value(n: usize, family: &[&[usize]]) -> f64 {
        solve_covering_lp(&CoveringLp::new(n, rows(family)).unwrap()).unwrap().value
    }

    #[test]
    fn k2_rows() {
        assert!((value(2, &[&[0], &[1], &[0, 1]]) - 2.0).abs() < LP_TOLERANCE);
    }

    #[test]
    fn fractional_triangle() {
        let sol = solve_covering_lp(&CoveringLp::new(3, rows(&[&[0, 1], &[0, 2], &[1, 2]])).unwrap())
            .unwrap();
        assert!((sol.value - 1.5).abs() < LP_TOLERANCE);
        for y in sol.y {
            assert!((y - 0.5).abs() < LP_TOLERANCE);
        }
    }

    #[test]
    fn empty_row_is_infeasible() {
        assert!(matches!(
            CoveringLp::new(2, vec![VertexSet::EMPTY]),
            Err(Error::LpInfeasible { row: 0 })
        ));
        assert_eq!(value(3, &[]), 0.0);
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_with_tolerance(3.0000001), 3);
        assert_eq!(ceil_with_tolerance(2.5), 3);
        assert_eq!(ceil_with_tolerance(0.0), 0);
        assert_eq!(ceil_with_tolerance(4.0), 4);
        assert_eq!(ceil_with_tolerance(4.01), 5);
    }

    #[test]
    fn reduction_preserves_optimum() {
        let family: &[&[usize]] = &[&[0, 1], &[0, 1, 2], &[1, 2], &[1, 2], &[2, 3], &[0, 3, 4], &[4]];
        let a = solve_covering_lp(&CoveringLp::new(5, rows(family)).unwrap()).unwrap();
        let b = solve_covering_lp(&CoveringLp::unreduced(5, rows(family)).unwrap()).unwrap();
        assert!((a.value - b.value).abs() < LP_TOLERANCE);
    }

    #[test]
    fn odd_cycle_cover() {
        // edges of C5: fractional vertex cover 5/2
        let family: &[&[usize]] = &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]];
        assert!((value(5, family) - 2.5).abs() < LP_TOLERANCE);
    }
}
