//! Generators for the named graph families.
//!
//! Vertex labelings:
//! - `torus:m,n`: vertex `(i, j)` is `i * n + j`;
//! - `hypercube:d`: vertex is its bit pattern;
//! - `hamming:d,q`: vertex is the base-`q` word, least significant digit first;
//! - `gen_petersen:n,k`: outer cycle `0..n`, inner vertex `n + i` under outer `i`;
//! - `kneser`, `johnson`: `k`-subsets of `0..n` in lexicographic order;
//! - `book:p`: spine `0, 1`, pages `2..p + 2`.

use std::fmt;
use std::str::FromStr;

use crate::bitset::{VertexSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Book,
    Torus,
    Hypercube,
    Hamming,
    GenPetersen,
    Kneser,
    Johnson,
    Paley,
    Clebsch,
    Rook,
    Gq24,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Book,
        Family::Torus,
        Family::Hypercube,
        Family::Hamming,
        Family::GenPetersen,
        Family::Kneser,
        Family::Johnson,
        Family::Paley,
        Family::Clebsch,
        Family::Rook,
        Family::Gq24,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Book => "book",
            Family::Torus => "torus",
            Family::Hypercube => "hypercube",
            Family::Hamming => "hamming",
            Family::GenPetersen => "gen_petersen",
            Family::Kneser => "kneser",
            Family::Johnson => "johnson",
            Family::Paley => "paley",
            Family::Clebsch => "clebsch",
            Family::Rook => "rook",
            Family::Gq24 => "gq24",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Clebsch | Family::Gq24 => 0,
            Family::Path
            | Family::Cycle
            | Family::Complete
            | Family::Star
            | Family::Book
            | Family::Hypercube
            | Family::Paley
            | Family::Rook => 1,
            _ => 2,
        }
    }
}

/// A family name plus its integer parameters, e.g. `torus:4,5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilySpec { family, params: params.to_vec() }
    }

    pub fn generate(&self) -> Result<Graph> {
        generate(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            f.write_str(if i == 0 { ":" } else { "," })?;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b)),
            None => (s.trim(), None),
        };
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::invalid(format!("unknown graph family `{name}`")))?;
        let params = match rest {
            None => Vec::new(),
            Some(r) => r
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad parameter `{p}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(FamilySpec { family, params })
    }
}

fn check(cond: bool, spec: &FamilySpec, why: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(format!("{spec}: {why}")))
    }
}

fn check_order(n: usize, spec: &FamilySpec) -> Result<()> {
    check(
        n <= MAX_ELEMENTS,
        spec,
        &format!("{n} vertices exceeds the limit of {MAX_ELEMENTS}"),
    )
}

/// Builds the graph described by `spec`. Every generated graph is checked
/// to be connected.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    check(
        p.len() == spec.family.arity(),
        spec,
        &format!("expected {} parameter(s), got {}", spec.family.arity(), p.len()),
    )?;
    let g = match spec.family {
        Family::Path => {
            let n = p[0];
            check(n >= 1, spec, "need n >= 1")?;
            check_order(n, spec)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))?
        }
        Family::Cycle => {
            let n = p[0];
            check(n >= 3, spec, "need n >= 3")?;
            check_order(n, spec)?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        Family::Complete => {
            let n = p[0];
            check(n >= 1, spec, "need n >= 1")?;
            check_order(n, spec)?;
            Graph::from_fn(n, |_, _| true)?
        }
        Family::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            check(a >= 1 && b >= 1, spec, "need both sides >= 1")?;
            check_order(a + b, spec)?;
            Graph::from_fn(a + b, |u, v| (u < a) != (v < a))?
        }
        Family::Star => {
            let k = p[0];
            check(k >= 1, spec, "need at least one leaf")?;
            check_order(k + 1, spec)?;
            Graph::new(k + 1, (1..=k).map(|i| (0, i)))?
        }
        Family::Book => {
            let pages = p[0];
            check(pages >= 1, spec, "need at least one page")?;
            check_order(pages + 2, spec)?;
            Graph::from_fn(pages + 2, |u, _| u < 2)?
        }
        Family::Torus => torus(p[0], p[1])?,
        Family::Hypercube => {
            let d = p[0];
            check(d >= 1, spec, "need d >= 1")?;
            check(d <= 6, spec, "hypercube dimension above 6 exceeds the vertex limit")?;
            Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1)?
        }
        Family::Hamming => {
            let (d, q) = (p[0], p[1]);
            check(d >= 1 && q >= 2, spec, "need d >= 1 and q >= 2")?;
            let n = q
                .checked_pow(d as u32)
                .filter(|&n| n <= MAX_ELEMENTS)
                .ok_or_else(|| Error::invalid(format!("{spec}: q^d exceeds the vertex limit")))?;
            hamming(d, q, n)?
        }
        Family::GenPetersen => {
            let (n, k) = (p[0], p[1]);
            check(n >= 3, spec, "need n >= 3")?;
            check(k >= 1 && 2 * k < n, spec, "need 1 <= k < n/2")?;
            check_order(2 * n, spec)?;
            let mut edges = Vec::with_capacity(3 * n);
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((i, n + i));
                edges.push((n + i, n + (i + k) % n));
            }
            Graph::new(2 * n, edges)?
        }
        Family::Kneser | Family::Johnson => {
            let (n, k) = (p[0], p[1]);
            check(k >= 1 && k < n, spec, "need 1 <= k < n")?;
            let subsets = k_subsets(n, k);
            check_order(subsets.len(), spec)?;
            if spec.family == Family::Kneser {
                Graph::from_fn(subsets.len(), |a, b| !subsets[a].intersects(subsets[b]))?
            } else {
                Graph::from_fn(subsets.len(), |a, b| {
                    subsets[a].intersection(subsets[b]).len() == k - 1
                })?
            }
        }
        Family::Paley => {
            let q = p[0];
            check(is_prime(q), spec, "only prime moduli are supported")?;
            check(q % 4 == 1, spec, "need q = 1 (mod 4)")?;
            check_order(q, spec)?;
            let residues: VertexSet = (1..q).map(|x| x * x % q).collect();
            Graph::from_fn(q, |u, v| residues.contains((v + q - u) % q))?
        }
        Family::Clebsch => {
            // folded 5-cube
            Graph::from_fn(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4))?
        }
        Family::Rook => {
            let n = p[0];
            check(n >= 2, spec, "need n >= 2")?;
            check_order(n * n, spec)?;
            hamming(2, n, n * n)?
        }
        Family::Gq24 => gq24(),
    };
    if let Some((u, v)) = g.disconnected_pair() {
        return Err(Error::invalid(format!(
            "{spec}: generated graph is disconnected ({u} and {v} not joined)"
        )));
    }
    Ok(g)
}

/// `C_m □ C_n` with vertex `(i, j)` labeled `i * n + j`.
pub fn torus(m: usize, n: usize) -> Result<Graph> {
    if m < 3 || n < 3 {
        return Err(Error::invalid(format!("torus:{m},{n}: need m, n >= 3")));
    }
    if m * n > MAX_ELEMENTS {
        return Err(Error::invalid(format!(
            "torus:{m},{n}: {} vertices exceeds the limit of {MAX_ELEMENTS}",
            m * n
        )));
    }
    let mut edges = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            edges.push((i * n + j, ((i + 1) % m) * n + j));
            edges.push((i * n + j, i * n + (j + 1) % n));
        }
    }
    Graph::new(m * n, edges)
}

fn hamming(d: usize, q: usize, n: usize) -> Result<Graph> {
    let digits = |mut x: usize| {
        let mut out = Vec::with_capacity(d);
        for _ in 0..d {
            out.push(x % q);
            x /= q;
        }
        out
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Graph::from_fn(n, |u, v| {
        words[u].iter().zip(&words[v]).filter(|(a, b)| a != b).count() == 1
    })
}

/// All `k`-subsets of `0..n`, lexicographically ordered.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().copied().collect());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Collinearity graph of the generalized quadrangle GQ(2,4), realized as
/// the intersection graph of the 27 lines on a smooth cubic surface:
/// lines `a_i`, `b_i` (i < 6) and `c_ij` (i < j < 6).
fn gq24() -> Graph {
    #[derive(Clone, Copy)]
    enum Line {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut lines: Vec<Line> = (0..6).map(Line::A).chain((0..6).map(Line::B)).collect();
    for i in 0..6 {
        for j in i + 1..6 {
            lines.push(Line::C(i, j));
        }
    }
    let meet = |x: Line, y: Line| match (x, y) {
        (Line::A(i), Line::B(j)) | (Line::B(j), Line::A(i)) => i != j,
        (Line::A(i), Line::C(j, k))
        | (Line::C(j, k), Line::A(i))
        | (Line::B(i), Line::C(j, k))
        | (Line::C(j, k), Line::B(i)) => i == j || i == k,
        (Line::C(i, j), Line::C(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    };
    Graph::from_fn(27, |u, v| meet(lines[u], lines[v])).expect("27 vertices is within range")
}

/// Returns `(v, k, λ, μ)` if `g` is strongly regular.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection(g.neighbors(v)).len();
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    // complete graphs have no non-adjacent pairs; report μ = 0
    Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}
