//! Brute-force pinch-cluster checks for small graphs.
//!
//! `A` is pinch convex when no sequence of additions reaches a set with
//! boundary below `|∂A|` without some intermediate set first rising strictly
//! above `|∂A|`. Equivalently: searching all supersets reachable through
//! sets of boundary `≤ |∂A|` never finds one with boundary `< |∂A|`.
//! Pinch concave is the same over removals, and a pinch cluster is both.
//!
//! These checks are exponential and exist to verify the fast paths.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::OracleError;
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for exhaustive checks.
pub const DEFAULT_LIMIT: usize = 16;
/// States are `u64` masks.
pub const HARD_LIMIT: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Add,
    Remove,
}

/// A sequence whose final step drops the boundary below the start without
/// any earlier step rising above it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub direction: Direction,
    pub sequence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub convex: bool,
    pub concave: bool,
    pub witness: Option<Witness>,
}

impl OracleReport {
    pub fn is_pinch_cluster(&self) -> bool {
        self.convex && self.concave
    }
}

/// Exhaustive checker with a configurable size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_LIMIT,
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Oracle {
        Oracle {
            limit: limit.min(HARD_LIMIT),
        }
    }

    fn guard(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() > self.limit {
            return Err(OracleError::TooLarge {
                n: g.n(),
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// `Ok(None)` if `a` is pinch convex, otherwise an addition witness.
    pub fn convex_witness(&self, g: &Graph, a: &VertexSet) -> Result<Option<Witness>, OracleError> {
        self.guard(g)?;
        Ok(search(g, a.to_mask(), Direction::Add))
    }

    /// `Ok(None)` if `a` is pinch concave, otherwise a removal witness.
    pub fn concave_witness(&self, g: &Graph, a: &VertexSet) -> Result<Option<Witness>, OracleError> {
        self.guard(g)?;
        Ok(search(g, a.to_mask(), Direction::Remove))
    }

    pub fn report(&self, g: &Graph, a: &VertexSet) -> Result<OracleReport, OracleError> {
        let convex = self.convex_witness(g, a)?;
        let concave = self.concave_witness(g, a)?;
        Ok(OracleReport {
            convex: convex.is_none(),
            concave: concave.is_none(),
            witness: convex.or(concave),
        })
    }

    pub fn is_pinch_cluster(&self, g: &Graph, a: &VertexSet) -> Result<bool, OracleError> {
        self.guard(g)?;
        let m = a.to_mask();
        Ok(search(g, m, Direction::Add).is_none() && search(g, m, Direction::Remove).is_none())
    }

    /// Every pinch cluster of `g`, in ascending mask order. The trivial
    /// clusters `∅` and `V` are included only when `include_trivial` is set.
    pub fn enumerate(&self, g: &Graph, include_trivial: bool) -> Result<Vec<VertexSet>, OracleError> {
        self.guard(g)?;
        let n = g.n();
        let full = full_mask(n);
        let mut out = Vec::new();
        for m in 0..=full {
            if !include_trivial && (m == 0 || m == full) {
                continue;
            }
            if search(g, m, Direction::Add).is_none() && search(g, m, Direction::Remove).is_none() {
                out.push(VertexSet::from_mask(g, m));
            }
        }
        Ok(out)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_slope(g: &Graph, mask: u64, v: usize) -> f64 {
    let inside: f64 = g
        .neighbors(v)
        .iter()
        .filter(|&&(u, _)| mask >> u & 1 == 1)
        .map(|&(_, w)| w)
        .sum();
    g.strength(v) - 2.0 * inside
}

fn mask_boundary(g: &Graph, mask: u64) -> f64 {
    (0..g.n())
        .filter(|&u| mask >> u & 1 == 1)
        .flat_map(|u| g.neighbors(u).iter())
        .filter(|&&(v, _)| mask >> v & 1 == 0)
        .fold(0.0, |acc, &(_, w)| acc + w)
}

/// Breadth-first search from `start` through single-vertex moves that never
/// lift the boundary above the starting value.
fn search(g: &Graph, start: u64, dir: Direction) -> Option<Witness> {
    let tol = g.tolerance();
    let n = g.n();
    let base = mask_boundary(g, start);
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut queue = VecDeque::from([(start, base)]);
    while let Some((state, b)) = queue.pop_front() {
        for v in 0..n {
            let member = state >> v & 1 == 1;
            let next = match dir {
                Direction::Add if !member => state | 1 << v,
                Direction::Remove if member => state & !(1 << v),
                _ => continue,
            };
            let s = mask_slope(g, state, v);
            let nb = match dir {
                Direction::Add => b + s,
                Direction::Remove => b - s,
            };
            if tol.positive(nb - base) {
                continue;
            }
            let Entry::Vacant(slot) = parent.entry(next) else {
                continue;
            };
            slot.insert((state, v));
            if tol.negative(nb - base) {
                return Some(Witness {
                    direction: dir,
                    sequence: unwind(&parent, start, next),
                });
            }
            queue.push_back((next, nb));
        }
    }
    None
}

fn unwind(parent: &HashMap<u64, (u64, usize)>, start: u64, mut at: u64) -> Vec<usize> {
    let mut seq = Vec::new();
    while at != start {
        let (prev, v) = parent[&at];
        seq.push(v);
        at = prev;
    }
    seq.reverse();
    seq
}

/// Pinch convexity with the default size guard.
pub fn is_pinch_convex_exact(g: &Graph, a: &VertexSet) -> Result<Option<Witness>, OracleError> {
    Oracle::default().convex_witness(g, a)
}

/// Pinch concavity by direct search over removals.
pub fn is_pinch_concave_exact(g: &Graph, a: &VertexSet) -> Result<Option<Witness>, OracleError> {
    Oracle::default().concave_witness(g, a)
}

/// Pinch concavity computed as convexity of the complement. Must agree with
/// [`is_pinch_concave_exact`].
pub fn is_pinch_concave_via_complement(g: &Graph, a: &VertexSet) -> Result<bool, OracleError> {
    Ok(is_pinch_convex_exact(g, &a.complement())?.is_none())
}

pub fn is_pinch_cluster_exact(g: &Graph, a: &VertexSet) -> Result<bool, OracleError> {
    Oracle::default().is_pinch_cluster(g, a)
}

pub fn enumerate_pinch_clusters(g: &Graph, include_trivial: bool) -> Result<Vec<VertexSet>, OracleError> {
    Oracle::default().enumerate(g, include_trivial)
}
