//! Weak-reducibility detection and the width-reduction loop.
//!
//! A locally maximal flat `[i, j]` sits between two locally minimal flats
//! `[i⁻, j⁻]` and `[i⁺, j⁺]`. It is weakly reducible when some position `k`
//! satisfies one of
//!
//! 1. `j⁻ < k ≤ i`, `s_{i,k} > 0` and `s_{i,k} - s_{i,i+1} - 2a(v_k, v_{i+1}) > 0`
//!    (shift `k` to `i + 1`), or
//! 2. `j < k ≤ i⁺`, `s_{j,k} < 0` and `-s_{j,k} + s_{j,j} - 2a(v_k, v_j) > 0`
//!    (shift `k` to `j`).
//!
//! Either shift strictly lowers the width vector, so repeating until no
//! maximum is weakly reducible terminates in a strongly irreducible ordering.

use serde::Serialize;

use crate::error::{Error, ThinError};
use crate::graph::Graph;
use crate::ordering::Ordering;
use crate::slopes::SlopeTable;
use crate::width::{Arrangement, FlatKind, WidthProfile, WidthVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShiftCase {
    /// Condition 1: pull `v_k` out of the prefix, past level `i`.
    AddSide,
    /// Condition 2: push `v_k` into the prefix, before level `j`.
    RemoveSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftMove {
    pub case: ShiftCase,
    /// Source position.
    pub k: usize,
    /// Destination position: `i + 1` for [`ShiftCase::AddSide`], `j` otherwise.
    pub target: usize,
    /// The maximal flat `[i, j]` being reduced.
    pub flat: (usize, usize),
    /// Last level of the minimal flat to the left (`j⁻`).
    pub left_min: usize,
    /// First level of the minimal flat to the right (`i⁺`).
    pub right_min: usize,
}

impl ShiftMove {
    /// Levels whose prefix sets this move changes.
    pub fn affected_levels(&self) -> (usize, usize) {
        (self.k.min(self.target), self.k.max(self.target) - 1)
    }
}

/// For each locally maximal flat, the last level of the nearest minimal flat
/// on its left and the first level of the nearest one on its right.
pub fn flanking_minima(p: &WidthProfile) -> Vec<(usize, usize, usize, usize)> {
    let flats = p.flats();
    let mut out = Vec::new();
    let mut left_min = None;
    for (idx, f) in flats.iter().enumerate() {
        match f.kind {
            FlatKind::Minimal => left_min = Some(f.hi),
            FlatKind::Maximal => {
                let right = flats[idx + 1..]
                    .iter()
                    .find(|g| g.kind == FlatKind::Minimal)
                    .map(|g| g.lo);
                // End flats are always minimal when the profile is not constant.
                if let (Some(jm), Some(ip)) = (left_min, right) {
                    out.push((f.lo, f.hi, jm, ip));
                }
            }
            FlatKind::Slope => {}
        }
    }
    out
}

/// Finds the first weakly reducible maximum: leftmost maximal flat,
/// condition 1 before condition 2, smallest `k`.
pub fn find_weak_reduction(
    g: &Graph,
    o: &Ordering,
    p: &WidthProfile,
    t: &SlopeTable,
) -> Option<ShiftMove> {
    let tol = g.tolerance();
    for (i, j, left_min, right_min) in flanking_minima(p) {
        let next = o.vertex_at(i + 1);
        let s_next = t.get(i, next);
        for k in left_min + 1..=i {
            let vk = o.vertex_at(k);
            let s = t.get(i, vk);
            if tol.positive(s) && tol.positive(s - s_next - 2.0 * g.weight(vk, next)) {
                return Some(ShiftMove {
                    case: ShiftCase::AddSide,
                    k,
                    target: i + 1,
                    flat: (i, j),
                    left_min,
                    right_min,
                });
            }
        }
        let vj = o.vertex_at(j);
        let s_jj = t.get(j, vj);
        for k in j + 1..=right_min {
            let vk = o.vertex_at(k);
            let s = t.get(j, vk);
            if tol.negative(s) && tol.positive(-s + s_jj - 2.0 * g.weight(vk, vj)) {
                return Some(ShiftMove {
                    case: ShiftCase::RemoveSide,
                    k,
                    target: j,
                    flat: (i, j),
                    left_min,
                    right_min,
                });
            }
        }
    }
    None
}

/// Result of [`thin`].
#[derive(Clone, Debug)]
pub struct Thinned {
    pub ordering: Ordering,
    pub profile: WidthProfile,
    pub steps: u64,
}

impl Thinned {
    pub fn width_vector(&self) -> WidthVector {
        self.profile.width_vector()
    }
}

/// Default defect-detector cap: `10·N²·max(1, max b)`.
pub fn default_step_limit(n: usize, max_width: f64) -> u64 {
    let n = n as u64;
    let w = max_width.max(1.0).ceil().min(u64::MAX as f64) as u64;
    10u64.saturating_mul(n).saturating_mul(n).saturating_mul(w)
}

/// Steps an [`Arrangement`] through weak reductions one move at a time.
pub struct Thinner<'g> {
    arrangement: Arrangement<'g>,
    steps: u64,
    limit: u64,
}

impl<'g> Thinner<'g> {
    pub fn new(g: &'g Graph, o: Ordering) -> Result<Self, Error> {
        let arrangement = Arrangement::new(g, o)?;
        let limit = default_step_limit(g.n(), arrangement.profile().max_width());
        Ok(Thinner {
            arrangement,
            steps: 0,
            limit,
        })
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = limit;
        self
    }

    pub fn arrangement(&self) -> &Arrangement<'g> {
        &self.arrangement
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Applies one reducing move, or returns `Ok(None)` when the ordering is
    /// strongly irreducible.
    pub fn step(&mut self) -> Result<Option<ShiftMove>, ThinError> {
        let arr = &self.arrangement;
        let Some(mv) = find_weak_reduction(arr.graph(), arr.ordering(), arr.profile(), arr.table())
        else {
            return Ok(None);
        };
        if self.steps >= self.limit {
            return Err(ThinError::StepLimit { limit: self.limit });
        }
        self.arrangement
            .shift(mv.k, mv.target)
            .expect("weak reduction yields in-range positions");
        self.steps += 1;
        Ok(Some(mv))
    }

    pub fn run(mut self) -> Result<Thinned, ThinError> {
        while self.step()?.is_some() {}
        Ok(self.finish())
    }

    pub fn finish(self) -> Thinned {
        let (ordering, profile, _) = self.arrangement.into_parts();
        Thinned {
            ordering,
            profile,
            steps: self.steps,
        }
    }
}

/// Reduces `o` to a strongly irreducible ordering.
pub fn thin(g: &Graph, o: Ordering) -> Result<Thinned, Error> {
    Ok(Thinner::new(g, o)?.run()?)
}

/// True when no maximum of `o` is weakly reducible.
pub fn is_strongly_irreducible(g: &Graph, o: &Ordering, p: &WidthProfile, t: &SlopeTable) -> bool {
    find_weak_reduction(g, o, p, t).is_none()
}
