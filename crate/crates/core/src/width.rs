//! Width profiles, flats, width vectors and the incrementally maintained
//! [`Arrangement`] (ordering + slope table + profile).

use std::cmp::Ordering as CmpOrdering;

use serde::Serialize;

use crate::error::OrderingError;
use crate::graph::{Graph, Tolerance};
use crate::ordering::Ordering;
use crate::slopes::{build_slope_table, SlopeTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlatKind {
    Minimal,
    Maximal,
    Slope,
}

/// A maximal run of levels `lo..=hi` with equal width.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Flat {
    pub lo: usize,
    pub hi: usize,
    pub width: f64,
    pub kind: FlatKind,
}

impl Flat {
    pub fn contains(&self, level: usize) -> bool {
        self.lo <= level && level <= self.hi
    }

    /// Whether the flat avoids both end levels `0` and `n`.
    pub fn is_interior(&self, n: usize) -> bool {
        self.lo > 0 && self.hi < n
    }
}

/// Prefix boundary sizes `b_0..=b_N` and their flat decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct WidthProfile {
    b: Vec<f64>,
    flats: Vec<Flat>,
}

impl WidthProfile {
    /// Classifies flats for a sequence of widths. Levels whose widths agree
    /// within `tol` of their predecessor share a flat.
    pub fn from_levels(b: Vec<f64>, tol: Tolerance) -> WidthProfile {
        let flats = classify_flats(&b, tol);
        WidthProfile { b, flats }
    }

    /// Recomputes the profile from a slope table using `b_i = b_{i-1} + s_{i,i}`.
    pub fn from_table(o: &Ordering, t: &SlopeTable, tol: Tolerance) -> WidthProfile {
        let n = o.len();
        let mut b = Vec::with_capacity(n + 1);
        b.push(0.0);
        for i in 1..=n {
            b.push(b[i - 1] + t.at(o, i, i));
        }
        Self::from_levels(b, tol)
    }

    pub fn levels(&self) -> &[f64] {
        &self.b
    }

    #[inline]
    pub fn width(&self, level: usize) -> f64 {
        self.b[level]
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Number of vertices `N` (the profile has `N + 1` levels).
    pub fn n(&self) -> usize {
        self.b.len() - 1
    }

    pub fn max_width(&self) -> f64 {
        self.b.iter().copied().fold(0.0, f64::max)
    }

    pub fn flat_of(&self, level: usize) -> &Flat {
        let idx = self.flats.partition_point(|f| f.hi < level);
        &self.flats[idx]
    }

    /// Minimal flats that contain neither level 0 nor level N.
    pub fn interior_minima(&self) -> impl Iterator<Item = &Flat> + '_ {
        let n = self.n();
        self.flats
            .iter()
            .filter(move |f| f.kind == FlatKind::Minimal && f.is_interior(n))
    }

    /// Whether `level` lies in an interior locally minimal flat.
    pub fn is_interior_minimum(&self, level: usize) -> bool {
        let f = self.flat_of(level);
        f.kind == FlatKind::Minimal && f.is_interior(self.n())
    }

    pub fn width_vector(&self) -> WidthVector {
        width_vector(self)
    }
}

fn classify_flats(b: &[f64], tol: Tolerance) -> Vec<Flat> {
    let mut flats: Vec<Flat> = Vec::new();
    let mut lo = 0;
    for l in 1..=b.len() {
        if l == b.len() || !tol.eq(b[l], b[l - 1]) {
            flats.push(Flat {
                lo,
                hi: l - 1,
                width: b[lo],
                kind: FlatKind::Slope,
            });
            lo = l;
        }
    }
    if flats.len() == 1 {
        // Constant profile; only possible when every level has width zero.
        flats[0].kind = FlatKind::Minimal;
        return flats;
    }
    for idx in 0..flats.len() {
        let w = flats[idx].width;
        let left = idx.checked_sub(1).map(|p| flats[p].width);
        let right = flats.get(idx + 1).map(|f| f.width);
        let above = |x: Option<f64>| x.is_none_or(|x| x > w);
        let below = |x: Option<f64>| x.is_none_or(|x| x < w);
        flats[idx].kind = if above(left) && above(right) {
            FlatKind::Minimal
        } else if below(left) && below(right) {
            FlatKind::Maximal
        } else {
            FlatKind::Slope
        };
    }
    flats
}

/// Computes the profile of `o` with the slope recurrence, in `O(N + E)`.
pub fn width_profile(g: &Graph, o: &Ordering) -> WidthProfile {
    let n = g.n();
    debug_assert_eq!(o.len(), n);
    let mut inside = vec![0.0; n];
    let mut b = Vec::with_capacity(n + 1);
    b.push(0.0);
    for i in 1..=n {
        let v = o.vertex_at(i);
        // s_{i,i} = s_{i-1,i}: slope of v_i against the previous prefix.
        let s = g.strength(v) - 2.0 * inside[v];
        b.push(b[i - 1] + s);
        for &(u, w) in g.neighbors(v) {
            inside[u] += w;
        }
    }
    WidthProfile::from_levels(b, g.tolerance())
}

/// The profile's widths sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WidthVector(pub Vec<f64>);

impl WidthVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

pub fn width_vector(p: &WidthProfile) -> WidthVector {
    let mut w = p.b.clone();
    w.sort_by(|a, b| b.total_cmp(a));
    WidthVector(w)
}

/// Lexicographic comparison with the shorter vector zero-padded.
pub fn compare_widths(w: &WidthVector, u: &WidthVector) -> CmpOrdering {
    compare_widths_with(w, u, Tolerance::EXACT)
}

/// [`compare_widths`] treating components within `tol` as equal.
pub fn compare_widths_with(w: &WidthVector, u: &WidthVector, tol: Tolerance) -> CmpOrdering {
    let len = w.0.len().max(u.0.len());
    for idx in 0..len {
        let a = w.0.get(idx).copied().unwrap_or(0.0);
        let b = u.0.get(idx).copied().unwrap_or(0.0);
        match tol.cmp(a, b) {
            CmpOrdering::Equal => continue,
            other => return other,
        }
    }
    CmpOrdering::Equal
}

/// An ordering together with its slope table and width profile, kept
/// consistent under shifts by patching only the affected levels.
#[derive(Clone, Debug)]
pub struct Arrangement<'g> {
    graph: &'g Graph,
    ordering: Ordering,
    table: SlopeTable,
    profile: WidthProfile,
}

impl<'g> Arrangement<'g> {
    pub fn new(graph: &'g Graph, ordering: Ordering) -> Result<Self, OrderingError> {
        ordering.check_len(graph.n())?;
        let table = build_slope_table(graph, &ordering);
        let profile = WidthProfile::from_table(&ordering, &table, graph.tolerance());
        Ok(Arrangement {
            graph,
            ordering,
            table,
            profile,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn ordering(&self) -> &Ordering {
        &self.ordering
    }

    pub fn table(&self) -> &SlopeTable {
        &self.table
    }

    pub fn profile(&self) -> &WidthProfile {
        &self.profile
    }

    pub fn into_parts(self) -> (Ordering, WidthProfile, SlopeTable) {
        (self.ordering, self.profile, self.table)
    }

    /// Moves the vertex at position `from` to position `to`.
    ///
    /// Only levels between the two positions change. At each such level one
    /// vertex leaves the prefix and one joins, so
    /// `b'_l = b_l - s_l(out) + s_l(in) + 2·a(out, in)` and the row of slopes
    /// is patched along the two vertices' neighborhoods.
    pub fn shift(&mut self, from: usize, to: usize) -> Result<(), OrderingError> {
        self.ordering.validate_shift(from, to)?;
        let g = self.graph;
        let mover = self.ordering.vertex_at(from);
        let (lo, hi) = (from.min(to), from.max(to) - 1);
        let mut b = std::mem::take(&mut self.profile.b);
        for level in lo..=hi {
            let (out, inn) = if from < to {
                (mover, self.ordering.vertex_at(level + 1))
            } else {
                (self.ordering.vertex_at(level), mover)
            };
            b[level] = b[level] - self.table.get(level, out)
                + self.table.get(level, inn)
                + 2.0 * g.weight(out, inn);
            self.table.swap_member(g, level, out, inn);
        }
        self.ordering.shift_in_place(from, to);
        self.profile = WidthProfile::from_levels(b, g.tolerance());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::{boundary_size, VertexSet};

    fn brute_profile(g: &Graph, o: &Ordering) -> Vec<f64> {
        (0..=g.n())
            .map(|i| boundary_size(g, &VertexSet::from_vertices(g, o.prefix(i).iter().copied())))
            .collect()
    }

    fn spans(p: &WidthProfile, kind: FlatKind) -> Vec<(usize, usize)> {
        p.flats()
            .iter()
            .filter(|f| f.kind == kind)
            .map(|f| (f.lo, f.hi))
            .collect()
    }

    #[test]
    fn barbell_identity_profile() {
        let g = generate::barbell(3).unwrap();
        let p = width_profile(&g, &Ordering::identity(6));
        assert_eq!(p.levels(), &[0.0, 2.0, 2.0, 1.0, 2.0, 2.0, 0.0]);
        assert_eq!(spans(&p, FlatKind::Minimal), vec![(0, 0), (3, 3), (6, 6)]);
        assert_eq!(spans(&p, FlatKind::Maximal), vec![(1, 2), (4, 5)]);
    }

    #[test]
    fn path_identity_profile() {
        let g = generate::path(4).unwrap();
        let p = width_profile(&g, &Ordering::identity(4));
        assert_eq!(p.levels(), &[0.0, 1.0, 1.0, 1.0, 0.0]);
        assert_eq!(spans(&p, FlatKind::Maximal), vec![(1, 3)]);
    }

    #[test]
    fn edgeless_profile_is_one_minimal_flat() {
        let g = Graph::from_edges(5, []).unwrap();
        let p = width_profile(&g, &Ordering::identity(5));
        assert!(p.levels().iter().all(|&b| b == 0.0));
        assert_eq!(p.flats().len(), 1);
        assert_eq!((p.flats()[0].lo, p.flats()[0].hi), (0, 5));
        assert_eq!(p.flats()[0].kind, FlatKind::Minimal);
        assert!(width_vector(&p).0.iter().all(|&w| w == 0.0));
    }

    #[test]
    fn width_vector_sorts_descending() {
        let g = generate::barbell(3).unwrap();
        let p = width_profile(&g, &Ordering::identity(6));
        assert_eq!(width_vector(&p).0, vec![2.0, 2.0, 2.0, 2.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn lexicographic_comparison() {
        let thin = WidthVector(vec![3.0, 2.0, 2.0, 2.0, 2.0]);
        let thick = WidthVector(vec![4.0, 3.0, 3.0, 2.0, 2.0]);
        assert_eq!(compare_widths(&thin, &thick), CmpOrdering::Less);
        assert_eq!(compare_widths(&thick, &thin), CmpOrdering::Greater);
        assert_eq!(compare_widths(&thin, &thin), CmpOrdering::Equal);
        let short = WidthVector(vec![2.0, 2.0]);
        let long = WidthVector(vec![2.0, 2.0, 1.0]);
        assert_eq!(compare_widths(&short, &long), CmpOrdering::Less);
    }

    #[test]
    fn tolerant_comparison() {
        let a = WidthVector(vec![1.0, 0.5]);
        let b = WidthVector(vec![1.0 + 1e-12, 0.5]);
        assert_eq!(compare_widths_with(&a, &b, Tolerance(1e-9)), CmpOrdering::Equal);
        assert_eq!(compare_widths(&a, &b), CmpOrdering::Less);
    }

    #[test]
    fn barbell_shift_matches_recomputation() {
        let g = generate::barbell(3).unwrap();
        let o = Ordering::from_vertices(vec![0, 3, 1, 4, 2, 5]).unwrap();
        let mut arr = Arrangement::new(&g, o.clone()).unwrap();
        assert_eq!(arr.profile().levels(), brute_profile(&g, &o).as_slice());
        assert_eq!(arr.profile().levels(), &[0.0, 2.0, 5.0, 5.0, 5.0, 2.0, 0.0]);
        arr.shift(2, 3).unwrap();
        assert_eq!(arr.ordering().vertices(), &[0, 1, 3, 4, 2, 5]);
        assert_eq!(arr.profile().levels(), &[0.0, 2.0, 2.0, 5.0, 5.0, 2.0, 0.0]);
        assert_eq!(arr.table(), &build_slope_table(&g, arr.ordering()));
    }

    #[test]
    fn reversed_ordering_mirrors_profile() {
        let g = generate::triangle_chain(3).unwrap();
        let o = Ordering::from_vertices(vec![4, 0, 7, 2, 8, 1, 3, 6, 5]).unwrap();
        let p = width_profile(&g, &o);
        let r = width_profile(&g, &o.reversed());
        let n = g.n();
        for i in 0..=n {
            assert_eq!(r.width(i), p.width(n - i));
        }
    }

    #[test]
    fn shift_rejects_bad_positions() {
        let g = generate::path(4).unwrap();
        let mut arr = Arrangement::new(&g, Ordering::identity(4)).unwrap();
        assert!(arr.shift(0, 1).is_err());
        assert!(arr.shift(5, 1).is_err());
        assert!(Arrangement::new(&g, Ordering::identity(3)).is_err());
    }
}
