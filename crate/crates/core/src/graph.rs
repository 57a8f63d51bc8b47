//! Weighted undirected graphs, vertex subsets, boundary sizes and slopes.
//!
//! The graph keeps a dense symmetric weight matrix (the slope table is
//! inherently quadratic, so dense lookups are the common case) together with
//! an adjacency-list view for sparse iteration.

use std::cmp::Ordering as CmpOrdering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// Absolute tolerance used for every width and slope comparison.
///
/// A zero tolerance means exact comparison, which is what integer-weighted
/// graphs get by default: sums of integers below 2^53 are exact in `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance(0.0);

    #[inline]
    pub fn positive(self, x: f64) -> bool {
        x > self.0
    }

    #[inline]
    pub fn negative(self, x: f64) -> bool {
        x < -self.0
    }

    #[inline]
    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }

    #[inline]
    pub fn cmp(self, a: f64, b: f64) -> CmpOrdering {
        if self.eq(a, b) {
            CmpOrdering::Equal
        } else if a < b {
            CmpOrdering::Less
        } else {
            CmpOrdering::Greater
        }
    }
}

/// Symmetric, non-negative, loop-free weighted graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    weights: Vec<f64>,
    adjacency: Vec<Vec<(usize, f64)>>,
    strength: Vec<f64>,
    labels: Option<Vec<String>>,
    tolerance: Tolerance,
    integral: bool,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("total_weight", &self.total_weight())
            .field("tolerance", &self.tolerance.0)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from weighted edges. Repeated pairs sum their weights,
    /// zero-weight edges are dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut weights = vec![0.0; n * n];
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !w.is_finite() {
                return Err(GraphError::NonFiniteWeight { u, v });
            }
            if w < 0.0 {
                return Err(GraphError::NegativeWeight { u, v, weight: w });
            }
            weights[u * n + v] += w;
            weights[v * n + u] += w;
        }
        Ok(Self::from_validated(n, weights))
    }

    /// Builds a graph from a dense row-major `n × n` matrix.
    pub fn from_dense(n: usize, matrix: &[f64]) -> Result<Graph, GraphError> {
        if matrix.len() != n * n {
            return Err(GraphError::ShapeMismatch {
                expected: n * n,
                found: matrix.len(),
            });
        }
        for u in 0..n {
            if matrix[u * n + u] != 0.0 {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for v in 0..n {
                let w = matrix[u * n + v];
                if !w.is_finite() {
                    return Err(GraphError::NonFiniteWeight { u, v });
                }
                if w < 0.0 {
                    return Err(GraphError::NegativeWeight { u, v, weight: w });
                }
                if w != matrix[v * n + u] {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Self::from_validated(n, matrix.to_vec()))
    }

    fn from_validated(n: usize, weights: Vec<f64>) -> Graph {
        let mut adjacency = vec![Vec::new(); n];
        let mut strength = vec![0.0; n];
        let mut max_weight: f64 = 0.0;
        let mut integral = true;
        for u in 0..n {
            for v in 0..n {
                let w = weights[u * n + v];
                if w > 0.0 {
                    adjacency[u].push((v, w));
                    strength[u] += w;
                    max_weight = max_weight.max(w);
                    integral &= w.fract() == 0.0;
                }
            }
        }
        let tolerance = if integral {
            Tolerance::EXACT
        } else {
            Tolerance(1e-9 * max_weight)
        };
        Graph {
            n,
            weights,
            adjacency,
            strength,
            labels: None,
            tolerance,
            integral,
        }
    }

    /// Attaches external vertex names; `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::ShapeMismatch {
                expected: self.n,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Overrides the comparison tolerance.
    pub fn with_tolerance(mut self, eps: f64) -> Graph {
        self.tolerance = Tolerance(eps.max(0.0));
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.weights[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adjacency[u]
    }

    /// Sum of the weights incident to `u`.
    #[inline]
    pub fn strength(&self, u: usize) -> f64 {
        self.strength[u]
    }

    pub fn strengths(&self) -> &[f64] {
        &self.strength
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tolerance
    }

    /// True when every edge weight is a whole number.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `u`, or its index when the graph is unlabeled.
    pub fn label(&self, u: usize) -> String {
        match &self.labels {
            Some(l) => l[u].clone(),
            None => u.to_string(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn total_weight(&self) -> f64 {
        self.strength.iter().fold(0.0, |acc, w| acc + w) / 2.0
    }

    pub fn max_weight(&self) -> f64 {
        self.adjacency
            .iter()
            .flatten()
            .map(|&(_, w)| w)
            .fold(0.0, f64::max)
    }

    /// Edges `(u, v, w)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(v, _) in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A subset of a graph's vertices with its boundary size kept up to date.
#[derive(Clone, Debug)]
pub struct VertexSet {
    members: FixedBitSet,
    boundary: f64,
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<CmpOrdering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> CmpOrdering {
        self.members.ones().cmp(other.members.ones())
    }
}

impl VertexSet {
    pub fn empty(g: &Graph) -> VertexSet {
        VertexSet {
            members: FixedBitSet::with_capacity(g.n()),
            boundary: 0.0,
        }
    }

    pub fn full(g: &Graph) -> VertexSet {
        let mut members = FixedBitSet::with_capacity(g.n());
        members.insert_range(..);
        VertexSet {
            members,
            boundary: 0.0,
        }
    }

    /// Panics if a vertex is out of range.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(g: &Graph, vertices: I) -> VertexSet {
        let mut members = FixedBitSet::with_capacity(g.n());
        for v in vertices {
            assert!(v < g.n(), "vertex {v} out of range for graph on {} vertices", g.n());
            members.insert(v);
        }
        let boundary = boundary_of(g, &members);
        VertexSet { members, boundary }
    }

    /// Builds from a bitmask over the first 64 vertices.
    pub fn from_mask(g: &Graph, mask: u64) -> VertexSet {
        Self::from_vertices(g, (0..g.n().min(64)).filter(|&v| mask >> v & 1 == 1))
    }

    pub fn to_mask(&self) -> u64 {
        self.members.ones().filter(|&v| v < 64).fold(0, |m, v| m | 1 << v)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Number of vertices in the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    /// Cached boundary size `|∂A|`.
    #[inline]
    pub fn boundary(&self) -> f64 {
        self.boundary
    }

    /// Adds `v`; returns false if it was already a member.
    pub fn insert(&mut self, g: &Graph, v: usize) -> bool {
        if self.members.contains(v) {
            return false;
        }
        self.boundary += slope(g, self, v);
        self.members.insert(v);
        true
    }

    /// Removes `v`; returns false if it was not a member.
    pub fn remove(&mut self, g: &Graph, v: usize) -> bool {
        if !self.members.contains(v) {
            return false;
        }
        self.boundary -= slope(g, self, v);
        self.members.set(v, false);
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn complement(&self) -> VertexSet {
        let mut members = self.members.clone();
        members.toggle_range(..);
        VertexSet {
            members,
            boundary: self.boundary,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, g: &Graph, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let boundary = boundary_of(g, &members);
        VertexSet { members, boundary }
    }
}

fn boundary_of(g: &Graph, members: &FixedBitSet) -> f64 {
    members
        .ones()
        .flat_map(|u| g.neighbors(u).iter())
        .filter(|&&(v, _)| !members.contains(v))
        .fold(0.0, |acc, &(_, w)| acc + w)
}

/// Total weight of edges with exactly one endpoint in `a`, recomputed from
/// scratch.
pub fn boundary_size(g: &Graph, a: &VertexSet) -> f64 {
    boundary_of(g, &a.members)
}

/// Slope of `v` with respect to `a`: weight from `v` to vertices outside `a`
/// minus weight from `v` to other vertices inside `a`.
///
/// For `v ∉ a` this is the change in `|∂a|` when `v` is added; for `v ∈ a`
/// it is the decrease when `v` is removed.
pub fn slope(g: &Graph, a: &VertexSet, v: usize) -> f64 {
    let inside: f64 = g
        .neighbors(v)
        .iter()
        .filter(|&&(u, _)| a.contains(u))
        .map(|&(_, w)| w)
        .sum();
    g.strength(v) - 2.0 * inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn boundary_of_empty_and_full_is_zero() {
        let g = generate::barbell(3).unwrap();
        assert_eq!(boundary_size(&g, &VertexSet::empty(&g)), 0.0);
        assert_eq!(boundary_size(&g, &VertexSet::full(&g)), 0.0);
    }

    #[test]
    fn barbell_boundary_and_slopes() {
        let g = generate::barbell(3).unwrap();
        let a = VertexSet::from_vertices(&g, [0, 1, 2]);
        assert_eq!(boundary_size(&g, &a), 1.0);
        assert_eq!(a.boundary(), 1.0);
        assert_eq!(slope(&g, &a, 0), -2.0);
        assert_eq!(slope(&g, &a, 3), 1.0);
    }

    #[test]
    fn single_edge_slope_from_empty_set() {
        let g = Graph::from_edges(2, [(0, 1, 2.5)]).unwrap();
        assert_eq!(slope(&g, &VertexSet::empty(&g), 1), 2.5);
    }

    #[test]
    fn rejects_self_loops_and_negative_weights() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1, 1.0)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1, -1.0)]),
            Err(GraphError::NegativeWeight { .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2, 1.0)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn zero_weight_edges_are_absent_and_duplicates_sum() {
        let g = Graph::from_edges(3, [(0, 1, 0.0), (1, 2, 1.0), (2, 1, 1.0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(1, 2), 2.0);
        assert!(g.neighbors(0).is_empty());
    }

    #[test]
    fn dense_constructor_checks_symmetry() {
        let m = [0.0, 1.0, 2.0, 0.0];
        assert!(matches!(
            Graph::from_dense(2, &m),
            Err(GraphError::Asymmetric { .. })
        ));
    }

    #[test]
    fn tolerance_defaults() {
        assert_eq!(generate::barbell(3).unwrap().tolerance(), Tolerance::EXACT);
        let g = Graph::from_edges(2, [(0, 1, 0.5)]).unwrap();
        assert!(!g.is_integral());
        assert!((g.tolerance().0 - 0.5e-9).abs() < 1e-20);
    }

    #[test]
    fn cached_boundary_tracks_insert_and_remove() {
        let g = generate::triangle_chain(3).unwrap();
        let mut a = VertexSet::empty(&g);
        for v in [4, 0, 8, 3] {
            a.insert(&g, v);
            assert_eq!(a.boundary(), boundary_size(&g, &a));
        }
        a.remove(&g, 0);
        assert_eq!(a.boundary(), boundary_size(&g, &a));
    }
}
