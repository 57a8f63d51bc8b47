//! The table of slopes `s(i, v) = s_{A_i}(v)` for every prefix level of an
//! ordering.
//!
//! Rows are indexed by level `0..=N` and columns by vertex id, so a shift
//! only rewrites the rows whose prefix set changed. The positional entry
//! `s_{i,j}` is `get(i, o.vertex_at(j))`.

use crate::graph::Graph;
use crate::ordering::Ordering;

#[derive(Clone, Debug, PartialEq)]
pub struct SlopeTable {
    n: usize,
    data: Vec<f64>,
}

impl SlopeTable {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Slope of vertex `v` with respect to the prefix of length `level`.
    #[inline]
    pub fn get(&self, level: usize, v: usize) -> f64 {
        self.data[level * self.n + v]
    }

    /// `s_{i,j}` in positional indexing.
    #[inline]
    pub fn at(&self, o: &Ordering, i: usize, j: usize) -> f64 {
        self.get(i, o.vertex_at(j))
    }

    pub fn row(&self, level: usize) -> &[f64] {
        &self.data[level * self.n..(level + 1) * self.n]
    }

    #[inline]
    fn row_mut(&mut self, level: usize) -> &mut [f64] {
        &mut self.data[level * self.n..(level + 1) * self.n]
    }

    /// Rewrites the row at `level` after `removed` leaves and `added` joins
    /// that prefix set.
    pub(crate) fn swap_member(&mut self, g: &Graph, level: usize, removed: usize, added: usize) {
        let row = self.row_mut(level);
        for &(u, w) in g.neighbors(removed) {
            row[u] += 2.0 * w;
        }
        for &(u, w) in g.neighbors(added) {
            row[u] -= 2.0 * w;
        }
    }
}

/// Builds the full table in `O(N²)`: row 0 is the vertex strengths, and each
/// later row subtracts `2·a(v_i, ·)` as `v_i` enters the prefix.
pub fn build_slope_table(g: &Graph, o: &Ordering) -> SlopeTable {
    let mut t = SlopeTable {
        n: 0,
        data: Vec::new(),
    };
    t.rebuild(g, o);
    t
}

impl SlopeTable {
    /// Recomputes the table for a new graph or ordering, reusing the
    /// allocation when it is large enough.
    pub fn rebuild(&mut self, g: &Graph, o: &Ordering) {
        let n = g.n();
        debug_assert_eq!(o.len(), n);
        self.n = n;
        self.data.resize((n + 1) * n, 0.0);
        let data = &mut self.data;
        data[..n].copy_from_slice(g.strengths());
        for i in 1..=n {
            let (done, rest) = data.split_at_mut(i * n);
            let row = &mut rest[..n];
            row.copy_from_slice(&done[(i - 1) * n..]);
            for &(u, w) in g.neighbors(o.vertex_at(i)) {
                row[u] -= 2.0 * w;
            }
        }
    }
}
