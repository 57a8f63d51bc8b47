//! Vertex orderings and shifts.
//!
//! Positions are 1-based throughout the public API: `vertex_at(1)` is the
//! first vertex and level `i` refers to the prefix of the first `i` vertices.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::OrderingError;

/// A bijection between vertices `0..n` and positions `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    vert: Vec<usize>,
    pos: Vec<usize>,
}

impl Ordering {
    pub fn identity(n: usize) -> Ordering {
        Ordering {
            vert: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// `vertices[p]` is the vertex placed at position `p + 1`.
    pub fn from_vertices(vertices: Vec<usize>) -> Result<Ordering, OrderingError> {
        let n = vertices.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in vertices.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(OrderingError::NotPermutation { vertex: v });
            }
            pos[v] = p;
        }
        Ok(Ordering { vert: vertices, pos })
    }

    /// Uniform random ordering (Fisher–Yates).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Ordering {
        let mut vert: Vec<usize> = (0..n).collect();
        vert.shuffle(rng);
        Self::from_vertices(vert).expect("shuffle of 0..n is a permutation")
    }

    /// The vertices of `first` (ascending) followed by the rest (ascending).
    pub fn with_prefix(n: usize, first: &[usize]) -> Ordering {
        let mut mark = vec![false; n];
        let mut head: Vec<usize> = first.to_vec();
        head.sort_unstable();
        head.dedup();
        for &v in &head {
            mark[v] = true;
        }
        head.extend((0..n).filter(|&v| !mark[v]));
        Self::from_vertices(head).expect("prefix ordering is a permutation")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vert.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vert.is_empty()
    }

    /// Vertex at 1-based position `p`.
    #[inline]
    pub fn vertex_at(&self, p: usize) -> usize {
        self.vert[p - 1]
    }

    /// 1-based position of vertex `v`.
    #[inline]
    pub fn position_of(&self, v: usize) -> usize {
        self.pos[v] + 1
    }

    /// Vertices in position order.
    pub fn vertices(&self) -> &[usize] {
        &self.vert
    }

    /// Vertices at positions `1..=level`.
    pub fn prefix(&self, level: usize) -> &[usize] {
        &self.vert[..level]
    }

    pub fn reversed(&self) -> Ordering {
        let mut vert = self.vert.clone();
        vert.reverse();
        Self::from_vertices(vert).expect("reversal preserves the bijection")
    }

    pub fn check_len(&self, n: usize) -> Result<(), OrderingError> {
        if self.len() != n {
            return Err(OrderingError::LengthMismatch {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn validate_shift(&self, from: usize, to: usize) -> Result<(), OrderingError> {
        let n = self.len();
        if from == 0 || to == 0 || from > n || to > n || from == to {
            return Err(OrderingError::BadShift { from, to, n });
        }
        Ok(())
    }

    /// Moves the vertex at `from` to `to`; the vertices in between slide one
    /// place toward `from`.
    pub(crate) fn shift_in_place(&mut self, from: usize, to: usize) {
        let (lo, hi) = (from.min(to) - 1, from.max(to));
        if from < to {
            self.vert[lo..hi].rotate_left(1);
        } else {
            self.vert[lo..hi].rotate_right(1);
        }
        for p in lo..hi {
            self.pos[self.vert[p]] = p;
        }
    }
}

/// Returns a new ordering with the vertex at position `from` moved to
/// position `to` (both 1-based).
pub fn apply_shift(o: &Ordering, from: usize, to: usize) -> Result<Ordering, OrderingError> {
    o.validate_shift(from, to)?;
    let mut out = o.clone();
    out.shift_in_place(from, to);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_moves_and_slides() {
        let o = Ordering::from_vertices(vec![0, 3, 1, 4, 2, 5]).unwrap();
        let s = apply_shift(&o, 2, 3).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 3, 4, 2, 5]);
        let p = apply_shift(&Ordering::identity(4), 1, 4).unwrap();
        assert_eq!(p.vertices(), &[1, 2, 3, 0]);
        let q = apply_shift(&Ordering::identity(4), 4, 1).unwrap();
        assert_eq!(q.vertices(), &[3, 0, 1, 2]);
        for v in 0..4 {
            assert_eq!(q.vertex_at(q.position_of(v)), v);
        }
    }

    #[test]
    fn adjacent_shifts_are_inverse() {
        let o = Ordering::from_vertices(vec![2, 0, 4, 1, 3]).unwrap();
        for k in 1..5 {
            let there = apply_shift(&o, k, k + 1).unwrap();
            assert_eq!(apply_shift(&there, k + 1, k).unwrap(), o);
        }
    }

    #[test]
    fn bad_shifts_are_rejected() {
        let o = Ordering::identity(3);
        assert!(apply_shift(&o, 0, 2).is_err());
        assert!(apply_shift(&o, 2, 2).is_err());
        assert!(apply_shift(&o, 1, 4).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Ordering::from_vertices(vec![0, 0, 1]).is_err());
        assert!(Ordering::from_vertices(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn prefix_ordering() {
        let o = Ordering::with_prefix(6, &[4, 1]);
        assert_eq!(o.vertices(), &[1, 4, 0, 2, 3, 5]);
    }
}
