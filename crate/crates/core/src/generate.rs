//! Deterministic synthetic graphs for tests and demos. All edges have unit
//! weight.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;

fn invalid(msg: &str) -> GraphError {
    GraphError::InvalidParameter(msg.to_string())
}

fn clique(offset: usize, m: usize, edges: &mut Vec<(usize, usize, f64)>) {
    for u in 0..m {
        for v in u + 1..m {
            edges.push((offset + u, offset + v, 1.0));
        }
    }
}

/// Path `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v, 1.0)))
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    clique(0, n, &mut edges);
    Graph::from_edges(n, edges)
}

/// Two cliques `K_m` on `0..m` and `m..2m` joined by the edge `(m-1, m)`.
pub fn barbell(m: usize) -> Result<Graph, GraphError> {
    if m < 2 {
        return Err(invalid("barbell needs m >= 2"));
    }
    let mut edges = Vec::new();
    clique(0, m, &mut edges);
    clique(m, m, &mut edges);
    edges.push((m - 1, m, 1.0));
    Graph::from_edges(2 * m, edges)
}

/// Two cliques `K_m` joined by `bridges` disjoint strands of two
/// intermediate vertices each, so the graph can be cut into two halves at
/// three different places, each time by cutting `bridges` edges.
///
/// Vertices: left clique `0..m`, right clique `m..2m`, then strand `s` uses
/// `2m + 2s` (left side) and `2m + 2s + 1` (right side).
pub fn neck(m: usize, bridges: usize) -> Result<Graph, GraphError> {
    if m < 2 || bridges == 0 || bridges > m {
        return Err(invalid("neck needs m >= 2 and 1 <= bridges <= m"));
    }
    let mut edges = Vec::new();
    clique(0, m, &mut edges);
    clique(m, m, &mut edges);
    for s in 0..bridges {
        let (x, y) = (2 * m + 2 * s, 2 * m + 2 * s + 1);
        edges.push((s, x, 1.0));
        edges.push((x, y, 1.0));
        edges.push((y, m + s, 1.0));
    }
    Graph::from_edges(2 * m + 2 * bridges, edges)
}

/// `t` triangles `{3i, 3i+1, 3i+2}` with unit bridges `(3i+2, 3i+3)`.
pub fn triangle_chain(t: usize) -> Result<Graph, GraphError> {
    if t == 0 {
        return Err(invalid("triangle chain needs t >= 1"));
    }
    let mut edges = Vec::new();
    for i in 0..t {
        clique(3 * i, 3, &mut edges);
        if i + 1 < t {
            edges.push((3 * i + 2, 3 * i + 3, 1.0));
        }
    }
    Graph::from_edges(3 * t, edges)
}

/// Planted partition: consecutive groups of the given sizes, each pair
/// joined with probability `p_in` inside a group and `p_out` across groups.
pub fn planted(sizes: &[usize], p_in: f64, p_out: f64, seed: u64) -> Result<Graph, GraphError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(invalid("planted needs non-empty groups"));
    }
    if !(0.0..=1.0).contains(&p_in) || !(0.0..=1.0).contains(&p_out) {
        return Err(invalid("probabilities must lie in [0, 1]"));
    }
    let group: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(gi, &s)| std::iter::repeat_n(gi, s))
        .collect();
    let n = group.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if group[u] == group[v] { p_in } else { p_out };
            if rng.gen::<f64>() < p {
                edges.push((u, v, 1.0));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barbell3_shape() {
        let g = barbell(3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.weight(2, 3), 1.0);
        assert_eq!(g.weight(0, 3), 0.0);
    }

    #[test]
    fn planted_disjoint_cliques() {
        let g = planted(&[5, 5], 1.0, 0.0, 7).unwrap();
        assert_eq!(g.edge_count(), 20);
        assert_eq!(g.components(), vec![(0..5).collect::<Vec<_>>(), (5..10).collect()]);
    }

    #[test]
    fn planted_is_seeded() {
        let a = planted(&[6, 6], 0.7, 0.2, 3).unwrap();
        let b = planted(&[6, 6], 0.7, 0.2, 3).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn chain_and_neck() {
        let g = triangle_chain(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 11));
        let h = neck(4, 3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (14, 12 + 9));
    }

    #[test]
    fn invalid_parameters() {
        assert!(barbell(1).is_err());
        assert!(neck(3, 4).is_err());
        assert!(planted(&[3, 0], 1.0, 0.0, 1).is_err());
        assert!(planted(&[3], 1.5, 0.0, 1).is_err());
    }
}
