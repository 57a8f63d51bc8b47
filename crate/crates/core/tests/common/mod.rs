#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thinpos::{boundary_size, Graph, Ordering, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph on `n` vertices: each pair present with probability `p`,
/// integer weight drawn uniformly from `1..=max_w`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, max_w: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v, rng.gen_range(1..=max_w) as f64));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph with `n` in `lo..=hi` and density in `[0.2, 0.8]`.
pub fn random_instance<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.2..0.8);
    random_graph(rng, n, p, 4)
}

/// Width of every prefix, straight from the boundary definition.
pub fn brute_profile(g: &Graph, o: &Ordering) -> Vec<f64> {
    (0..=g.n())
        .map(|i| boundary_size(g, &VertexSet::from_vertices(g, o.prefix(i).iter().copied())))
        .collect()
}

/// Slope from the definition: weight to outsiders minus weight to other
/// insiders, summed pair by pair from the dense matrix.
pub fn brute_slope(g: &Graph, members: &[bool], v: usize) -> f64 {
    (0..g.n())
        .filter(|&u| u != v)
        .map(|u| if members[u] { -g.weight(v, u) } else { g.weight(v, u) })
        .sum()
}
