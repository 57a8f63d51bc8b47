//! Cluster a point cloud through its k-nearest-neighbour similarity graph.
//!
//!     cargo run --release --example knn_points

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thinpos::ingest::knn_similarity_graph;
use thinpos::{run_multistart, RunConfig};

fn main() -> Result<(), thinpos::Error> {
    // Two well separated square patches of 60 points each.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let points: Vec<Vec<f64>> = (0..120)
        .map(|i| {
            let dx = if i < 60 { 0.0 } else { 10.0 };
            vec![dx + rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0)]
        })
        .collect();
    let g = knn_similarity_graph(&points, 6, 1.0)?;
    println!("{} vertices, {} edges", g.n(), g.edge_count());

    let cfg = RunConfig {
        restarts: 8,
        seed: 1,
        ..RunConfig::default()
    };
    let report = run_multistart(&g, &cfg)?;
    for c in report.clusters.iter().take(5) {
        let left = c.vertices.iter().filter(|&&v| v < 60).count();
        println!(
            "boundary {:.4} size {} ({} from the left patch)",
            c.boundary, c.size, left
        );
    }
    Ok(())
}
