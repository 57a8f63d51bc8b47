//! Exhaustive pinch-cluster checks on a small graph, with witnesses.
//!
//!     cargo run --example oracle_check

use thinpos::{core, enumerate_pinch_clusters, generate, is_pinch_cluster_fast, Oracle, VertexSet};

fn main() -> Result<(), thinpos::Error> {
    let g = generate::path(5)?;
    let oracle = Oracle::default();
    for members in [vec![0, 1], vec![0, 1, 2], vec![1, 2, 3]] {
        let a = VertexSet::from_vertices(&g, members.iter().copied());
        let r = oracle.report(&g, &a)?;
        println!(
            "{members:?}: boundary {}, fast {}, convex {}, concave {}",
            a.boundary(),
            is_pinch_cluster_fast(&g, &a),
            r.convex,
            r.concave
        );
        if let Some(w) = r.witness {
            println!("  {:?} sequence {:?}", w.direction, w.sequence);
        }
    }

    let g = generate::barbell(3)?;
    let found = enumerate_pinch_clusters(&g, false)?;
    println!("barbell(3) has {} nontrivial pinch clusters", found.len());
    for a in &found {
        let c = core(&g, a)?;
        println!("  {:?} core {:?}", a.to_vec(), c.members.to_vec());
    }
    Ok(())
}
