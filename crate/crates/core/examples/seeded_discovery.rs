//! A planted cluster listed first survives thinning as a local minimum.
//!
//!     cargo run --example seeded_discovery

use thinpos::{generate, run_seeded_prefix, VertexSet};

fn main() -> Result<(), thinpos::Error> {
    for m in 3..=6 {
        let g = generate::barbell(m)?;
        let a = VertexSet::from_vertices(&g, 0..m);
        let d = run_seeded_prefix(&g, &a)?;
        println!("barbell({m}): discovered {} after {} shifts", d.discovered, d.steps);
    }

    let g = generate::neck(5, 2)?;
    let a = VertexSet::from_vertices(&g, 0..5);
    let d = run_seeded_prefix(&g, &a)?;
    println!("neck(5, 2): discovered {}, ordering {:?}", d.discovered, d.ordering.vertices());
    Ok(())
}
