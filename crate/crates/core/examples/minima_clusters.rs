//! Read clusters off a thinned ordering: prefixes at local minima, then
//! refined interior blocks.
//!
//!     cargo run --example minima_clusters

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thinpos::{extract_minima_clusters, generate, thin, BlockDecomposition, Ordering};

fn main() -> Result<(), thinpos::Error> {
    // Three triangles in a row, joined by single edges.
    let g = generate::triangle_chain(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let out = thin(&g, Ordering::random(g.n(), &mut rng))?;
    println!("ordering {:?}", out.ordering.vertices());
    println!("widths   {:?}", out.profile.levels());

    for c in extract_minima_clusters(&g, &out.ordering, &out.profile, false)? {
        println!("minimum {:?}: boundary {}", c.members.to_vec(), c.boundary);
    }

    let blocks = BlockDecomposition::new(&g, &out.ordering, &out.profile);
    println!("cut levels {:?}", blocks.minima);
    for i in blocks.interior_blocks() {
        match blocks.refine(&g, i) {
            Some(c) => println!("block {i} refines to {:?}, boundary {}", c.members.to_vec(), c.boundary),
            None => println!("block {i} refines to nothing"),
        }
    }
    Ok(())
}
