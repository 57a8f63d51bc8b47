//! Thin an interleaved ordering of a barbell and watch the width shrink.
//!
//!     cargo run --example thin_barbell

use thinpos::{generate, Ordering, Thinner};

fn main() -> Result<(), thinpos::Error> {
    let g = generate::barbell(4)?;
    // Alternate the two cliques so every prefix cuts many edges.
    let start = Ordering::from_vertices(vec![0, 4, 1, 5, 2, 6, 3, 7])?;
    let mut th = Thinner::new(&g, start)?;
    println!("start   {:?}", th.arrangement().profile().levels());
    while let Some(mv) = th.step()? {
        println!(
            "{:?} k={} -> {}: {:?}",
            mv.case,
            mv.k,
            mv.target,
            th.arrangement().profile().levels()
        );
    }
    let done = th.finish();
    println!("ordering {:?} after {} shifts", done.ordering.vertices(), done.steps);
    println!("width vector {:?}", done.width_vector().0);
    Ok(())
}
