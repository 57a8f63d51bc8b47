//! Load an edge list with labels and comments, then write it back out.
//!
//!     cargo run --example edge_list_io

use thinpos::ingest::{load_edge_list, write_edge_list};

const INPUT: &str = "\
# two triangles joined by a light edge
a b 2
b c 2
a c 2
c d 0.5
d e 2
e f 2
d f 2
lonely
";

fn main() -> Result<(), thinpos::Error> {
    let g = load_edge_list(INPUT.as_bytes())?;
    println!("{} vertices, {} edges, total weight {}", g.n(), g.edge_count(), g.total_weight());
    for v in 0..g.n() {
        println!("  {} strength {}", g.label(v), g.strength(v));
    }
    write_edge_list(&g, std::io::stdout().lock())?;
    Ok(())
}
