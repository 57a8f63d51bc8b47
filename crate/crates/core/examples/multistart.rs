//! Multistart clustering of a planted partition, printed as a summary and
//! as the JSON report.
//!
//!     cargo run --release --example multistart

use thinpos::{generate, run_multistart, RunConfig};

fn main() -> Result<(), thinpos::Error> {
    let g = generate::planted(&[8, 8, 6], 0.9, 0.05, 3)?;
    let cfg = RunConfig {
        restarts: 16,
        seed: 42,
        ..RunConfig::default()
    };
    let report = run_multistart(&g, &cfg)?;
    print!("{}", report.summary());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    }
    Ok(())
}
