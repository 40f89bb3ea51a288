//! Peeling cost on long alternating paths.
//!
//! ```text
//! cargo run --release --example bench_paths
//! ```

use ecdual::harness::bench_linear;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = bench_linear(&[1_000, 10_000, 100_000, 1_000_000])?;
    println!("{:>9} {:>10} {:>9} {:>9}", "n", "ops", "ops/n", "seconds");
    for row in &report.rows {
        println!(
            "{:>9} {:>10} {:>9.3} {:>9.4}  {}",
            row.n, row.operations, row.ops_per_vertex, row.seconds, row.dual
        );
    }
    Ok(())
}
