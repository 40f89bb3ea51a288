//! Verification campaigns: exhaustive small graphs and a random audit.
//!
//! ```text
//! cargo run --release --example campaigns
//! ```

use ecdual::harness::{audit_random, check_duality_exhaustive};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let exhaustive = check_duality_exhaustive(3, 6)?;
    print!("{}", exhaustive.to_text());

    let audit = audit_random(500, 30, 0.03, 0.03, 11)?;
    println!("{}", audit.to_json());
    Ok(())
}
