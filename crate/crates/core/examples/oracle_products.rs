//! The brute-force homomorphism search, categorical products, and the
//! product identity for odd duals.
//!
//! ```text
//! cargo run --example oracle_products
//! ```

use ecdual::families::{make_dual, DualId, DualVariant};
use ecdual::homsolver::{categorical_product, find_homomorphism, hom_equivalent, random_graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_graph(7, 0.12, 0.12, 42)?;
    for d in DualId::up_to(8) {
        let (f, stats) = find_homomorphism(&g, &make_dual(d));
        println!(
            "{d:<6} {:<5} nodes={} backtracks={}",
            f.is_some(),
            stats.nodes,
            stats.backtracks
        );
    }

    for k in 1..=3 {
        let odd = 2 * k - 1;
        let red = make_dual(DualId::new(odd, DualVariant::R)?);
        let blue = make_dual(DualId::new(odd, DualVariant::B)?);
        let product = categorical_product(&red, &blue);
        let plain = make_dual(DualId::plain(odd)?);
        println!(
            "D_{odd} ~ D_{odd}^R x D_{odd}^B (|V| = {}): {}",
            product.vertex_count(),
            hom_equivalent(&plain, &product)
        );
    }
    Ok(())
}
