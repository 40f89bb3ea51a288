//! Alternating paths, their duals, and the order between the duals.
//!
//! ```text
//! cargo run --example families_tour
//! ```

use ecdual::ecgraph::serialize_graph;
use ecdual::families::{dual_embedding, make_dual, make_path, predecessors, DualId, PathId};
use ecdual::homsolver::maps_to;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=4 {
        // the two orientations of an even path are the same graph
        let family = PathId::family(k)?;
        for p in &family[..if k % 2 == 0 { 1 } else { 2 }] {
            let colours: Vec<String> = (0..k).map(|i| p.edge_colour(i).to_string()).collect();
            println!("{p}: {}", colours.join(" "));
        }
    }

    let d5b = DualId::new(5, ecdual::DualVariant::B)?;
    println!("\n{d5b} in text format:");
    print!("{}", serialize_graph(&make_dual(d5b)));

    println!("\nduals up to k = 6 and their immediate predecessors:");
    for d in DualId::up_to(6) {
        let before: Vec<String> = predecessors(d).iter().map(|p| p.to_string()).collect();
        println!("  {d:<6} <- {}", before.join(", "));
    }

    // each arrow is witnessed by an explicit embedding
    let (small, large) = (DualId::plain(3)?, DualId::plain(6)?);
    let f = dual_embedding(small, large)?;
    assert!(f.verify(&make_dual(small), &make_dual(large)));
    println!("\n{small} -> {large} via {:?}", f.as_slice());

    // and no path maps to its own dual
    for p in PathId::family(5)? {
        let d = DualId::plain(5)?;
        println!("{p} -> {d}: {}", maps_to(&make_path(p), &make_dual(d)));
    }
    Ok(())
}
