//! Graphs with a smooth core map to no dual. The solver returns a closed
//! alternating walk instead, and wrapping a long path around that walk
//! shows why.
//!
//! ```text
//! cargo run --example closed_walk
//! ```

use ecdual::families::{make_path, PathId, PathVariant};
use ecdual::peel::{solve, verify_walk, SolveResult};
use ecdual::{Colour, EdgeColouredGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a 6-cycle with alternating colours, plus a tail that peels away
    let mut g = EdgeColouredGraph::new(8);
    for i in 0..6 {
        let c = if i % 2 == 0 {
            Colour::Blue
        } else {
            Colour::Red
        };
        g.add_edge(i, (i + 1) % 6, c)?;
    }
    g.add_edge(0, 6, Colour::Red)?;
    g.add_edge(6, 7, Colour::Blue)?;

    let SolveResult::NoMap(walk) = solve(&g) else {
        unreachable!("the cycle is smooth");
    };
    println!("walk of length {}: {walk}", walk.len());
    assert!(verify_walk(&g, &walk));

    // every alternating path of any length maps onto the walk
    for k in [7, 20, 101] {
        let p = PathId::new(k, PathVariant::B)?;
        let f = walk.wrap(p, &g);
        assert!(f.verify(&make_path(p), &g));
        println!("{p} wraps around the walk");
    }

    let two_loops = EdgeColouredGraph::from_edges(1, [(0, 0)], [(0, 0)])?;
    println!(
        "vertex with both loops: {}",
        solve(&two_loops).dual().is_none()
    );
    Ok(())
}
