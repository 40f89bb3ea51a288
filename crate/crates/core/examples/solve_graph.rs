//! Find the least dual a graph maps to, with the map and a certificate that
//! no smaller dual works.
//!
//! ```text
//! cargo run --example solve_graph
//! ```

use ecdual::ecgraph::parse_graph;
use ecdual::families::signed_label;
use ecdual::peel::{solve_with_trace, verify_result};
use ecdual::SolveResult;

const INPUT: &str = "\
# a blue-red-blue path with a red pendant and a blue loop hanging off it
v a
v b
v c
v d
v e
e a b blue
e b c red
e c d blue
e b e red
e e e blue
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = parse_graph(INPUT)?;
    let (result, trace) = solve_with_trace(&g);

    for (i, round) in trace.rounds.iter().enumerate() {
        let names = |vs: &[usize]| -> Vec<String> {
            vs.iter()
                .map(|&v| g.display_label(v).into_owned())
                .collect()
        };
        println!(
            "round {}: blue-only {:?} red-only {:?} isolated {:?}",
            i + 1,
            names(&round.blue_only),
            names(&round.red_only),
            names(&round.isolated)
        );
    }

    let SolveResult::Mapped {
        dual,
        map,
        certificate,
    } = &result
    else {
        unreachable!("this graph peels completely");
    };
    println!("\nleast dual: {dual}");
    for v in 0..g.vertex_count() {
        println!(
            "  {} -> {}",
            g.display_label(v),
            signed_label(dual.k(), map.image(v))
        );
    }
    for m in certificate.maps() {
        let hit: Vec<_> = m
            .map
            .as_slice()
            .iter()
            .map(|&v| g.display_label(v))
            .collect();
        let name = m.path_id().map_or("F_0".to_owned(), |p| p.to_string());
        println!("certificate {name}: {}", hit.join(" "));
    }
    assert!(verify_result(&g, &result));
    Ok(())
}
