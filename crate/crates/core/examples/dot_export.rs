//! Graphviz output, optionally annotated with a map into a dual.
//!
//! ```text
//! cargo run --example dot_export | dot -Tsvg > d4.svg
//! ```

use ecdual::ecgraph::emit_dot;
use ecdual::families::{make_dual, make_path, DualId, PathId, PathVariant};
use ecdual::peel::solve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", emit_dot(&make_dual(DualId::plain(4)?), None)?);

    let g = make_path(PathId::new(4, PathVariant::R)?);
    if let ecdual::SolveResult::Mapped { dual, map, .. } = solve(&g) {
        eprintln!("F_4^R -> {dual}");
        print!("{}", emit_dot(&g, Some((&map, &make_dual(dual))))?);
    }
    Ok(())
}
