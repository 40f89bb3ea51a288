use std::fmt::Write as _;

use thiserror::Error;

use super::{Colour, EdgeColouredGraph};
use crate::homsolver::Homomorphism;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DotError {
    #[error("annotation maps {got} vertices but the graph has {expected}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("annotation codomain has {got} vertices but the target has {expected}")]
    CodomainMismatch { expected: usize, got: usize },
}

/// Renders `g` as an undirected DOT graph. Blue edges are solid, red edges
/// dashed. With an annotation `(map, target)`, every vertex label gets the
/// target label of its image appended.
pub fn emit_dot(
    g: &EdgeColouredGraph,
    annotation: Option<(&Homomorphism, &EdgeColouredGraph)>,
) -> Result<String, DotError> {
    if let Some((map, target)) = annotation {
        if map.domain() != g.vertex_count() {
            return Err(DotError::DomainMismatch {
                expected: g.vertex_count(),
                got: map.domain(),
            });
        }
        if map.codomain() != target.vertex_count() {
            return Err(DotError::CodomainMismatch {
                expected: target.vertex_count(),
                got: map.codomain(),
            });
        }
    }

    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let mut label = g.display_label(v).into_owned();
        if let Some((map, target)) = annotation {
            write!(label, " -> {}", target.display_label(map.image(v))).unwrap();
        }
        writeln!(out, "  {v} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for colour in Colour::BOTH {
        let style = match colour {
            Colour::Blue => "color=blue, style=solid",
            Colour::Red => "color=red, style=dashed",
        };
        for (u, v) in g.edges(colour) {
            writeln!(out, "  {u} -- {v} [{style}];").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
