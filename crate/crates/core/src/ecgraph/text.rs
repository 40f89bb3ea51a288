//! Line-oriented text format.
//!
//! ```text
//! # comment
//! v a            declares vertex `a`
//! e a b blue     edge {a, b}; endpoints are declared on first use
//! e b b red      loop
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use super::{Colour, EdgeColouredGraph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed directive `{0}`")]
    Malformed(String),
    #[error("unknown colour `{0}`")]
    UnknownColour(String),
    #[error("duplicate {colour} edge {{{u}, {v}}}")]
    DuplicateEdge {
        u: String,
        v: String,
        colour: Colour,
    },
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
}

pub fn parse_graph(text: &str) -> Result<EdgeColouredGraph, ParseError> {
    let mut g = EdgeColouredGraph::new(0);
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut declared: HashSet<String> = HashSet::new();

    let mut vertex = |g: &mut EdgeColouredGraph, label: &str| -> usize {
        *index
            .entry(label.to_owned())
            .or_insert_with(|| g.add_vertex(Some(label.to_owned())))
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |kind| ParseError { line, kind };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", label] => {
                if !declared.insert((*label).to_owned()) {
                    return Err(err(ParseErrorKind::DuplicateVertex((*label).to_owned())));
                }
                vertex(&mut g, label);
            }
            ["e", a, b, colour] => {
                let colour: Colour = colour
                    .parse()
                    .map_err(|_| err(ParseErrorKind::UnknownColour((*colour).to_owned())))?;
                let u = vertex(&mut g, a);
                let v = vertex(&mut g, b);
                match g.add_edge(u, v, colour) {
                    Ok(()) => {}
                    Err(GraphError::DuplicateEdge { .. }) => {
                        return Err(err(ParseErrorKind::DuplicateEdge {
                            u: (*a).to_owned(),
                            v: (*b).to_owned(),
                            colour,
                        }))
                    }
                    Err(e) => unreachable!("endpoints were just created: {e}"),
                }
            }
            _ => return Err(err(ParseErrorKind::Malformed(content.to_owned()))),
        }
    }
    Ok(g)
}

/// Writes every vertex as a `v` line (in index order) followed by the blue
/// and then the red edges. Vertices are named by their labels when those
/// are unique and whitespace-free, otherwise by index.
pub fn serialize_graph(g: &EdgeColouredGraph) -> String {
    let names = vertex_names(g);
    let mut out = String::new();
    for name in &names {
        writeln!(out, "v {name}").unwrap();
    }
    for colour in Colour::BOTH {
        for (u, v) in g.edges(colour) {
            writeln!(out, "e {} {} {colour}", names[u], names[v]).unwrap();
        }
    }
    out
}

fn vertex_names(g: &EdgeColouredGraph) -> Vec<String> {
    let names: Vec<String> = (0..g.vertex_count())
        .map(|v| g.display_label(v).into_owned())
        .collect();
    let mut seen = HashSet::new();
    let usable = names.iter().all(|s| {
        !s.is_empty() && !s.contains(char::is_whitespace) && !s.contains('#') && seen.insert(s)
    });
    if usable {
        names
    } else {
        (0..g.vertex_count()).map(|v| v.to_string()).collect()
    }
}
