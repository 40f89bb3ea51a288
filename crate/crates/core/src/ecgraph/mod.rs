//! 2-edge-coloured graphs.
//!
//! A graph has `n` vertices indexed `0..n`, each with an optional string
//! label, and two edge sets (blue and red) of unordered pairs. Loops are
//! allowed, and the same pair may carry one edge of each colour, but never
//! two edges of the same colour.

mod dot;
mod text;

use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dot::{emit_dot, DotError};
pub use text::{parse_graph, serialize_graph, ParseError, ParseErrorKind};

/// Edge colour. Blue is colour 1, red is colour 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    Blue,
    Red,
}

impl Colour {
    pub const BOTH: [Colour; 2] = [Colour::Blue, Colour::Red];

    pub fn other(self) -> Colour {
        match self {
            Colour::Blue => Colour::Red,
            Colour::Red => Colour::Blue,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Colour::Blue => 0,
            Colour::Red => 1,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Blue => "blue",
            Colour::Red => "red",
        })
    }
}

impl std::str::FromStr for Colour {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "blue" => Ok(Colour::Blue),
            "red" => Ok(Colour::Red),
            other => Err(format!("unknown colour `{other}`")),
        }
    }
}

/// How a vertex meets the two colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    Mixed,
    BlueOnly,
    RedOnly,
    Isolated,
}

impl VertexClass {
    /// Classification from incident-edge counts per colour.
    pub fn from_counts(blue: usize, red: usize) -> VertexClass {
        match (blue > 0, red > 0) {
            (true, true) => VertexClass::Mixed,
            (true, false) => VertexClass::BlueOnly,
            (false, true) => VertexClass::RedOnly,
            (false, false) => VertexClass::Isolated,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate {colour} edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize, colour: Colour },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A 2-edge-coloured graph on vertices `0..n`.
#[derive(Clone, Default)]
pub struct EdgeColouredGraph {
    n: usize,
    labels: Vec<Option<String>>,
    // Canonical pairs (min, max), indexed by `Colour::index`.
    edges: [BTreeSet<(usize, usize)>; 2],
    adjacency: Vec<Vec<(usize, Colour)>>,
}

impl EdgeColouredGraph {
    /// An edgeless graph on `n` unlabelled vertices.
    pub fn new(n: usize) -> Self {
        EdgeColouredGraph {
            n,
            labels: vec![None; n],
            edges: [BTreeSet::new(), BTreeSet::new()],
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<Option<String>> = labels.into_iter().map(|s| Some(s.into())).collect();
        let mut g = EdgeColouredGraph::new(labels.len());
        g.labels = labels;
        g
    }

    /// Builds a graph from explicit edge lists. Fails on out-of-range
    /// endpoints and same-colour duplicates.
    pub fn from_edges(
        n: usize,
        blue: impl IntoIterator<Item = (usize, usize)>,
        red: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = EdgeColouredGraph::new(n);
        for (u, v) in blue {
            g.add_edge(u, v, Colour::Blue)?;
        }
        for (u, v) in red {
            g.add_edge(u, v, Colour::Red)?;
        }
        Ok(g)
    }

    /// Appends a vertex and returns its index.
    pub fn add_vertex(&mut self, label: Option<String>) -> usize {
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, colour: Colour) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let pair = canonical(u, v);
        if !self.edges[colour.index()].insert(pair) {
            return Err(GraphError::DuplicateEdge {
                u: pair.0,
                v: pair.1,
                colour,
            });
        }
        self.adjacency[u].push((v, colour));
        if u != v {
            self.adjacency[v].push((u, colour));
        }
        Ok(())
    }

    /// Inserts the edge unless it is already present. Returns whether it was new.
    pub fn insert_edge(&mut self, u: usize, v: usize, colour: Colour) -> Result<bool, GraphError> {
        match self.add_edge(u, v, colour) {
            Ok(()) => Ok(true),
            Err(GraphError::DuplicateEdge { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.labels[v] = Some(label.into());
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.edges[0].len() + self.edges[1].len()
    }

    /// Edges of one colour as canonical `(min, max)` pairs, in sorted order.
    pub fn edges(&self, colour: Colour) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges[colour.index()].iter().copied()
    }

    pub fn edge_set(&self, colour: Colour) -> &BTreeSet<(usize, usize)> {
        &self.edges[colour.index()]
    }

    pub fn has_edge(&self, u: usize, v: usize, colour: Colour) -> bool {
        self.edges[colour.index()].contains(&canonical(u, v))
    }

    pub fn has_loop(&self, v: usize, colour: Colour) -> bool {
        self.has_edge(v, v, colour)
    }

    /// Incident edges of `v` as `(neighbour, colour)`; a loop appears once.
    pub fn neighbours(&self, v: usize) -> &[(usize, Colour)] {
        &self.adjacency[v]
    }

    /// Number of incident edges of `v` in `colour`, loops counted once.
    pub fn colour_degree(&self, v: usize, colour: Colour) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&(_, c)| c == colour)
            .count()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    /// The label of `v`, or its index when unlabelled.
    pub fn display_label(&self, v: usize) -> Cow<'_, str> {
        match self.label(v) {
            Some(l) => Cow::Borrowed(l),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    pub fn classify_vertex(&self, v: usize) -> Result<VertexClass, GraphError> {
        self.check_vertex(v)?;
        let blue = self.colour_degree(v, Colour::Blue);
        let red = self.colour_degree(v, Colour::Red);
        Ok(VertexClass::from_counts(blue, red))
    }

    /// True iff every vertex is mixed. The graph with no vertices is smooth.
    pub fn is_smooth(&self) -> bool {
        (0..self.n).all(|v| self.classify_vertex(v) == Ok(VertexClass::Mixed))
    }

    pub fn underlying_graph(&self) -> UnderlyingGraph {
        let edges = self.edges[0].union(&self.edges[1]).copied().collect();
        UnderlyingGraph { n: self.n, edges }
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing
    /// order. Returns the graph and the new-to-old index map.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (EdgeColouredGraph, Vec<usize>) {
        let old: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut sub = EdgeColouredGraph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            sub.labels[i] = self.labels[v].clone();
        }
        for colour in Colour::BOTH {
            for (u, v) in self.edges(colour) {
                if keep[u] && keep[v] {
                    sub.add_edge(new_of[u], new_of[v], colour)
                        .expect("induced subgraph inherits distinct edges");
                }
            }
        }
        (sub, old)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &EdgeColouredGraph) -> EdgeColouredGraph {
        let shift = self.n;
        let mut g = self.clone();
        for v in 0..other.n {
            g.add_vertex(other.labels[v].clone());
        }
        for colour in Colour::BOTH {
            for (u, v) in other.edges(colour) {
                g.add_edge(u + shift, v + shift, colour)
                    .expect("shifted edges are fresh");
            }
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

impl PartialEq for EdgeColouredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for EdgeColouredGraph {}

impl fmt::Debug for EdgeColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColouredGraph")
            .field("n", &self.n)
            .field("blue", &self.edges[0])
            .field("red", &self.edges[1])
            .finish()
    }
}

/// Uncoloured graph with parallel edges merged; loops kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

pub(crate) fn canonical(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(3, [(0, 1)], [(1, 2)]).unwrap()
    }

    fn alternating_square() -> EdgeColouredGraph {
        EdgeColouredGraph::from_edges(4, [(0, 1), (2, 3)], [(1, 2), (3, 0)]).unwrap()
    }

    #[test]
    fn classify_basic() {
        let g = f2();
        assert_eq!(g.classify_vertex(0), Ok(VertexClass::BlueOnly));
        assert_eq!(g.classify_vertex(1), Ok(VertexClass::Mixed));
        assert_eq!(g.classify_vertex(2), Ok(VertexClass::RedOnly));
        assert_eq!(
            EdgeColouredGraph::new(1).classify_vertex(0),
            Ok(VertexClass::Isolated)
        );
        assert_eq!(
            g.classify_vertex(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn loops_count_toward_their_colour() {
        let g = EdgeColouredGraph::from_edges(1, [(0, 0)], []).unwrap();
        assert_eq!(g.classify_vertex(0), Ok(VertexClass::BlueOnly));
        let g = EdgeColouredGraph::from_edges(1, [(0, 0)], [(0, 0)]).unwrap();
        assert_eq!(g.classify_vertex(0), Ok(VertexClass::Mixed));
        assert!(g.is_smooth());
    }

    #[test]
    fn smoothness() {
        assert!(alternating_square().is_smooth());
        assert!(!f2().is_smooth());
        assert!(EdgeColouredGraph::new(0).is_smooth());
        assert!(!EdgeColouredGraph::new(1).is_smooth());
    }

    #[test]
    fn parallel_edges_need_distinct_colours() {
        let mut g = EdgeColouredGraph::new(2);
        g.add_edge(0, 1, Colour::Blue).unwrap();
        g.add_edge(1, 0, Colour::Red).unwrap();
        assert_eq!(
            g.add_edge(1, 0, Colour::Blue),
            Err(GraphError::DuplicateEdge {
                u: 0,
                v: 1,
                colour: Colour::Blue
            })
        );
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn underlying_merges_parallel_edges() {
        let g = EdgeColouredGraph::from_edges(2, [(0, 1)], [(0, 1)]).unwrap();
        let u = g.underlying_graph();
        assert_eq!(u.n, 2);
        assert_eq!(u.edges.into_iter().collect::<Vec<_>>(), vec![(0, 1)]);

        let g = EdgeColouredGraph::from_edges(2, [(0, 0)], [(1, 1)]).unwrap();
        assert_eq!(
            g.underlying_graph().edges.into_iter().collect::<Vec<_>>(),
            vec![(0, 0), (1, 1)]
        );

        let g = EdgeColouredGraph::new(5);
        assert!(g.underlying_graph().edges.is_empty());
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = alternating_square();
        let (sub, old) = g.induced_subgraph(&[true, true, true, false]);
        assert_eq!(old, vec![0, 1, 2]);
        assert_eq!(sub.edge_count(), 2);
        assert!(sub.has_edge(0, 1, Colour::Blue));
        assert!(sub.has_edge(2, 1, Colour::Red));
    }

    #[test]
    fn colour_other() {
        assert_eq!(Colour::Blue.other(), Colour::Red);
        assert_eq!(Colour::Red.other(), Colour::Blue);
        assert_ne!(Colour::Blue, Colour::Red);
    }
}
