//! Homomorphism duality for 2-edge-coloured alternating paths.
//!
//! For every alternating path `F` there is a small target `D` with
//! `F -> G` exactly when `G -/-> D`. This crate builds the paths
//! ([`families::make_path`]) and targets ([`families::make_dual`]), decides
//! in linear time which least target a graph maps to ([`peel::solve`]),
//! and checks all of it against a brute-force search ([`homsolver`]) through
//! the campaigns in [`harness`].

pub mod ecgraph;
pub mod families;
pub mod harness;
pub mod homsolver;
pub mod peel;

pub use ecgraph::{Colour, EdgeColouredGraph, VertexClass};
pub use families::{
    make_dual, make_dual_recursive, make_path, DualId, DualVariant, PathId, PathVariant,
};
pub use homsolver::{find_homomorphism, verify_homomorphism, Homomorphism};
pub use peel::{peel, solve, Certificate, ClosedAlternatingWalk, SolveResult};
