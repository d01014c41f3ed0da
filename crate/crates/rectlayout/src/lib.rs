//! Rectangular duals of proper plane graphs.
//!
//! A proper plane graph with a corner assignment has a family of rectangular
//! duals described by its regular edge labelings, which form a finite
//! distributive lattice under recoloring moves on alternating four-cycles.
//! This crate implements that machinery end to end:
//!
//! - [`graph`]: plane graphs with a rotation-system embedding, extended
//!   graphs with corners, properness validation, separating cycles;
//! - [`rel`]: regular edge labelings, moves, extremal labelings;
//! - [`init`]: construction of one labeling for a proper graph;
//! - [`geometry`]: integer rectangle geometry for a labeling, SVG export;
//! - [`lattice`]: the lattice of labelings, flipping numbers, the partial
//!   order of flip events, and the ideal-partition encoding of layouts;
//! - [`constraint`]: forbidden edge labels and junction orientations compiled
//!   into a constraint graph over the augmented event order, feasibility via
//!   strongly connected components, and constrained enumeration;
//! - [`decompose`]: recursive splitting at nontrivial separating four-cycles
//!   and solving/gluing across the separation tree;
//! - [`area`]: stretched pairs, fixed edges, and the search for orientation-
//!   constrained area-universal layouts;
//! - [`gen`]: seeded instance generators used by tests and benchmarks.

pub mod area;
pub mod constraint;
pub mod decompose;
pub mod fixtures;
pub mod gen;
pub mod geometry;
pub mod graph;
pub mod init;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod rel;
pub mod svg;

pub use graph::{
    enumerate_corner_assignments, find_separating_four_cycles, validate_extended, ExtendedGraph,
    PlaneGraph,
};
pub use init::initial_rel;
pub use rel::{
    apply_move, extremal_rel, find_alternating_cycles, validate_rel, RegularEdgeLabeling,
};
