//! Visibility graphs of simple polygons and the machinery to rebuild them
//! from local observations.
//!
//! The crate has three layers:
//!
//! - exact geometry over rational coordinates ([`geom`]): simplicity checks,
//!   the vertex-visibility predicate, visibility graphs with the
//!   counter-clockwise edge ordering, ears and triangulation, and the
//!   per-vertex measurements (angles, compass, distances);
//! - reconstruction ([`recon`]): recovering the visibility graph from the
//!   ordered list of angle measurements (with known or unknown vertex
//!   count), filling a single missing angle, and embedding the result in
//!   the plane up to similarity;
//! - arc-labeled digraphs ([`graph`], [`agent`], [`structure`]): sensor
//!   labelings of the visibility graph, minimum base graphs via partition
//!   refinement, distinguishing sequences, a candidate-elimination
//!   exploration strategy, an agent simulator, and the ear/clique class
//!   structure of polygon labelings.
//!
//! All geometric decisions use exact rational arithmetic; only angle and
//! distance *measurements* are emitted as floating-point approximations.

pub mod agent;
pub mod fixtures;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod io;
pub mod recon;
pub mod structure;

/// Tolerance for every floating-point angle comparison in the crate.
pub const ANGLE_EPS: f64 = 1e-9;
