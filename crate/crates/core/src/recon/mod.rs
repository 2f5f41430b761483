//! Reconstruction of the visibility graph from the ordered list of angle
//! measurements.
//!
//! The iterative algorithm grows the edge set by boundary distance: step
//! `k` already holds every edge connecting vertices at most `k` apart, and
//! the pair `(v_i, v_(i+k+1))` is an edge iff some window vertex `v_j`
//! sees both ends and the three angles alpha, beta, gamma it spans with
//! them sum to pi. The same criterion drives the unknown-`n` variant,
//! which pulls one measurement per boundary step until all edges of `v0`
//! are identified.

mod embed;
mod partial;
mod reconstruct;

pub use embed::{embed, EmbeddedPolygon};
pub use partial::PartialVisibility;
pub use reconstruct::{
    angle_between, decide_edge, fill_missing_angle, reconstruct_from_angles,
    reconstruct_unknown_n, reconstruct_with_audit, reconstruction_stages, DecisionAudit,
};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconError {
    /// An angle lookup outside `1..=d`.
    InvalidEdgeSlot,
    /// The measurements cannot have come from any polygon.
    InconsistentMeasurements,
    /// Fewer than three vertices requested.
    InvalidSize,
    /// The unknown-n supplier ran dry before the edges of `v0` were known.
    StreamEndedPrematurely,
    /// More than one missing angle.
    Underdetermined,
    /// Triangle propagation reached a triangle with fewer than two placed
    /// vertices; the input graph was corrupt.
    DisconnectedTriangulation,
}

impl fmt::Display for ReconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconError::InvalidEdgeSlot => write!(f, "invalid edge slot"),
            ReconError::InconsistentMeasurements => write!(f, "inconsistent measurements"),
            ReconError::InvalidSize => write!(f, "invalid size"),
            ReconError::StreamEndedPrematurely => write!(f, "stream ended prematurely"),
            ReconError::Underdetermined => write!(f, "underdetermined"),
            ReconError::DisconnectedTriangulation => write!(f, "disconnected triangulation"),
        }
    }
}

impl std::error::Error for ReconError {}
