//! Exact simple-polygon geometry.
//!
//! Coordinates are arbitrary-precision rationals and every combinatorial
//! decision (orientation, intersection, containment, visibility) is made
//! exactly. Angles, compass bearings and edge lengths are derived from the
//! exact coordinates and emitted as `f64` approximations.

mod measure;
mod point;
mod polygon;
mod visibility;

pub use measure::{
    angle_measurement, compass_observation, distance_observation, inner_angle, measure,
    measure_coords, AngleMeasurement, OrderedAngleMeasurements,
};
pub use point::{orient, Orientation, RationalPoint};
pub use polygon::{is_simple, Containment, SimplePolygon};
pub use visibility::VisibilityGraph;

pub(crate) use point::segments_cross_properly as segments_cross;

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// Duplicate vertices in the input.
    DegenerateInput,
    /// `sees` was asked about a vertex and itself.
    IdenticalVertices,
    /// Fewer than three vertices.
    TooFewVertices,
    /// The vertex list is not a simple, CCW, general-position polygon.
    NotSimple,
    /// Ear cut with two boundary-adjacent ears.
    AdjacentEars,
    /// Ear cut that would leave fewer than three vertices.
    WouldLeaveNoPolygon,
    /// An index in an ear set is not an ear.
    NotAnEar(usize),
    /// Ear-clipping found no ear; the graph is not a polygon visibility graph.
    NotPolygonVisibility,
    /// A vertex index outside `0..n`.
    IndexOutOfRange(usize),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::DegenerateInput => write!(f, "degenerate input"),
            GeomError::IdenticalVertices => write!(f, "identical vertices"),
            GeomError::TooFewVertices => write!(f, "fewer than three vertices"),
            GeomError::NotSimple => write!(f, "not a simple general-position polygon"),
            GeomError::AdjacentEars => write!(f, "adjacent ear cut unsupported"),
            GeomError::WouldLeaveNoPolygon => write!(f, "would leave no polygon"),
            GeomError::NotAnEar(i) => write!(f, "vertex {i} is not an ear"),
            GeomError::NotPolygonVisibility => write!(f, "not a polygon visibility graph"),
            GeomError::IndexOutOfRange(i) => write!(f, "vertex index {i} out of range"),
        }
    }
}

impl std::error::Error for GeomError {}
