use super::{RationalPoint, SimplePolygon, VisibilityGraph};
use num::ToPrimitive;
use std::f64::consts::PI;

/// The angle measurement at one vertex: the list `(a1, ..., a(d-1))` of
/// counter-clockwise angles between consecutive incident edges, in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleMeasurement {
    angles: Vec<f64>,
}

impl AngleMeasurement {
    pub fn new(angles: Vec<f64>) -> Self {
        AngleMeasurement { angles }
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Degree of the vertex this measurement was taken at.
    pub fn degree(&self) -> usize {
        self.angles.len() + 1
    }

    /// Sum of all entries: the inner angle of the polygon at the vertex.
    pub fn inner_angle(&self) -> f64 {
        self.angles.iter().sum()
    }
}

/// Per-vertex angle measurements in boundary order, starting at `v0`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedAngleMeasurements {
    per_vertex: Vec<AngleMeasurement>,
}

impl OrderedAngleMeasurements {
    pub fn new(per_vertex: Vec<AngleMeasurement>) -> Self {
        OrderedAngleMeasurements { per_vertex }
    }

    pub fn len(&self) -> usize {
        self.per_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_vertex.is_empty()
    }

    pub fn at(&self, i: usize) -> &AngleMeasurement {
        &self.per_vertex[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &AngleMeasurement> {
        self.per_vertex.iter()
    }

    /// Sum of all inner angles; `(n-2)pi` for measurements of a polygon.
    pub fn total(&self) -> f64 {
        self.per_vertex.iter().map(|m| m.inner_angle()).sum()
    }

    /// Checks the shape invariants: all angles positive, every vertex sum in
    /// `(0, 2pi)`, and the total within `tol` of `(n-2)pi`.
    pub fn validate(&self, tol: f64) -> bool {
        let n = self.per_vertex.len();
        if n < 3 {
            return false;
        }
        for m in &self.per_vertex {
            if m.angles.is_empty() || m.angles.iter().any(|&a| a <= 0.0) {
                return false;
            }
            let inner = m.inner_angle();
            if inner <= 0.0 || inner >= 2.0 * PI {
                return false;
            }
        }
        (self.total() - (n as f64 - 2.0) * PI).abs() <= tol
    }
}

fn to_f64(r: &num::rational::BigRational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// CCW angle in `(0, 2pi)` from direction `(ux, uy)` to `(wx, wy)`.
fn ccw_angle(ux: f64, uy: f64, wx: f64, wy: f64) -> f64 {
    let cross = ux * wy - uy * wx;
    let dot = ux * wx + uy * wy;
    let a = cross.atan2(dot);
    if a <= 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

fn direction_f64(from: &RationalPoint, to: &RationalPoint) -> (f64, f64) {
    (to_f64(&(&to.x - &from.x)), to_f64(&(&to.y - &from.y)))
}

/// The angle measurement at vertex `i`: consecutive CCW angles between the
/// incident edges of the visibility graph, derived from exact coordinates.
pub fn angle_measurement(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    i: usize,
) -> AngleMeasurement {
    let origin = polygon.vertex(i);
    let dirs: Vec<(f64, f64)> = visgraph
        .incident(i)
        .iter()
        .map(|&j| direction_f64(origin, polygon.vertex(j)))
        .collect();
    let angles = dirs
        .windows(2)
        .map(|w| ccw_angle(w[0].0, w[0].1, w[1].0, w[1].1))
        .collect();
    AngleMeasurement::new(angles)
}

/// The ordered list of angle measurements of the whole polygon.
pub fn measure(polygon: &SimplePolygon, visgraph: &VisibilityGraph) -> OrderedAngleMeasurements {
    OrderedAngleMeasurements::new(
        (0..polygon.len())
            .map(|i| angle_measurement(polygon, visgraph, i))
            .collect(),
    )
}

/// Angle measurements of an already-embedded (floating-point) polygon,
/// using the incident orders of `visgraph`.
pub fn measure_coords(coords: &[(f64, f64)], visgraph: &VisibilityGraph) -> OrderedAngleMeasurements {
    let per_vertex = (0..coords.len())
        .map(|i| {
            let (ox, oy) = coords[i];
            let dirs: Vec<(f64, f64)> = visgraph
                .incident(i)
                .iter()
                .map(|&j| (coords[j].0 - ox, coords[j].1 - oy))
                .collect();
            AngleMeasurement::new(
                dirs.windows(2)
                    .map(|w| ccw_angle(w[0].0, w[0].1, w[1].0, w[1].1))
                    .collect(),
            )
        })
        .collect();
    OrderedAngleMeasurements::new(per_vertex)
}

/// The inner angle of the polygon at vertex `i`.
pub fn inner_angle(polygon: &SimplePolygon, visgraph: &VisibilityGraph, i: usize) -> f64 {
    angle_measurement(polygon, visgraph, i).inner_angle()
}

/// Per incident edge in CCW order, its bearing from the global +x
/// direction, in `[0, 2pi)`.
pub fn compass_observation(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    i: usize,
) -> Vec<f64> {
    let origin = polygon.vertex(i);
    visgraph
        .incident(i)
        .iter()
        .map(|&j| {
            let (dx, dy) = direction_f64(origin, polygon.vertex(j));
            let a = dy.atan2(dx);
            if a < 0.0 {
                a + 2.0 * PI
            } else {
                a
            }
        })
        .collect()
}

/// Euclidean lengths of the incident edges in CCW order.
pub fn distance_observation(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    i: usize,
) -> Vec<f64> {
    let origin = polygon.vertex(i);
    visgraph
        .incident(i)
        .iter()
        .map(|&j| {
            let other = polygon.vertex(j);
            let dx = &other.x - &origin.x;
            let dy = &other.y - &origin.y;
            to_f64(&(&dx * &dx + &dy * &dy)).sqrt()
        })
        .collect()
}
