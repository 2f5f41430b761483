use super::env::SensorConfig;
use super::equivalence::{
    boundary_tour_equivalent, graphs_boundary_isomorphic, observationally_equivalent,
    two_missing_angles_equivalent, unordered_angle_tours_equivalent,
};
use crate::geom::{SimplePolygon, VisibilityGraph};

/// How two polygons are compared for observation equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceMode {
    /// Free movement along visibility edges with the given sensors, move
    /// sequences up to the budget (exact for discrete bundles).
    FreeMovement(SensorConfig, usize),
    /// One tour of the boundary with the given sensors.
    BoundaryTour(SensorConfig),
    /// Boundary tours where each per-vertex measurement is an unordered
    /// angle multiset.
    UnorderedAngles,
    /// An angle agent blind to two of the measured values.
    AnglesMissingTwo,
}

/// The verdict of a polygon-pair ambiguity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbiguityReport {
    pub equivalent: bool,
    /// Graphs equal as boundary-anchored ordered structures, up to
    /// rotation.
    pub graphs_isomorphic: bool,
    /// Shapes equal up to similarity (anchored at `v0`, `v1`).
    pub geometry_congruent: bool,
    /// Equivalent observations from distinct environments.
    pub ambiguous: bool,
}

/// Whether the two polygons are the same shape up to similarity:
/// normalizing both so `v0 = (0,0)` and `v1 = (1,0)` must make the vertex
/// lists coincide.
pub fn geometry_congruent(p1: &SimplePolygon, p2: &SimplePolygon, tol: f64) -> bool {
    if p1.len() != p2.len() {
        return false;
    }
    let norm = |p: &SimplePolygon| -> Vec<(f64, f64)> {
        let (x0, y0) = p.vertex(0).to_f64();
        let (x1, y1) = p.vertex(1).to_f64();
        let (bx, by) = (x1 - x0, y1 - y0);
        let denom = bx * bx + by * by;
        p.vertices()
            .iter()
            .map(|v| {
                let (x, y) = v.to_f64();
                let (dx, dy) = (x - x0, y - y0);
                // Complex division (dx + i dy) / (bx + i by).
                ((dx * bx + dy * by) / denom, (dy * bx - dx * by) / denom)
            })
            .collect()
    };
    norm(p1)
        .iter()
        .zip(norm(p2))
        .all(|(a, b)| (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol)
}

/// Runs the equivalence check for `mode` and combines it with the
/// structural comparisons. AMBIGUOUS means the sensor cannot distinguish
/// two genuinely different environments, whether the difference is in the
/// visibility graph or only in the shape.
pub fn ambiguity_report(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    mode: EquivalenceMode,
) -> AmbiguityReport {
    let equivalent = match mode {
        EquivalenceMode::FreeMovement(sensors, depth) => {
            observationally_equivalent(p1, p2, sensors, depth)
        }
        EquivalenceMode::BoundaryTour(sensors) => boundary_tour_equivalent(p1, p2, sensors),
        EquivalenceMode::UnorderedAngles => unordered_angle_tours_equivalent(p1, p2),
        EquivalenceMode::AnglesMissingTwo => two_missing_angles_equivalent(p1, p2),
    };
    let graphs_isomorphic = match (VisibilityGraph::build(p1), VisibilityGraph::build(p2)) {
        (Ok(g1), Ok(g2)) => graphs_boundary_isomorphic(&g1, &g2),
        _ => false,
    };
    let congruent = geometry_congruent(p1, p2, 1e-6);
    AmbiguityReport {
        equivalent,
        graphs_isomorphic,
        geometry_congruent: congruent,
        ambiguous: equivalent && !(graphs_isomorphic && congruent),
    }
}
