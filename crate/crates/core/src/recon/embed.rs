use super::reconstruct::angle_between;
use super::ReconError;
use crate::geom::{measure_coords, OrderedAngleMeasurements, VisibilityGraph};

/// A polygon placed in the plane from angle data alone, normalized so that
/// `v0 = (0, 0)` and `v1 = (1, 0)`; everything else is determined up to
/// that similarity.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedPolygon {
    coords: Vec<(f64, f64)>,
}

impl EmbeddedPolygon {
    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Recomputes the ordered angle measurements from the embedded
    /// coordinates, using the incident orders of `visgraph`.
    pub fn measure(&self, visgraph: &VisibilityGraph) -> OrderedAngleMeasurements {
        measure_coords(&self.coords, visgraph)
    }

    /// Doubled signed area; positive for CCW.
    pub fn signed_area_doubled(&self) -> f64 {
        let n = self.coords.len();
        (0..n)
            .map(|i| {
                let (x0, y0) = self.coords[i];
                let (x1, y1) = self.coords[(i + 1) % n];
                x0 * y1 - x1 * y0
            })
            .sum()
    }
}

/// The three measured interior angles of a triangulation triangle
/// `(a, b, c)` given in boundary order (which is also CCW orientation):
/// at `a` between the edges to `b` and `c`, and cyclically.
fn triangle_angles(
    tri: [usize; 3],
    visgraph: &VisibilityGraph,
    measurements: &OrderedAngleMeasurements,
) -> Result<[f64; 3], ReconError> {
    let mut out = [0.0; 3];
    for t in 0..3 {
        let v = tri[t];
        let to_first = tri[(t + 1) % 3];
        let to_second = tri[(t + 2) % 3];
        let s1 = visgraph
            .slot_of(v, to_first)
            .ok_or(ReconError::InconsistentMeasurements)?;
        let s2 = visgraph
            .slot_of(v, to_second)
            .ok_or(ReconError::InconsistentMeasurements)?;
        out[t] = angle_between(measurements.at(v), s1, s2)
            .map_err(|_| ReconError::InconsistentMeasurements)?;
    }
    Ok(out)
}

/// Embeds the reconstructed polygon in the plane: triangulate the graph,
/// fix `v0` and `v1`, then repeatedly place the third vertex of a triangle
/// whose other two corners are already placed, propagating across shared
/// triangulation edges.
pub fn embed(
    visgraph: &VisibilityGraph,
    measurements: &OrderedAngleMeasurements,
) -> Result<EmbeddedPolygon, ReconError> {
    let n = visgraph.len();
    if measurements.len() != n {
        return Err(ReconError::InconsistentMeasurements);
    }
    let triangles = visgraph
        .triangulate()
        .map_err(|_| ReconError::InconsistentMeasurements)?;

    // Triangles in sorted index order are already CCW: boundary order
    // orients every sub-triangle of a CCW polygon counter-clockwise.
    let mut placed = vec![false; n];
    let mut coords = vec![(0.0, 0.0); n];
    coords[0] = (0.0, 0.0);
    coords[1] = (1.0, 0.0);
    placed[0] = true;
    placed[1] = true;

    let start = triangles
        .iter()
        .position(|t| t.contains(&0) && t.contains(&1))
        .ok_or(ReconError::DisconnectedTriangulation)?;

    let mut done = vec![false; triangles.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    let mut scheduled = vec![false; triangles.len()];
    scheduled[start] = true;
    while let Some(ti) = queue.pop_front() {
        done[ti] = true;
        let tri = triangles[ti];
        let known = tri.iter().filter(|&&v| placed[v]).count();
        if known < 2 {
            return Err(ReconError::DisconnectedTriangulation);
        }
        if known == 2 {
            let angles = triangle_angles(tri, visgraph, measurements)?;
            let missing = (0..3).find(|&t| !placed[tri[t]]).unwrap();
            // With (a, b, c) CCW and c unknown: c lies at angle +theta_a
            // from the ray a -> b, at distance |ab| sin(theta_b)/sin(theta_c).
            let a = (missing + 1) % 3;
            let b = (missing + 2) % 3;
            let (ax, ay) = coords[tri[a]];
            let (bx, by) = coords[tri[b]];
            let theta_a = angles[a];
            let theta_b = angles[b];
            let scale = theta_b.sin() / (theta_a + theta_b).sin();
            let (dx, dy) = (bx - ax, by - ay);
            let (cos_t, sin_t) = (theta_a.cos(), theta_a.sin());
            coords[tri[missing]] = (
                ax + scale * (dx * cos_t - dy * sin_t),
                ay + scale * (dx * sin_t + dy * cos_t),
            );
            placed[tri[missing]] = true;
        }
        // Neighbors across shared edges.
        for (oi, other) in triangles.iter().enumerate() {
            if scheduled[oi] {
                continue;
            }
            let shared = other.iter().filter(|v| tri.contains(v)).count();
            if shared == 2 {
                scheduled[oi] = true;
                queue.push_back(oi);
            }
        }
    }
    if done.iter().any(|&d| !d) || placed.iter().any(|&p| !p) {
        return Err(ReconError::DisconnectedTriangulation);
    }
    Ok(EmbeddedPolygon { coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{measure, RationalPoint, SimplePolygon};

    #[test]
    fn square_embeds_to_unit_square() {
        let p = SimplePolygon::new(
            [(0, 0), (3, 0), (3, 3), (0, 3)]
                .iter()
                .map(|&(x, y)| RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap();
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let e = embed(&g, &m).unwrap();
        let expected = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        for (got, want) in e.coords().iter().zip(expected) {
            assert!((got.0 - want.0).abs() < 1e-9 && (got.1 - want.1).abs() < 1e-9);
        }
        assert!(e.signed_area_doubled() > 0.0);
    }

    #[test]
    fn wrong_sized_measurements_are_rejected() {
        let p = SimplePolygon::new(
            [(0, 0), (3, 0), (3, 3), (0, 3)]
                .iter()
                .map(|&(x, y)| RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap();
        let g = VisibilityGraph::build(&p).unwrap();
        let mut m = measure(&p, &g);
        m = OrderedAngleMeasurements::new(m.iter().take(3).cloned().collect());
        assert!(matches!(
            embed(&g, &m),
            Err(ReconError::InconsistentMeasurements)
        ));
    }
}
