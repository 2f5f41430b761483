use super::point::{cross, orient, segments_cross_properly, segments_intersect, Orientation};
use super::{GeomError, RationalPoint};
use num::rational::BigRational;
use num::{Signed, Zero};

/// A simple polygon with vertices `v0..v(n-1)` in counter-clockwise
/// boundary order (interior on the left) and no three vertices collinear.
///
/// Immutable after construction; construction validates every invariant
/// with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePolygon {
    vertices: Vec<RationalPoint>,
}

/// Result of an exact point-in-polygon query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    OnBoundary,
    Outside,
}

/// Whether `vertices` describes a simple, CCW-oriented, general-position
/// polygon. Errors on duplicate vertices; all other defects yield `false`.
pub fn is_simple(vertices: &[RationalPoint]) -> Result<bool, GeomError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices);
    }
    for i in 0..n {
        for j in i + 1..n {
            if vertices[i] == vertices[j] {
                return Err(GeomError::DegenerateInput);
            }
        }
    }
    // General position: no three vertices collinear.
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(&vertices[i], &vertices[j], &vertices[k]) == Orientation::Collinear {
                    return Ok(false);
                }
            }
        }
    }
    // Non-adjacent edges must be disjoint. With no collinear triples, any
    // contact between them is a proper crossing.
    for i in 0..n {
        let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
        for j in i + 1..n {
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (&vertices[j], &vertices[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return Ok(false);
            }
        }
    }
    Ok(signed_area_doubled(vertices).is_positive())
}

fn signed_area_doubled(vertices: &[RationalPoint]) -> BigRational {
    let n = vertices.len();
    let mut acc = BigRational::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

impl SimplePolygon {
    /// Validates and wraps a CCW vertex list.
    pub fn new(vertices: Vec<RationalPoint>) -> Result<Self, GeomError> {
        if is_simple(&vertices)? {
            Ok(SimplePolygon { vertices })
        } else {
            Err(GeomError::NotSimple)
        }
    }

    /// Construction that skips validation, for callers that have already
    /// established simplicity (e.g. the generator's resampling loop).
    pub(crate) fn new_unchecked(vertices: Vec<RationalPoint>) -> Self {
        SimplePolygon { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &RationalPoint {
        &self.vertices[i % self.vertices.len()]
    }

    /// The mirror image (reflection across the x axis), renumbered so the
    /// result is again CCW with the same starting vertex.
    pub fn mirrored(&self) -> SimplePolygon {
        let n = self.len();
        let mut v = Vec::with_capacity(n);
        v.push(self.vertices[0].mirrored());
        for i in (1..n).rev() {
            v.push(self.vertices[i].mirrored());
        }
        SimplePolygon::new(v).expect("mirror image of a simple polygon is simple")
    }

    /// Exact location of `p` relative to the polygon.
    pub fn locate(&self, p: &RationalPoint) -> Containment {
        let n = self.len();
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            if orient(a, b, p) == Orientation::Collinear && super::point::on_segment(a, b, p) {
                return Containment::OnBoundary;
            }
        }
        // Crossing count of the upward ray from p, half-open edge rule.
        let mut inside = false;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                // x coordinate of the edge at height p.y, compared exactly:
                // x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
                let dy = &b.y - &a.y;
                let lhs = (&p.x - &a.x) * &dy;
                let rhs = (&p.y - &a.y) * (&b.x - &a.x);
                let crosses_right_of_p = if dy.is_positive() { lhs < rhs } else { lhs > rhs };
                if crosses_right_of_p {
                    inside = !inside;
                }
            }
        }
        if inside {
            Containment::Inside
        } else {
            Containment::Outside
        }
    }

    /// Whether vertices `i` and `j` see each other: the segment between
    /// them lies entirely in the polygon. Boundary neighbors always do.
    pub fn sees(&self, i: usize, j: usize) -> Result<bool, GeomError> {
        let n = self.len();
        if i >= n {
            return Err(GeomError::IndexOutOfRange(i));
        }
        if j >= n {
            return Err(GeomError::IndexOutOfRange(j));
        }
        if i == j {
            return Err(GeomError::IdenticalVertices);
        }
        if (i + 1) % n == j || (j + 1) % n == i {
            return Ok(true);
        }
        let a = &self.vertices[i];
        let b = &self.vertices[j];
        // A proper crossing with any edge not incident to i or j blocks the
        // view. Edges incident to i or j cannot interfere beyond their
        // shared endpoint because no three vertices are collinear.
        for e in 0..n {
            let f = (e + 1) % n;
            if e == i || e == j || f == i || f == j {
                continue;
            }
            if segments_cross_properly(a, b, &self.vertices[e], &self.vertices[f]) {
                return Ok(false);
            }
        }
        // No crossings: the open segment lies entirely inside or entirely
        // outside; its midpoint decides which.
        Ok(self.locate(&a.midpoint(b)) != Containment::Outside)
    }

    /// Cross product `(v_b - v_a) x (v_c - v_a)` of vertex positions.
    pub(crate) fn cross_at(&self, a: usize, b: usize, c: usize) -> BigRational {
        cross(&self.vertices[a], &self.vertices[b], &self.vertices[c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(i64, i64)]) -> Vec<RationalPoint> {
        coords
            .iter()
            .map(|&(x, y)| RationalPoint::from_ints(x, y))
            .collect()
    }

    pub(crate) fn fix_p5() -> SimplePolygon {
        SimplePolygon::new(vec![
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(4, 0),
            RationalPoint::from_ints(4, 2),
            RationalPoint::from_fractions(2, 1, 6, 5),
            RationalPoint::from_ints(0, 2),
        ])
        .unwrap()
    }

    #[test]
    fn unit_square_is_simple() {
        assert_eq!(
            is_simple(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])),
            Ok(true)
        );
    }

    #[test]
    fn bow_tie_is_not_simple() {
        assert_eq!(
            is_simple(&poly(&[(0, 0), (1, 1), (1, 0), (0, 1)])),
            Ok(false)
        );
    }

    #[test]
    fn clockwise_square_is_rejected() {
        assert_eq!(
            is_simple(&poly(&[(0, 0), (0, 1), (1, 1), (1, 0)])),
            Ok(false)
        );
    }

    #[test]
    fn collinear_triple_is_rejected() {
        assert_eq!(
            is_simple(&poly(&[(0, 0), (1, 0), (2, 0), (1, 1)])),
            Ok(false)
        );
    }

    #[test]
    fn duplicate_vertices_error() {
        assert_eq!(
            is_simple(&poly(&[(0, 0), (1, 0), (0, 0), (0, 1)])),
            Err(GeomError::DegenerateInput)
        );
    }

    #[test]
    fn notched_pentagon_is_simple() {
        // Independent oracle: exhaustive closed-segment intersection over
        // all edge pairs, checking that only shared endpoints touch.
        let p = fix_p5();
        let n = p.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (p.vertex(i), p.vertex(i + 1));
                let (c, d) = (p.vertex(j), p.vertex(j + 1));
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if adjacent {
                    continue;
                }
                assert!(
                    !segments_intersect(a, b, c, d),
                    "edges {i} and {j} intersect"
                );
            }
        }
        assert_eq!(is_simple(p.vertices()), Ok(true));
    }

    #[test]
    fn visibility_in_notched_pentagon() {
        let p = fix_p5();
        // The notch at v3 blocks the top chord.
        assert_eq!(p.sees(2, 4), Ok(false));
        assert_eq!(p.sees(4, 2), Ok(false));
        assert_eq!(p.sees(1, 4), Ok(true));
        assert_eq!(p.sees(0, 2), Ok(true));
        assert_eq!(p.sees(0, 0), Err(GeomError::IdenticalVertices));
    }

    #[test]
    fn convex_polygon_sees_everything() {
        let square = SimplePolygon::new(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(square.sees(i, j), Ok(true));
                }
            }
        }
    }

    #[test]
    fn locate_classifies_exactly() {
        let p = fix_p5();
        assert_eq!(
            p.locate(&RationalPoint::from_ints(2, 2)),
            Containment::Outside
        );
        assert_eq!(
            p.locate(&RationalPoint::from_ints(2, 1)),
            Containment::Inside
        );
        assert_eq!(
            p.locate(&RationalPoint::from_ints(2, 0)),
            Containment::OnBoundary
        );
    }
}
