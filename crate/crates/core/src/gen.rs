//! Random simple polygon generation and deterministic convex instances.

use crate::geom::{is_simple, RationalPoint, SimplePolygon, VisibilityGraph};
use crate::recon::{reconstruct_with_audit, DecisionAudit};
use crate::ANGLE_EPS;
use num::rational::BigRational;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Lattice coordinates are sampled below 2^16, which keeps the rational
/// bit growth in the exact predicates bounded.
const COORD_BOUND: i64 = 1 << 16;
const MAX_ATTEMPTS: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    TooFewVertices,
    /// The retry budget ran out; reports the seed for reproduction.
    GenerationFailed { seed: u64 },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooFewVertices => write!(f, "fewer than three vertices"),
            GenError::GenerationFailed { seed } => write!(f, "generation failed (seed {seed})"),
        }
    }
}

impl std::error::Error for GenError {}

/// Generates a random simple polygon: `n` random lattice points, repaired
/// by 2-opt untangling, oriented CCW, and accepted only if the polygon is
/// simple, in general position, and has angular slack: every pi-test the
/// reconstructor performs on its measurements lands within `ANGLE_EPS` of
/// pi or at least 100 times that far away. The seed fully determines the
/// output.
pub fn generate_polygon(n: usize, seed: u64) -> Result<SimplePolygon, GenError> {
    if n < 3 {
        return Err(GenError::TooFewVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let mut points = Vec::with_capacity(n);
        while points.len() < n {
            let p = RationalPoint::from_ints(
                rng.gen_range(0..COORD_BOUND),
                rng.gen_range(0..COORD_BOUND),
            );
            if !points.contains(&p) {
                points.push(p);
            }
        }
        if has_collinear_triple(&points) {
            continue 'attempt;
        }
        if !untangle(&mut points) {
            continue 'attempt;
        }
        if signed_area_doubled(&points).is_negative() {
            points.reverse();
        }
        if is_simple(&points) != Ok(true) {
            continue 'attempt;
        }
        let polygon = SimplePolygon::new_unchecked(points);
        if polygon_has_slack(&polygon) {
            return Ok(polygon);
        }
    }
    Err(GenError::GenerationFailed { seed })
}

/// Round-trips the polygon's measurements through the reconstructor and
/// checks the audit: exact graph recovery, agreement of the pi-test across
/// every common window neighbor, and rejected tests at least
/// `100 * ANGLE_EPS` away from pi.
fn polygon_has_slack(polygon: &SimplePolygon) -> bool {
    let Ok(graph) = VisibilityGraph::build(polygon) else {
        return false;
    };
    let measurements = crate::geom::measure(polygon, &graph);
    let mut audit = DecisionAudit::checking_all_neighbors();
    let rec = {
        let mut slot = Some(&mut audit);
        reconstruct_with_audit(&measurements, polygon.len(), &mut slot)
    };
    match rec {
        Ok(rec) => rec == graph && audit.min_reject_gap > 100.0 * ANGLE_EPS,
        Err(_) => false,
    }
}

fn has_collinear_triple(points: &[RationalPoint]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = (&points[j].x - &points[i].x) * (&points[k].y - &points[i].y)
                    - (&points[j].y - &points[i].y) * (&points[k].x - &points[i].x);
                if c.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn signed_area_doubled(points: &[RationalPoint]) -> BigRational {
    let n = points.len();
    let mut acc = BigRational::zero();
    for i in 0..n {
        let a = &points[i];
        let b = &points[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc
}

/// Repeated 2-opt: reverse the chain between two properly crossing edges.
/// Each swap shrinks the total tour length, so the loop terminates; the
/// pass budget is a safety net.
fn untangle(points: &mut [RationalPoint]) -> bool {
    let n = points.len();
    let budget = 40 * n * n + 400;
    for _ in 0..budget {
        let Some((i, j)) = first_crossing(points) else {
            return true;
        };
        points[i + 1..=j].reverse();
    }
    false
}

fn first_crossing(points: &[RationalPoint]) -> Option<(usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (a, b) = (&points[i], &points[(i + 1) % n]);
            let (c, d) = (&points[j], &points[(j + 1) % n]);
            if crate::geom::segments_cross(a, b, c, d) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Deterministic strictly convex polygon with integer coordinates: `n`
/// lattice vectors with pairwise distinct directions, sorted by angle and
/// chained. Regular polygons would need irrational coordinates; this is
/// the exact-arithmetic stand-in.
pub fn convex_polygon(n: usize) -> SimplePolygon {
    assert!(n >= 3, "need at least three vertices");
    let mut vectors: Vec<(i64, i64)> = (0..n as i64 - 1).map(|i| (1, i)).collect();
    let sum: (i64, i64) = vectors.iter().fold((0, 0), |a, v| (a.0 + v.0, a.1 + v.1));
    vectors.push((-sum.0, -sum.1));
    vectors.sort_by(|a, b| compare_by_angle(*a, *b));
    let mut x = 0i64;
    let mut y = 0i64;
    let mut vertices = Vec::with_capacity(n);
    for (dx, dy) in vectors {
        vertices.push(RationalPoint::from_ints(x, y));
        x += dx;
        y += dy;
    }
    SimplePolygon::new(vertices).expect("distinct-direction chain is strictly convex")
}

/// Angular order over lattice vectors starting at the +x axis.
fn compare_by_angle(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    let half = |v: (i64, i64)| -> u8 {
        if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = (a.0 as i128) * (b.1 as i128) - (a.1 as i128) * (b.0 as i128);
        cross.cmp(&0).reverse()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::measure;
    use crate::recon::reconstruct_from_angles;

    #[test]
    fn generation_is_deterministic() {
        let a = generate_polygon(10, 42).unwrap();
        let b = generate_polygon(10, 42).unwrap();
        assert_eq!(a, b);
        let c = generate_polygon(10, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn triangles_generate_trivially() {
        let p = generate_polygon(3, 7).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(is_simple(p.vertices()), Ok(true));
    }

    #[test]
    fn generated_polygons_validate_and_round_trip() {
        for seed in 0..20 {
            let n = 4 + (seed as usize % 9);
            let p = generate_polygon(n, seed).unwrap();
            assert_eq!(is_simple(p.vertices()), Ok(true), "seed {seed}");
            let g = VisibilityGraph::build(&p).unwrap();
            let m = measure(&p, &g);
            assert_eq!(reconstruct_from_angles(&m, n).unwrap(), g, "seed {seed}");
        }
    }

    #[test]
    fn convex_polygons_are_complete() {
        for n in [3, 4, 6, 9, 12] {
            let p = convex_polygon(n);
            assert_eq!(p.len(), n);
            let g = VisibilityGraph::build(&p).unwrap();
            for i in 0..n {
                assert_eq!(g.degree(i), n - 1);
            }
        }
    }
}
