//! Reference polygons used across the test suites and the documentation.

use crate::gen::generate_polygon;
use crate::geom::{measure, RationalPoint, SimplePolygon, VisibilityGraph};
use num::bigint::BigInt;
use num::rational::BigRational;
use crate::ANGLE_EPS;

/// A pentagon with one reflex notch: degrees (4, 4, 3, 4, 3), the pair
/// {2, 4} being the only non-edge.
pub fn notched_pentagon() -> SimplePolygon {
    SimplePolygon::new(vec![
        RationalPoint::from_ints(0, 0),
        RationalPoint::from_ints(4, 0),
        RationalPoint::from_ints(4, 2),
        RationalPoint::from_fractions(2, 1, 6, 5),
        RationalPoint::from_ints(0, 2),
    ])
    .expect("fixture is simple")
}

/// A centrally symmetric non-convex octagon (`v(i+4) = -v(i)`): the basic
/// and look-back labelings both have four classes of size two.
pub fn symmetric_octagon() -> SimplePolygon {
    SimplePolygon::new(
        [
            (1, 0),
            (-5, 3),
            (-5, 1),
            (-4, 1),
            (-1, 0),
            (5, -3),
            (5, -1),
            (4, -1),
        ]
        .iter()
        .map(|&(x, y)| RationalPoint::from_ints(x, y))
        .collect(),
    )
    .expect("fixture is simple")
}

/// A hexagon whose visibility graph is chiral: no rotation maps it onto
/// its mirror image's graph.
pub fn chiral_hexagon() -> SimplePolygon {
    generate_polygon(6, 0).expect("seed 0 generates")
}

/// Two polygons of identical shape except for one degree-2 pocket vertex,
/// displaced along the ray from its boundary predecessor. The visibility
/// graphs coincide and the angle measurements differ in exactly two
/// entries: the inner angle at the pocket vertex and one angle at its
/// successor.
pub fn pocket_pair() -> (SimplePolygon, SimplePolygon) {
    let p = generate_polygon(7, 0).expect("seed 0 generates");
    let g = VisibilityGraph::build(&p).expect("simple");
    let i = (0..7).find(|&v| g.degree(v) == 2).expect("pocket vertex");
    let u = (i + 6) % 7;
    let t = BigRational::new(BigInt::from(9), BigInt::from(8));
    let mut verts = p.vertices().to_vec();
    let vu = p.vertex(u).clone();
    let vi = p.vertex(i).clone();
    verts[i] = RationalPoint::new(
        &vu.x + &t * (&vi.x - &vu.x),
        &vu.y + &t * (&vi.y - &vu.y),
    );
    let q = SimplePolygon::new(verts).expect("perturbed polygon stays simple");
    let gq = VisibilityGraph::build(&q).expect("simple");
    assert_eq!(g, gq, "perturbation must not change the graph");
    let diffs: usize = measure(&p, &g)
        .iter()
        .zip(measure(&q, &gq).iter())
        .map(|(a, b)| {
            a.angles()
                .iter()
                .zip(b.angles())
                .filter(|(x, y)| (**x - **y).abs() > ANGLE_EPS)
                .count()
        })
        .sum();
    assert_eq!(diffs, 2, "exactly two angles must differ");
    (p, q)
}

/// Two octagons with different visibility graphs that give a basic agent
/// identical observations on a boundary tour (the same degree sequence).
/// Found by offline search over generator seeds; regenerated and
/// re-verified here.
pub fn tour_twins() -> Option<(SimplePolygon, SimplePolygon)> {
    find_tour_twins([(8, 213), (8, 811)].into_iter())
}

/// Bounded search for a pair of polygons that a boundary-touring basic
/// agent cannot distinguish even though their graphs differ. Returns the
/// first hit among the given `(n, seed)` schedule.
pub fn find_tour_twins(
    schedule: impl Iterator<Item = (usize, u64)>,
) -> Option<(SimplePolygon, SimplePolygon)> {
    use crate::agent::{boundary_tour_equivalent, graphs_boundary_isomorphic, SensorConfig};
    let mut pool: Vec<(SimplePolygon, VisibilityGraph)> = Vec::new();
    for (n, seed) in schedule {
        let Ok(p) = generate_polygon(n, seed) else {
            continue;
        };
        for r in 0..n {
            let mut verts = p.vertices().to_vec();
            verts.rotate_left(r);
            let Ok(rotated) = SimplePolygon::new(verts) else {
                continue;
            };
            let rg = VisibilityGraph::build(&rotated).expect("simple");
            for (op, og) in &pool {
                if op.len() == n
                    && boundary_tour_equivalent(op, &rotated, SensorConfig::basic())
                    && !graphs_boundary_isomorphic(og, &rg)
                {
                    return Some((op.clone(), rotated));
                }
            }
            pool.push((rotated, rg));
        }
    }
    None
}
