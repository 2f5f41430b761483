//! Corpus-driven properties of the geometry layer and the reconstruction.

mod common;

use common::corpus;
use polyvis::agent::{graphs_boundary_isomorphic, unordered_angle_tours_equivalent};
use polyvis::fixtures;
use polyvis::geom::{measure, SimplePolygon, VisibilityGraph};
use polyvis::recon::{embed, reconstruct_from_angles, reconstruct_unknown_n, reconstruction_stages};
use polyvis::ANGLE_EPS;
use proptest::prelude::*;
use std::f64::consts::PI;

#[test]
fn visibility_graph_shape_invariants() {
    for p in corpus(4..=12, 3) {
        let n = p.len();
        let g = VisibilityGraph::build(&p).unwrap();
        for i in 0..n {
            assert!(g.degree(i) >= 2);
            assert_eq!(g.incident(i)[0], (i + 1) % n);
            assert_eq!(*g.incident(i).last().unwrap(), (i + n - 1) % n);
            for &j in g.incident(i) {
                assert!(g.adjacent(j, i), "symmetry violated at ({i}, {j})");
                assert_eq!(p.sees(i, j), Ok(true));
            }
        }
        let edges = g.edge_count();
        assert!(edges >= n && edges <= n * (n - 1) / 2);
    }
}

#[test]
fn inner_angles_sum_to_polygon_total() {
    for p in corpus(4..=12, 3) {
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let expected = (p.len() as f64 - 2.0) * PI;
        assert!((m.total() - expected).abs() < ANGLE_EPS);
        assert!(m.validate(ANGLE_EPS));
    }
}

/// Every valid ear set cut from the graph must equal the visibility graph
/// of the geometrically reduced polygon, across 200 random polygons.
#[test]
fn ear_cutting_matches_subpolygon_geometry() {
    let mut checked = 0;
    for p in corpus(5..=12, 25) {
        let n = p.len();
        let g = VisibilityGraph::build(&p).unwrap();
        // Greedy non-adjacent ear set.
        let mut ears = Vec::new();
        for i in 0..n {
            if g.is_ear(i)
                && !ears.contains(&((i + 1) % n))
                && !ears.contains(&((i + n - 1) % n))
                && n - (ears.len() + 1) >= 3
            {
                ears.push(i);
            }
        }
        if ears.is_empty() {
            continue;
        }
        let cut = g.cut_ears(&ears).unwrap();
        let remaining: Vec<_> = (0..n)
            .filter(|i| !ears.contains(i))
            .map(|i| p.vertex(i).clone())
            .collect();
        let sub = SimplePolygon::new(remaining).unwrap();
        assert_eq!(cut, VisibilityGraph::build(&sub).unwrap());
        checked += 1;
    }
    assert!(checked >= 190, "only {checked} polygons had cuttable ears");
}

#[test]
fn triangulations_are_proper() {
    for p in corpus(4..=12, 3) {
        let n = p.len();
        let g = VisibilityGraph::build(&p).unwrap();
        let tris = g.triangulate().unwrap();
        assert_eq!(tris.len(), n - 2);
        let mut covered = vec![false; n];
        let mut edge_use = std::collections::HashMap::new();
        for t in &tris {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                assert!(g.adjacent(a, b));
                *edge_use.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
            }
            for &v in t {
                covered[v] = true;
            }
        }
        assert!(covered.iter().all(|&c| c));
        for (&(a, b), &uses) in &edge_use {
            let boundary = (a + 1) % n == b || (b + 1) % n == a;
            if boundary {
                assert_eq!(uses, 1, "boundary edge ({a},{b}) reused");
            } else {
                assert_eq!(uses, 2, "interior edge ({a},{b}) must join two triangles");
            }
        }
    }
}

#[test]
fn reconstruction_round_trips_on_corpus() {
    for p in corpus(4..=12, 3) {
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        assert_eq!(reconstruct_from_angles(&m, p.len()).unwrap(), g);
    }
}

#[test]
fn reconstruction_stages_are_monotone_and_start_at_the_boundary() {
    for p in corpus(5..=10, 2) {
        let n = p.len();
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let stages = reconstruction_stages(&m, n).unwrap();
        for (i, row) in stages[0].iter().enumerate() {
            let mut expected = vec![(i + 1) % n, (i + n - 1) % n];
            expected.sort_unstable();
            assert_eq!(row, &expected);
        }
        for w in stages.windows(2) {
            for i in 0..n {
                assert!(w[0][i].iter().all(|e| w[1][i].contains(e)));
            }
        }
        // The final stage is the full graph.
        let last = stages.last().unwrap();
        for i in 0..n {
            let mut want = g.incident(i).to_vec();
            want.sort_unstable();
            assert_eq!(&last[i], &want);
        }
    }
}

#[test]
fn unknown_n_agrees_with_known_n() {
    for p in corpus(4..=10, 2) {
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let mut feed = m.iter().cloned().collect::<Vec<_>>().into_iter();
        let (n, rec) = reconstruct_unknown_n(&mut || feed.next()).unwrap();
        assert_eq!(n, p.len());
        assert_eq!(rec, g);
    }
}

#[test]
fn embedding_is_a_measurement_fixed_point() {
    for p in corpus(4..=10, 2) {
        let g = VisibilityGraph::build(&p).unwrap();
        let m = measure(&p, &g);
        let e = embed(&g, &m).unwrap();
        assert!(e.signed_area_doubled() > 0.0, "embedding must stay CCW");
        let again = e.measure(&g);
        for (a, b) in m.iter().zip(again.iter()) {
            for (x, y) in a.angles().iter().zip(b.angles()) {
                assert!((x - y).abs() < 1e-6);
            }
        }
    }
}

/// A chiral polygon and its mirror image share every per-vertex angle
/// multiset, yet their graphs differ as boundary-anchored structures.
#[test]
fn mirror_images_are_ambiguous_for_unordered_angles() {
    let p = fixtures::chiral_hexagon();
    let m = p.mirrored();
    assert!(unordered_angle_tours_equivalent(&p, &m));
    let g1 = VisibilityGraph::build(&p).unwrap();
    let g2 = VisibilityGraph::build(&m).unwrap();
    assert!(!graphs_boundary_isomorphic(&g1, &g2));
}

/// Test-only visibility oracle over integer coordinates, independent of
/// the library's rational predicate: orientation-sign crossing tests for
/// every non-incident edge plus a crossing-parity midpoint test, all in
/// f64. Inputs stay far below 2^53, so every product is exact.
mod oracle {
    fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
        ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
    }

    fn crosses_properly(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
        let (o1, o2) = (orient(a, b, c), orient(a, b, d));
        let (o3, o4) = (orient(c, d, a), orient(c, d, b));
        o1 * o2 < 0.0 && o3 * o4 < 0.0
    }

    fn midpoint_inside(poly: &[(f64, f64)], m: (f64, f64)) -> bool {
        let n = poly.len();
        let mut inside = false;
        for e in 0..n {
            let a = poly[e];
            let b = poly[(e + 1) % n];
            if (a.1 > m.1) != (b.1 > m.1) {
                let dy = b.1 - a.1;
                let lhs = (m.0 - a.0) * dy;
                let rhs = (m.1 - a.1) * (b.0 - a.0);
                if (dy > 0.0 && lhs < rhs) || (dy < 0.0 && lhs > rhs) {
                    inside = !inside;
                }
            }
        }
        inside
    }

    pub fn sees(poly: &[(f64, f64)], i: usize, j: usize) -> bool {
        let n = poly.len();
        if (i + 1) % n == j || (j + 1) % n == i {
            return true;
        }
        for e in 0..n {
            let f = (e + 1) % n;
            if e == i || e == j || f == i || f == j {
                continue;
            }
            if crosses_properly(poly[i], poly[j], poly[e], poly[f]) {
                return false;
            }
        }
        let m = ((poly[i].0 + poly[j].0) / 2.0, (poly[i].1 + poly[j].1) / 2.0);
        midpoint_inside(poly, m)
    }
}

#[test]
fn visibility_agrees_with_an_independent_oracle() {
    let mut polys = corpus(4..=12, 3);
    // The notched pentagon scaled to the integer lattice (visibility is
    // scale invariant).
    polys.push(
        SimplePolygon::new(
            [(0, 0), (20, 0), (20, 10), (10, 6), (0, 10)]
                .iter()
                .map(|&(x, y)| polyvis::geom::RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap(),
    );
    for p in polys {
        let n = p.len();
        let coords: Vec<(f64, f64)> = p.vertices().iter().map(|v| v.to_f64()).collect();
        let g = VisibilityGraph::build(&p).unwrap();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert_eq!(g.adjacent(i, j), oracle::sees(&coords, i, j), "pair ({i}, {j})");
                }
            }
        }
    }
}

/// Positive controls: the ambiguity fixtures stop being ambiguous once the
/// sensor actually measures what differs.
#[test]
fn fixture_pairs_are_resolved_by_stronger_sensors() {
    use polyvis::agent::{boundary_tour_equivalent, observationally_equivalent, SensorConfig};
    let (p, q) = fixtures::pocket_pair();
    assert!(!boundary_tour_equivalent(&p, &q, SensorConfig::with_angles()));
    assert!(!observationally_equivalent(&p, &q, SensorConfig::with_angles(), 64));
    // Degrees alone cannot separate the pair: the graphs coincide.
    assert!(observationally_equivalent(&p, &q, SensorConfig::basic(), 64));

    let (a, b) = fixtures::tour_twins().expect("precomputed schedule hits");
    assert!(boundary_tour_equivalent(&a, &b, SensorConfig::basic()));
    assert!(!boundary_tour_equivalent(&a, &b, SensorConfig::with_angles()));
}

#[test]
fn observation_shapes_follow_the_degree() {
    use polyvis::agent::{boundary_tour_observations, AgentEnv, SensorConfig, SizeInfo};
    let p = corpus(7..=7, 1).pop().unwrap();
    let config = SensorConfig {
        angles: true,
        angle_types: true,
        inner_angle: true,
        compass: true,
        cvv: true,
        distances: true,
        look_back: true,
        knowledge: SizeInfo::Exact(7),
    };
    let g = VisibilityGraph::build(&p).unwrap();
    let mut env = AgentEnv::new(p, config).unwrap();
    for (i, obs) in boundary_tour_observations(&mut env).iter().enumerate() {
        let d = g.degree(i);
        assert_eq!(obs.degree, d);
        assert_eq!(obs.angles.as_ref().unwrap().len(), d - 1);
        assert_eq!(obs.cvv.as_ref().unwrap().len(), d + 1);
        assert_eq!(obs.compass.as_ref().unwrap().len(), d);
        assert_eq!(obs.distances.as_ref().unwrap().len(), d);
        let types = obs.angle_types.as_ref().unwrap();
        assert_eq!(types.len(), d);
        assert!(types.iter().all(|row| row.len() == d));
        assert!((obs.inner_angle.unwrap() - obs.angles.as_ref().unwrap().iter().sum::<f64>()).abs() < ANGLE_EPS);
        if i > 0 {
            // Arrived by a slot-1 move: the return slot points at the
            // boundary predecessor, the last incident slot.
            assert_eq!(obs.look_back, Some(d));
        }
    }
}

proptest! {
    /// Measurement files survive write/read exactly.
    #[test]
    fn measurement_file_round_trip(rows in prop::collection::vec(
        prop::collection::vec(1e-6..6.28f64, 1..6), 3..8)) {
        use polyvis::geom::{AngleMeasurement, OrderedAngleMeasurements};
        use polyvis::io::{read_measurements, write_measurements};
        let m = OrderedAngleMeasurements::new(
            rows.into_iter().map(AngleMeasurement::new).collect());
        let text = write_measurements(&m);
        prop_assert_eq!(read_measurements(&text).unwrap(), m);
    }

    /// Labels survive serialization.
    #[test]
    fn label_round_trip(slot in 1usize..50, back in 1usize..50,
                        bits in prop::collection::vec(any::<bool>(), 1..8)) {
        use polyvis::graph::Label;
        for label in [
            Label::Basic(slot),
            Label::LookBack(slot, back),
            Label::AngleType(slot, bits.clone()),
        ] {
            prop_assert_eq!(Label::parse(&label.to_string()), Some(label));
        }
    }
}
