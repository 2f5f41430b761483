use super::env::SensorConfig;
use crate::geom::{measure, SimplePolygon, VisibilityGraph};
use crate::graph::{
    angle_type_labeling, basic_labeling, distinguishing_sequence, Label, LabeledDigraph,
    lookback_labeling,
};
use crate::ANGLE_EPS;
use std::collections::{HashSet, VecDeque};

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= ANGLE_EPS
}

fn close_vecs(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| close(*x, *y))
}

/// Whether two polygons yield the same observations to a freely moving
/// agent with the given sensors, for every move sequence up to `depth`.
///
/// Sensor bundles that are encodable in arc labels (degrees, look-back,
/// angle types) are decided exactly and budget-free via a distinguishing
/// sequence search on the labelings; bundles with real-valued readings
/// fall back to a bounded search over the pair graph with tolerance
/// comparisons.
pub fn observationally_equivalent(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    sensors: SensorConfig,
    depth: usize,
) -> bool {
    let g1 = VisibilityGraph::build(p1).expect("simple polygon");
    let g2 = VisibilityGraph::build(p2).expect("simple polygon");
    let label_encodable = !sensors.angles
        && !sensors.inner_angle
        && !sensors.compass
        && !sensors.cvv
        && !sensors.distances;
    if label_encodable {
        let l1 = sensor_labeling(p1, &g1, sensors);
        let l2 = sensor_labeling(p2, &g2, sensors);
        return distinguishing_sequence(&l1, 0, &l2, 0).is_none();
    }
    bounded_pair_search(p1, &g1, p2, &g2, sensors, depth)
}

fn sensor_labeling(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    sensors: SensorConfig,
) -> LabeledDigraph {
    match (sensors.look_back, sensors.angle_types) {
        (false, false) => basic_labeling(visgraph),
        (true, false) => lookback_labeling(visgraph),
        (false, true) => angle_type_labeling(visgraph, polygon),
        (true, true) => {
            let lb = lookback_labeling(visgraph);
            let at = angle_type_labeling(visgraph, polygon);
            let arcs = (0..visgraph.len())
                .map(|i| {
                    lb.arcs(i)
                        .iter()
                        .zip(at.arcs(i))
                        .map(|((l1, t), (l2, _))| {
                            (Label::Generic(format!("{l1}|{l2}")), *t)
                        })
                        .collect()
                })
                .collect();
            LabeledDigraph::new(arcs).expect("slot-unique labels compose")
        }
    }
}

/// Breadth-first closure over position pairs, comparing observations field
/// by field (tolerances on real-valued readings). The pair space is
/// finite, so running past `depth >= n1 * n2` makes the search exact.
fn bounded_pair_search(
    p1: &SimplePolygon,
    g1: &VisibilityGraph,
    p2: &SimplePolygon,
    g2: &VisibilityGraph,
    sensors: SensorConfig,
    depth: usize,
) -> bool {
    let obs1 = vertex_observations(p1, g1, sensors);
    let obs2 = vertex_observations(p2, g2, sensors);
    let mut seen: HashSet<(usize, usize)> = HashSet::from([(0, 0)]);
    let mut queue: VecDeque<(usize, usize, usize)> = VecDeque::from([(0usize, 0usize, 0usize)]);
    while let Some((u, w, dist)) = queue.pop_front() {
        if !obs1[u].matches(&obs2[w]) {
            return false;
        }
        if dist >= depth {
            continue;
        }
        for s in 0..g1.degree(u) {
            let nu = g1.incident(u)[s];
            let nw = g2.incident(w)[s];
            if sensors.look_back && g1.slot_of(nu, u) != g2.slot_of(nw, w) {
                return false;
            }
            if seen.insert((nu, nw)) {
                queue.push_back((nu, nw, dist + 1));
            }
        }
    }
    true
}

/// Discrete part compared exactly; real-valued readings kept separate for
/// tolerance comparison.
struct VertexReading {
    degree: usize,
    angle_types: Option<Vec<Vec<bool>>>,
    cvv: Option<Vec<bool>>,
    reals: Vec<f64>,
}

impl VertexReading {
    fn matches(&self, other: &VertexReading) -> bool {
        self.degree == other.degree
            && self.angle_types == other.angle_types
            && self.cvv == other.cvv
            && close_vecs(&self.reals, &other.reals)
    }
}

fn vertex_observations(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    sensors: SensorConfig,
) -> Vec<VertexReading> {
    use crate::geom::{angle_measurement, compass_observation, distance_observation};
    (0..visgraph.len())
        .map(|i| {
            let mut reals = Vec::new();
            let m = angle_measurement(polygon, visgraph, i);
            if sensors.angles {
                reals.extend_from_slice(m.angles());
            }
            if sensors.inner_angle {
                reals.push(m.inner_angle());
            }
            if sensors.compass {
                reals.extend(compass_observation(polygon, visgraph, i));
            }
            if sensors.distances {
                reals.extend(distance_observation(polygon, visgraph, i));
            }
            VertexReading {
                degree: visgraph.degree(i),
                angle_types: sensors
                    .angle_types
                    .then(|| crate::graph::angle_type_bits(polygon, visgraph, i)),
                cvv: sensors.cvv.then(|| super::env::cvv(visgraph, i)),
                reals,
            }
        })
        .collect()
}

/// Whether a boundary tour from `v0` yields identical observation
/// sequences in both polygons.
pub fn boundary_tour_equivalent(
    p1: &SimplePolygon,
    p2: &SimplePolygon,
    sensors: SensorConfig,
) -> bool {
    if p1.len() != p2.len() {
        return false;
    }
    let g1 = VisibilityGraph::build(p1).expect("simple polygon");
    let g2 = VisibilityGraph::build(p2).expect("simple polygon");
    let obs1 = vertex_observations(p1, &g1, sensors);
    let obs2 = vertex_observations(p2, &g2, sensors);
    obs1.iter().zip(&obs2).all(|(a, b)| a.matches(b))
}

/// Equivalence for the unordered-angle sensor: the cyclic sequence of
/// per-vertex angle multisets must match under some rotation combined with
/// a choice of boundary direction. An agent whose per-vertex measurement
/// is an unordered set cannot pin down the traversal sense, which is what
/// makes a chiral polygon and its mirror image indistinguishable.
pub fn unordered_angle_tours_equivalent(p1: &SimplePolygon, p2: &SimplePolygon) -> bool {
    if p1.len() != p2.len() {
        return false;
    }
    let n = p1.len();
    let seq = |p: &SimplePolygon| -> Vec<Vec<f64>> {
        let g = VisibilityGraph::build(p).expect("simple polygon");
        measure(p, &g)
            .iter()
            .map(|m| {
                let mut a = m.angles().to_vec();
                a.sort_by(f64::total_cmp);
                a
            })
            .collect()
    };
    let s1 = seq(p1);
    let s2 = seq(p2);
    let mut s2_reversed = s2.clone();
    s2_reversed.reverse();
    for candidate in [&s2, &s2_reversed] {
        for shift in 0..n {
            if (0..n).all(|i| close_vecs(&s1[i], &candidate[(i + shift) % n])) {
                return true;
            }
        }
    }
    false
}

/// Equivalence for an angle agent that is blind to two of the measured
/// values: observation shapes must agree and at most two aligned angle
/// entries may differ.
pub fn two_missing_angles_equivalent(p1: &SimplePolygon, p2: &SimplePolygon) -> bool {
    if p1.len() != p2.len() {
        return false;
    }
    let g1 = VisibilityGraph::build(p1).expect("simple polygon");
    let g2 = VisibilityGraph::build(p2).expect("simple polygon");
    let m1 = measure(p1, &g1);
    let m2 = measure(p2, &g2);
    let mut differing = 0usize;
    for (a, b) in m1.iter().zip(m2.iter()) {
        if a.degree() != b.degree() {
            return false;
        }
        differing += a
            .angles()
            .iter()
            .zip(b.angles())
            .filter(|(x, y)| !close(**x, **y))
            .count();
    }
    differing <= 2
}

/// Whether the two graphs are isomorphic as boundary-anchored ordered
/// structures: some rotation of the vertex indices maps one onto the
/// other, preserving every CCW incident list.
pub fn graphs_boundary_isomorphic(g1: &VisibilityGraph, g2: &VisibilityGraph) -> bool {
    if g1.len() != g2.len() {
        return false;
    }
    let n = g1.len();
    'rot: for r in 0..n {
        for i in 0..n {
            let mapped: Vec<usize> = g1.incident(i).iter().map(|&j| (j + r) % n).collect();
            if g2.incident((i + r) % n) != mapped.as_slice() {
                continue 'rot;
            }
        }
        return true;
    }
    false
}
