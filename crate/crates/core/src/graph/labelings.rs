use super::{Label, LabeledDigraph};
use crate::geom::{SimplePolygon, VisibilityGraph};
use num::Signed;

/// Directed version of the visibility graph with each outgoing arc labeled
/// by its CCW position at the source, 1-based.
pub fn basic_labeling(visgraph: &VisibilityGraph) -> LabeledDigraph {
    let arcs = (0..visgraph.len())
        .map(|i| {
            visgraph
                .incident(i)
                .iter()
                .enumerate()
                .map(|(s, &j)| (Label::Basic(s + 1), j))
                .collect()
        })
        .collect();
    LabeledDigraph::new(arcs).expect("slot labels are locally unique")
}

/// Basic labels extended with the slot of the reverse arc at the target,
/// so an agent can backtrack: after moving along `(a, b)` the arc labeled
/// `(b, a)` leads back.
pub fn lookback_labeling(visgraph: &VisibilityGraph) -> LabeledDigraph {
    let arcs = (0..visgraph.len())
        .map(|i| {
            visgraph
                .incident(i)
                .iter()
                .enumerate()
                .map(|(s, &j)| {
                    let back = visgraph.slot_of(j, i).expect("visibility is symmetric");
                    (Label::LookBack(s + 1, back), j)
                })
                .collect()
        })
        .collect();
    LabeledDigraph::new(arcs).expect("slot labels are locally unique")
}

/// One convexity bit of arc pair `{s, j}` at vertex `i`: true iff the CCW
/// angle from the earlier to the later arc (in slot order) is reflex
/// (> pi). Decided exactly from the coordinates; general position rules
/// out angles of exactly pi. At a convex vertex every pair is convex.
pub(crate) fn angle_pair_is_reflex(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    i: usize,
    s: usize,
    j: usize,
) -> bool {
    if s == j {
        return false;
    }
    let (lo, hi) = if s < j { (s, j) } else { (j, s) };
    let incident = visgraph.incident(i);
    polygon.cross_at(i, incident[lo], incident[hi]).is_negative()
}

/// The per-arc bit rows of the angle-type sensor at vertex `i`.
pub fn angle_type_bits(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    i: usize,
) -> Vec<Vec<bool>> {
    let d = visgraph.degree(i);
    (0..d)
        .map(|s| {
            (0..d)
                .map(|j| angle_pair_is_reflex(polygon, visgraph, i, s, j))
                .collect()
        })
        .collect()
}

/// Basic labels extended with one convexity bit per arc at the source:
/// bit `j` is set iff this arc and the `j+1`-th arc span a reflex angle.
pub fn angle_type_labeling(
    visgraph: &VisibilityGraph,
    polygon: &SimplePolygon,
) -> LabeledDigraph {
    let arcs = (0..visgraph.len())
        .map(|i| {
            let rows = angle_type_bits(polygon, visgraph, i);
            visgraph
                .incident(i)
                .iter()
                .zip(rows)
                .enumerate()
                .map(|(s, (&target, bits))| (Label::AngleType(s + 1, bits), target))
                .collect()
        })
        .collect();
    LabeledDigraph::new(arcs).expect("slot labels are locally unique")
}
