use super::point::RationalPoint;
use super::{GeomError, SimplePolygon};
use num::rational::BigRational;
use num::{Signed, Zero};
use std::cmp::Ordering;

/// The visibility graph of a simple polygon: per vertex, the visible
/// vertices in counter-clockwise order, starting with the boundary
/// successor `v(i+1)` and ending with the predecessor `v(i-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VisibilityGraph {
    incident: Vec<Vec<usize>>,
}

/// CCW-angle comparison class of a direction `u` relative to a reference
/// direction `r`: 0 along `r`, 1 in (0, pi), 2 at pi, 3 in (pi, 2pi).
fn angle_class(r: &(BigRational, BigRational), u: &(BigRational, BigRational)) -> u8 {
    let cr = &r.0 * &u.1 - &r.1 * &u.0;
    if cr.is_positive() {
        return 1;
    }
    if cr.is_negative() {
        return 3;
    }
    let dot = &r.0 * &u.0 + &r.1 * &u.1;
    if dot.is_positive() {
        0
    } else {
        2
    }
}

impl VisibilityGraph {
    /// Builds the visibility graph of `polygon` with exact arithmetic.
    pub fn build(polygon: &SimplePolygon) -> Result<VisibilityGraph, GeomError> {
        let n = polygon.len();
        let mut incident = Vec::with_capacity(n);
        for i in 0..n {
            let mut visible: Vec<usize> = Vec::new();
            for j in 0..n {
                if j != i && polygon.sees(i, j)? {
                    visible.push(j);
                }
            }
            let origin = polygon.vertex(i).clone();
            let rf = direction(&origin, polygon.vertex(i + 1));
            let dirs: Vec<(BigRational, BigRational)> = visible
                .iter()
                .map(|&j| direction(&origin, polygon.vertex(j)))
                .collect();
            let mut order: Vec<usize> = (0..visible.len()).collect();
            order.sort_by(|&a, &b| compare_ccw(&rf, &dirs[a], &dirs[b]));
            let sorted: Vec<usize> = order.into_iter().map(|t| visible[t]).collect();
            debug_assert_eq!(sorted.first(), Some(&((i + 1) % n)));
            debug_assert_eq!(sorted.last(), Some(&((i + n - 1) % n)));
            incident.push(sorted);
        }
        Ok(VisibilityGraph { incident })
    }

    /// Wraps raw incident lists, validating every structural invariant:
    /// lists start at the successor and end at the predecessor, adjacency
    /// is symmetric, and all degrees are at least two.
    pub fn from_incident(incident: Vec<Vec<usize>>) -> Result<VisibilityGraph, GeomError> {
        let n = incident.len();
        if n < 3 {
            return Err(GeomError::TooFewVertices);
        }
        for (i, list) in incident.iter().enumerate() {
            if list.len() < 2 {
                return Err(GeomError::NotPolygonVisibility);
            }
            if list.iter().any(|&j| j >= n || j == i) {
                return Err(GeomError::NotPolygonVisibility);
            }
            let mut seen = vec![false; n];
            for &j in list {
                if seen[j] {
                    return Err(GeomError::NotPolygonVisibility);
                }
                seen[j] = true;
            }
            if list[0] != (i + 1) % n || *list.last().unwrap() != (i + n - 1) % n {
                return Err(GeomError::NotPolygonVisibility);
            }
        }
        let g = VisibilityGraph { incident };
        for i in 0..n {
            for &j in &g.incident[i] {
                if !g.adjacent(j, i) {
                    return Err(GeomError::NotPolygonVisibility);
                }
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.incident.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Degree of vertex `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.incident[i].len()
    }

    pub fn incident(&self, i: usize) -> &[usize] {
        &self.incident[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.incident[i].contains(&j)
    }

    /// 1-based slot of the edge from `i` to `j` in `i`'s CCW order.
    pub fn slot_of(&self, i: usize, j: usize) -> Option<usize> {
        self.incident[i].iter().position(|&t| t == j).map(|p| p + 1)
    }

    /// Target of the `slot`-th edge (1-based) at vertex `i`.
    pub fn target(&self, i: usize, slot: usize) -> Option<usize> {
        if slot == 0 {
            return None;
        }
        self.incident[i].get(slot - 1).copied()
    }

    /// Total number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.incident.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Whether vertex `i` is an ear: its boundary neighbors see each other.
    pub fn is_ear(&self, i: usize) -> bool {
        let n = self.len();
        self.adjacent((i + 1) % n, (i + n - 1) % n)
    }

    /// Removes a set of pairwise non-adjacent ears, compacting indices and
    /// preserving boundary order. The result equals the visibility graph of
    /// the subpolygon obtained by deleting the ear vertices.
    pub fn cut_ears(&self, ears: &[usize]) -> Result<VisibilityGraph, GeomError> {
        let n = self.len();
        for &e in ears {
            if e >= n {
                return Err(GeomError::IndexOutOfRange(e));
            }
            if !self.is_ear(e) {
                return Err(GeomError::NotAnEar(e));
            }
        }
        let mut cut = vec![false; n];
        for &e in ears {
            cut[e] = true;
        }
        for &e in ears {
            if cut[(e + 1) % n] {
                return Err(GeomError::AdjacentEars);
            }
        }
        let remaining: Vec<usize> = (0..n).filter(|&i| !cut[i]).collect();
        if remaining.len() < 3 {
            return Err(GeomError::WouldLeaveNoPolygon);
        }
        let mut new_index = vec![usize::MAX; n];
        for (new, &old) in remaining.iter().enumerate() {
            new_index[old] = new;
        }
        let incident = remaining
            .iter()
            .map(|&old| {
                self.incident[old]
                    .iter()
                    .filter(|&&j| !cut[j])
                    .map(|&j| new_index[j])
                    .collect()
            })
            .collect();
        VisibilityGraph::from_incident(incident)
    }

    /// Combinatorial ear-clipping triangulation: `n - 2` triangles, each a
    /// sorted index triple, every triangle edge an edge of the graph.
    pub fn triangulate(&self) -> Result<Vec<[usize; 3]>, GeomError> {
        let n = self.len();
        let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
        let mut alive = vec![true; n];
        let mut remaining = n;
        let mut triangles = Vec::with_capacity(n - 2);
        while remaining > 3 {
            let mut clipped = None;
            for i in (0..n).filter(|&i| alive[i]) {
                // Ear of the current subpolygon: the surviving neighbors see
                // each other. Visibility inside any ear-cut subpolygon is the
                // induced subgraph, so adjacency in the original graph decides.
                if self.adjacent(prev[i], next[i]) {
                    clipped = Some(i);
                    break;
                }
            }
            let Some(i) = clipped else {
                return Err(GeomError::NotPolygonVisibility);
            };
            let mut tri = [prev[i], i, next[i]];
            tri.sort_unstable();
            triangles.push(tri);
            alive[i] = false;
            next[prev[i]] = next[i];
            prev[next[i]] = prev[i];
            remaining -= 1;
        }
        let first = (0..n).find(|&i| alive[i]).unwrap();
        let mut tri = [first, next[first], next[next[first]]];
        if !self.adjacent(tri[0], tri[1])
            || !self.adjacent(tri[1], tri[2])
            || !self.adjacent(tri[0], tri[2])
        {
            return Err(GeomError::NotPolygonVisibility);
        }
        tri.sort_unstable();
        triangles.push(tri);
        Ok(triangles)
    }
}

fn direction(from: &RationalPoint, to: &RationalPoint) -> (BigRational, BigRational) {
    (&to.x - &from.x, &to.y - &from.y)
}

/// Orders directions by CCW angle from the reference `r` in [0, 2pi).
fn compare_ccw(
    r: &(BigRational, BigRational),
    u: &(BigRational, BigRational),
    w: &(BigRational, BigRational),
) -> Ordering {
    let (cu, cw) = (angle_class(r, u), angle_class(r, w));
    if cu != cw {
        return cu.cmp(&cw);
    }
    // Same open half-plane: u precedes w iff u x w > 0.
    let c = &u.0 * &w.1 - &u.1 * &w.0;
    if c.is_positive() {
        Ordering::Less
    } else if c.is_zero() {
        Ordering::Equal
    } else {
        Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplePolygon {
        SimplePolygon::new(
            [(0, 0), (1, 0), (1, 1), (0, 1)]
                .iter()
                .map(|&(x, y)| RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap()
    }

    fn triangle() -> SimplePolygon {
        SimplePolygon::new(
            [(0, 0), (2, 0), (1, 3)]
                .iter()
                .map(|&(x, y)| RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap()
    }

    fn fix_p5() -> SimplePolygon {
        SimplePolygon::new(vec![
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(4, 0),
            RationalPoint::from_ints(4, 2),
            RationalPoint::from_fractions(2, 1, 6, 5),
            RationalPoint::from_ints(0, 2),
        ])
        .unwrap()
    }

    fn hexagon() -> SimplePolygon {
        // Convex, integer coordinates, strictly convex turns.
        SimplePolygon::new(
            [(0, 0), (2, -1), (4, 0), (5, 2), (2, 4), (-1, 2)]
                .iter()
                .map(|&(x, y)| RationalPoint::from_ints(x, y))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn square_graph_is_complete() {
        let g = VisibilityGraph::build(&square()).unwrap();
        assert_eq!(g.incident(0), &[1, 2, 3]);
        for i in 0..4 {
            assert_eq!(g.degree(i), 3);
        }
    }

    #[test]
    fn triangle_graph_has_degree_two() {
        let g = VisibilityGraph::build(&triangle()).unwrap();
        for i in 0..3 {
            assert_eq!(g.incident(i).len(), 2);
        }
    }

    #[test]
    fn notched_pentagon_graph() {
        let g = VisibilityGraph::build(&fix_p5()).unwrap();
        let degrees: Vec<usize> = (0..5).map(|i| g.degree(i)).collect();
        assert_eq!(degrees, vec![4, 4, 3, 4, 3]);
        // Oracle: compare adjacency against the raw predicate on all pairs.
        let p = fix_p5();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert_eq!(g.adjacent(i, j), p.sees(i, j).unwrap());
                }
            }
        }
        assert!(!g.adjacent(2, 4));
        assert_eq!(g.incident(2), &[3, 0, 1]);
        assert_eq!(g.incident(4), &[0, 1, 3]);
    }

    #[test]
    fn ears_of_notched_pentagon() {
        let g = VisibilityGraph::build(&fix_p5()).unwrap();
        // v3's neighbors are 2 and 4, which do not see each other.
        assert!(!g.is_ear(3));
        assert!(g.is_ear(0));
        let convex = VisibilityGraph::build(&hexagon()).unwrap();
        for i in 0..6 {
            assert!(convex.is_ear(i));
        }
        let t = VisibilityGraph::build(&triangle()).unwrap();
        for i in 0..3 {
            assert!(t.is_ear(i));
        }
    }

    #[test]
    fn cut_single_ear_from_square() {
        let g = VisibilityGraph::build(&square()).unwrap();
        let cut = g.cut_ears(&[0]).unwrap();
        assert_eq!(cut.len(), 3);
        for i in 0..3 {
            assert_eq!(cut.degree(i), 2);
        }
    }

    #[test]
    fn cut_alternating_ears_from_hexagon() {
        let g = VisibilityGraph::build(&hexagon()).unwrap();
        let cut = g.cut_ears(&[0, 2, 4]).unwrap();
        assert_eq!(cut.len(), 3);
    }

    #[test]
    fn cut_matches_geometric_subpolygon() {
        let p = fix_p5();
        let g = VisibilityGraph::build(&p).unwrap();
        let cut = g.cut_ears(&[0]).unwrap();
        let sub = SimplePolygon::new(p.vertices()[1..].to_vec()).unwrap();
        let oracle = VisibilityGraph::build(&sub).unwrap();
        assert_eq!(cut, oracle);
    }

    #[test]
    fn cut_rejects_adjacent_and_exhaustive_sets() {
        let g = VisibilityGraph::build(&square()).unwrap();
        assert_eq!(g.cut_ears(&[0, 1]), Err(GeomError::AdjacentEars));
        let h = VisibilityGraph::build(&hexagon()).unwrap();
        assert_eq!(
            h.cut_ears(&[0, 2, 4, 5]),
            Err(GeomError::AdjacentEars),
            "4 and 5 are adjacent"
        );
        let t = VisibilityGraph::build(&triangle()).unwrap();
        assert_eq!(t.cut_ears(&[0]), Err(GeomError::WouldLeaveNoPolygon));
        let p5 = VisibilityGraph::build(&fix_p5()).unwrap();
        assert_eq!(p5.cut_ears(&[3]), Err(GeomError::NotAnEar(3)));
    }

    #[test]
    fn triangulations() {
        let t = VisibilityGraph::build(&triangle()).unwrap();
        assert_eq!(t.triangulate().unwrap(), vec![[0, 1, 2]]);

        let s = VisibilityGraph::build(&square()).unwrap();
        assert_eq!(s.triangulate().unwrap().len(), 2);

        let g = VisibilityGraph::build(&fix_p5()).unwrap();
        let tris = g.triangulate().unwrap();
        assert_eq!(tris.len(), 3);
        for tri in &tris {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                assert!(g.adjacent(tri[a], tri[b]));
                assert!(
                    !(tri[a] == 2 && tri[b] == 4),
                    "triangulation used the absent pair"
                );
            }
        }
    }

    #[test]
    fn triangulation_rejects_non_polygon_graph() {
        // Boundary 4-cycle without either diagonal: valid lists, but no ear.
        let g = VisibilityGraph::from_incident(vec![
            vec![1, 3],
            vec![2, 0],
            vec![3, 1],
            vec![0, 2],
        ])
        .unwrap();
        assert_eq!(g.triangulate(), Err(GeomError::NotPolygonVisibility));
    }
}
