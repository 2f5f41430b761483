//! Class structure of labeled polygon visibility graphs: the equal-size
//! indistinguishability classes along the boundary, the all-ears property,
//! clique-class detection, size inference, and the sector-based resolution
//! of a clique-class vertex's arcs to global indices.

use crate::geom::VisibilityGraph;
use crate::graph::{Label, LabeledDigraph, MinimumBase};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    /// Class sizes unequal or the boundary class sequence is not periodic.
    IrregularClasses,
    /// No base node attains the maximal self-loop count `n/k - 1`.
    PentagonPremiseViolated,
    /// Arc resolution was asked for a vertex outside the clique class.
    UnsupportedVertex,
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::IrregularClasses => write!(f, "irregular class structure"),
            StructureError::PentagonPremiseViolated => write!(f, "pentagon premise violated"),
            StructureError::UnsupportedVertex => write!(f, "unsupported vertex"),
        }
    }
}

impl std::error::Error for StructureError {}

/// The boundary class structure: `k` classes of size `n/k`, appearing in a
/// fixed order that repeats `n/k` times along the boundary, so members of
/// one class sit `k` apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStructure {
    pub k: usize,
    /// `class_of(v_0), ..., class_of(v_(k-1))`: one period of the boundary
    /// class sequence.
    pub boundary_sequence: Vec<usize>,
    /// Per class, its members in boundary order.
    pub members: Vec<Vec<usize>>,
}

impl ClassStructure {
    /// Validates the equal-size periodic structure of a polygon labeling's
    /// minimum base.
    pub fn from_base(base: &MinimumBase) -> Result<ClassStructure, StructureError> {
        let n = base.class_of.len();
        let k = base.k;
        if k == 0 || n % k != 0 {
            return Err(StructureError::IrregularClasses);
        }
        for i in 0..n {
            if base.class_of[(i + k) % n] != base.class_of[i] {
                return Err(StructureError::IrregularClasses);
            }
        }
        let mut members = vec![Vec::new(); k];
        for (v, &c) in base.class_of.iter().enumerate() {
            members[c].push(v);
        }
        if members.iter().any(|m| m.len() != n / k) {
            return Err(StructureError::IrregularClasses);
        }
        Ok(ClassStructure {
            k,
            boundary_sequence: base.class_of[..k].to_vec(),
            members,
        })
    }
}

/// The all-ears property: whenever any vertex of a class is an ear, every
/// vertex of that class is one.
pub fn pentagon_property(visgraph: &VisibilityGraph, base: &MinimumBase) -> bool {
    let n = visgraph.len();
    for i in 0..n {
        if visgraph.is_ear(i) {
            for j in 0..n {
                if base.class_of[j] == base.class_of[i] && !visgraph.is_ear(j) {
                    return false;
                }
            }
        }
    }
    true
}

/// Ear detection from look-back labels alone: node `i` is an ear iff a
/// two-arc path starting at `i` is labeled `(1, d')` then `(d' - 1, 2)`,
/// where `d'` is the degree of the intermediate node.
pub fn ear_by_label_pattern(g: &LabeledDigraph, i: usize) -> bool {
    let first = g.arcs(i).iter().find_map(|(label, target)| match label {
        Label::LookBack(1, back) => Some((*back, *target)),
        _ => None,
    });
    let Some((back, mid)) = first else {
        return false;
    };
    let d = g.out_degree(mid);
    if back != d || d < 2 {
        return false;
    }
    g.arcs(mid)
        .iter()
        .any(|(label, _)| matches!(label, Label::LookBack(a, 2) if *a == d - 1))
}

/// Number of self-loops at each base node.
fn self_loop_counts(base: &MinimumBase) -> Vec<usize> {
    (0..base.k).map(|c| base.base.self_loops(c)).collect()
}

/// Finds a class that forms a clique: its base node carries the maximal
/// possible `n/k - 1` self-loops. Smallest class id wins ties.
pub fn find_clique_class(base: &MinimumBase, n: usize) -> Result<usize, StructureError> {
    let k = base.k;
    if k == 0 || n % k != 0 {
        return Err(StructureError::IrregularClasses);
    }
    let want = n / k - 1;
    self_loop_counts(base)
        .iter()
        .position(|&c| c == want)
        .ok_or(StructureError::PentagonPremiseViolated)
}

/// Reads the vertex count out of the base: the clique class has the
/// maximal self-loop count, so `n = k * (max self-loops + 1)`.
pub fn infer_n_from_base(base: &MinimumBase) -> usize {
    let max_loops = self_loop_counts(base).into_iter().max().unwrap_or(0);
    base.k * (max_loops + 1)
}

/// The resolved slot-to-global-index map of one clique-class vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorResolution {
    pub vertex: usize,
    /// Global target index per arc slot (1-based slots, entry 0 is slot 1).
    pub targets: Vec<usize>,
}

/// Resolves every arc of clique-class vertex `i` to a global index. The
/// arcs into the clique class itself lead to `v(i+k), v(i+2k), ...` in
/// slot order; they cut the boundary into sectors of `k` consecutive
/// vertices containing each class exactly once, so an arc's target class
/// and sector pin its endpoint.
pub fn resolve_clique_vertex_arcs(
    base: &MinimumBase,
    structure: &ClassStructure,
    n: usize,
    i: usize,
) -> Result<SectorResolution, StructureError> {
    let k = structure.k;
    let clique = find_clique_class(base, n)?;
    if base.class_of[i] != clique {
        return Err(StructureError::UnsupportedVertex);
    }
    // Position of each class inside a sector, anchored at v_i.
    let mut ord = vec![usize::MAX; k];
    for s in 0..k {
        ord[base.class_of[(i + s) % n]] = s;
    }
    let mut targets = Vec::with_capacity(base.base.out_degree(clique));
    let mut sector = 0usize;
    for (_, target_class) in base.base.arcs(clique) {
        if *target_class == clique {
            sector += 1;
            targets.push((i + sector * k) % n);
        } else {
            targets.push((i + sector * k + ord[*target_class]) % n);
        }
    }
    Ok(SectorResolution { vertex: i, targets })
}
