use super::{GraphError, Label, LabeledDigraph};

/// The minimum base graph of a labeled digraph: the smallest graph
/// indistinguishable from it by arc-label observations along walks,
/// together with the vertex-to-class assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumBase {
    pub base: LabeledDigraph,
    pub class_of: Vec<usize>,
    pub k: usize,
}

/// Computes the minimum base by partition refinement: start from the
/// partition by out-label set and split classes until same-labeled arcs
/// from any class lead to a single class. Class ids are numbered by first
/// occurrence along the node order, so the result is deterministic.
pub fn minimum_base(g: &LabeledDigraph) -> Result<MinimumBase, GraphError> {
    if !g.is_strongly_connected() {
        return Err(GraphError::NotStronglyConnected);
    }
    let n = g.len();
    let mut class_of: Vec<usize> = canonical_classes(&(0..n).map(|v| g.out_labels(v)).collect::<Vec<_>>());
    loop {
        // Signature: current class plus, per arc in label order, the class
        // of its target.
        let signatures: Vec<(usize, Vec<(Label, usize)>)> = (0..n)
            .map(|v| {
                let mut arcs: Vec<(Label, usize)> = g
                    .arcs(v)
                    .iter()
                    .map(|(l, t)| (l.clone(), class_of[*t]))
                    .collect();
                arcs.sort();
                (class_of[v], arcs)
            })
            .collect();
        let refined = canonical_classes(&signatures);
        if refined == class_of {
            break;
        }
        class_of = refined;
    }
    let k = class_of.iter().max().map_or(0, |m| m + 1);
    let mut representative = vec![usize::MAX; k];
    for v in 0..n {
        if representative[class_of[v]] == usize::MAX {
            representative[class_of[v]] = v;
        }
    }
    let arcs = representative
        .iter()
        .map(|&v| {
            g.arcs(v)
                .iter()
                .map(|(l, t)| (l.clone(), class_of[*t]))
                .collect()
        })
        .collect();
    let base = LabeledDigraph::new(arcs)?;
    Ok(MinimumBase { base, class_of, k })
}

/// Renumbers arbitrary keys into dense class ids ordered by first
/// occurrence.
fn canonical_classes<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut seen: Vec<(T, usize)> = Vec::new();
    let mut out = Vec::with_capacity(keys.len());
    for key in keys {
        if let Some(&(_, id)) = seen.iter().find(|(k, _)| k == key) {
            out.push(id);
        } else {
            let id = seen.len();
            seen.push((key.clone(), id));
            out.push(id);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Basic labeling of a complete polygon graph on `n` vertices: slot `s`
    /// at node `i` leads to `i + s`.
    fn convex_basic(n: usize) -> LabeledDigraph {
        LabeledDigraph::new(
            (0..n)
                .map(|i| (1..n).map(|s| (Label::Basic(s), (i + s) % n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn convex_collapses_to_one_class() {
        let mb = minimum_base(&convex_basic(6)).unwrap();
        assert_eq!(mb.k, 1);
        assert_eq!(mb.base.len(), 1);
        assert_eq!(mb.base.self_loops(0), 5);
        assert!(mb.class_of.iter().all(|&c| c == 0));
    }

    #[test]
    fn base_is_idempotent() {
        let mb = minimum_base(&convex_basic(5)).unwrap();
        let again = minimum_base(&mb.base).unwrap();
        assert_eq!(again.k, mb.k);
        assert!(again.class_of.iter().enumerate().all(|(i, &c)| i == c));
    }

    #[test]
    fn two_fold_cover_collapses() {
        // Base: 0 --b1--> 1, 1 --b1--> 0 plus a b2 loop at 1. The cover has
        // nodes (i, layer) with the b1 arc from node 1 crossing layers.
        let base = LabeledDigraph::new(vec![
            vec![(Label::Basic(1), 1)],
            vec![(Label::Basic(1), 0), (Label::Basic(2), 1)],
        ])
        .unwrap();
        let cover = LabeledDigraph::new(vec![
            vec![(Label::Basic(1), 1)],                        // (0, a)
            vec![(Label::Basic(1), 2), (Label::Basic(2), 1)],  // (1, a)
            vec![(Label::Basic(1), 3)],                        // (0, b)
            vec![(Label::Basic(1), 0), (Label::Basic(2), 3)],  // (1, b)
        ])
        .unwrap();
        let mb = minimum_base(&cover).unwrap();
        assert_eq!(mb.k, 2);
        assert_eq!(mb.class_of, vec![0, 1, 0, 1]);
        assert!(mb.base.pointed_isomorphic(0, &base, 0));
        // Corresponding nodes of the base and its cover are
        // indistinguishable by observations.
        use super::super::distinguishing_sequence;
        assert_eq!(distinguishing_sequence(&base, 0, &cover, 0), None);
        assert_eq!(distinguishing_sequence(&base, 1, &cover, 3), None);
        assert!(distinguishing_sequence(&base, 0, &cover, 1).is_some());
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = LabeledDigraph::new(vec![
            vec![(Label::Basic(1), 0)],
            vec![(Label::Basic(1), 0)],
        ])
        .unwrap();
        assert_eq!(minimum_base(&g), Err(GraphError::NotStronglyConnected));
    }
}
