use super::{Label, LabeledDigraph};
use std::collections::{HashSet, VecDeque};

/// Searches for a shortest label sequence realizable from exactly one of
/// the two pointed graphs. `None` means the two generate identical
/// label-sequence languages (for deterministic, locally-oriented graphs
/// this is bisimilarity).
///
/// Breadth-first over the pair graph with labels tried in sorted order, so
/// the returned sequence is the lexicographically least among the shortest.
/// Its length is at most `|g1| * |g2|` plus one final distinguishing label.
pub fn distinguishing_sequence(
    g1: &LabeledDigraph,
    s1: usize,
    g2: &LabeledDigraph,
    s2: usize,
) -> Option<Vec<Label>> {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: VecDeque<(usize, usize, Vec<Label>)> = VecDeque::new();
    seen.insert((s1, s2));
    queue.push_back((s1, s2, Vec::new()));
    while let Some((u, w, prefix)) = queue.pop_front() {
        let lu = g1.out_labels(u);
        let lw = g2.out_labels(w);
        if lu != lw {
            // Smallest label present on exactly one side finishes the
            // sequence.
            let only: Option<&Label> = lu
                .iter()
                .filter(|l| !lw.contains(l))
                .chain(lw.iter().filter(|l| !lu.contains(l)))
                .min();
            let mut delta = prefix;
            delta.push(only.expect("label sets differ").clone());
            return Some(delta);
        }
        for label in lu {
            let nu = g1.step(u, &label).expect("label present");
            let nw = g2.step(w, &label).expect("label present");
            if seen.insert((nu, nw)) {
                let mut next = prefix.clone();
                next.push(label);
                queue.push_back((nu, nw, next));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_basic(n: usize) -> LabeledDigraph {
        LabeledDigraph::new(
            (0..n)
                .map(|i| (1..n).map(|s| (Label::Basic(s), (i + s) % n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identical_pointing_is_indistinguishable() {
        let g = complete_basic(4);
        assert_eq!(distinguishing_sequence(&g, 0, &g, 0), None);
        assert_eq!(distinguishing_sequence(&g, 0, &g, 2), None);
    }

    #[test]
    fn degree_mismatch_is_found_in_one_step() {
        let k3 = complete_basic(3);
        let k4 = complete_basic(4);
        assert_eq!(
            distinguishing_sequence(&k3, 0, &k4, 0),
            Some(vec![Label::Basic(3)])
        );
    }

    #[test]
    fn deeper_difference_needs_a_prefix() {
        // Two rings with a degree bump at different distances from the start.
        let ring_with_bump = |at: usize| {
            LabeledDigraph::new(
                (0..4)
                    .map(|i| {
                        let mut row = vec![(Label::Basic(1), (i + 1) % 4)];
                        if i == at {
                            row.push((Label::Basic(2), i));
                        }
                        row
                    })
                    .collect(),
            )
            .unwrap()
        };
        let a = ring_with_bump(1);
        let b = ring_with_bump(2);
        let delta = distinguishing_sequence(&a, 0, &b, 0).unwrap();
        assert_eq!(delta, vec![Label::Basic(1), Label::Basic(2)]);
        // The sequence is realizable in exactly one of the two.
        assert!(a.walk(0, &delta).is_some());
        assert!(b.walk(0, &delta).is_none());
    }
}
