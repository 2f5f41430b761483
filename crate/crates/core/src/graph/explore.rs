use super::{minimum_base, distinguishing_sequence, GraphError, Label, LabeledDigraph};

/// What the exploring agent can do: read the labels of the arcs leaving
/// its current node, and move along the arc with a given label.
pub trait ExploreEnv {
    /// Sorted labels of the arcs at the current node.
    fn observe(&self) -> Vec<Label>;
    /// Moves along the arc with `label`; `false` and no movement if there
    /// is no such arc.
    fn try_move(&mut self, label: &Label) -> bool;
}

/// An environment backed by a labeled digraph; records the label sequence
/// of every successful move.
pub struct GraphEnv<'a> {
    graph: &'a LabeledDigraph,
    at: usize,
    trace: Vec<Label>,
}

impl<'a> GraphEnv<'a> {
    pub fn new(graph: &'a LabeledDigraph, start: usize) -> Self {
        GraphEnv {
            graph,
            at: start,
            trace: Vec::new(),
        }
    }

    pub fn position(&self) -> usize {
        self.at
    }

    /// Labels of all moves made so far.
    pub fn trace(&self) -> &[Label] {
        &self.trace
    }
}

impl ExploreEnv for GraphEnv<'_> {
    fn observe(&self) -> Vec<Label> {
        self.graph.out_labels(self.at)
    }

    fn try_move(&mut self, label: &Label) -> bool {
        match self.graph.step(self.at, label) {
            Some(t) => {
                self.at = t;
                self.trace.push(label.clone());
                true
            }
            None => false,
        }
    }
}

/// A candidate hypothesis: a pointed labeled graph, plus the node reached
/// by replaying the moves made so far.
struct Candidate {
    graph: LabeledDigraph,
    start: usize,
    at: usize,
}

/// Candidate-elimination exploration: starting from a candidate set that
/// contains the environment's minimum base, repeatedly pits two candidates
/// against each other with a distinguishing label sequence, physically
/// attempts the sequence, and discards the loser, until a single pair
/// remains. The survivor is pointed-isomorphic to the minimum base of the
/// environment.
///
/// Candidates whose own minimum base is smaller than themselves are
/// discarded up front; after every elimination, candidates that cannot
/// replay the physical trace are pruned.
pub fn agent_explore_minimum_base(
    env: &mut dyn ExploreEnv,
    candidates: Vec<(LabeledDigraph, usize)>,
) -> Result<(LabeledDigraph, usize), GraphError> {
    let mut alive: Vec<Candidate> = Vec::new();
    for (graph, start) in candidates {
        let mb = minimum_base(&graph)?;
        if mb.k < graph.len() {
            continue; // a smaller indistinguishable graph exists
        }
        alive.push(Candidate {
            at: start,
            graph,
            start,
        });
    }
    loop {
        match alive.len() {
            0 => return Err(GraphError::CandidateExhaustion),
            1 => {
                let c = alive.pop().unwrap();
                return Ok((c.graph, c.start));
            }
            _ => {}
        }
        let delta = distinguishing_sequence(
            &alive[0].graph,
            alive[0].at,
            &alive[1].graph,
            alive[1].at,
        );
        let Some(delta) = delta else {
            // Indistinguishable minimal candidates are isomorphic; keep one.
            alive.remove(1);
            continue;
        };
        let first_realizes = alive[0].graph.walk(alive[0].at, &delta).is_some();
        // Physically attempt delta, extending the trace by the successful
        // prefix and advancing every candidate along it.
        let mut traced_fully = true;
        for label in &delta {
            if !env.try_move(label) {
                traced_fully = false;
                break;
            }
            for c in alive.iter_mut() {
                if c.at != usize::MAX {
                    c.at = match c.graph.step(c.at, label) {
                        Some(t) => t,
                        None => usize::MAX, // cannot replay the trace
                    };
                }
            }
        }
        // The candidate contradicted by the environment's behavior loses.
        let loser = if traced_fully == first_realizes { 1 } else { 0 };
        alive.remove(loser);
        alive.retain(|c| c.at != usize::MAX);
    }
}

/// All locally-oriented, strongly connected graphs with at most
/// `max_nodes` nodes whose out-labels at each node are `Basic(1..=d)` for
/// some `1 <= d <= max_degree`, pointed at every node.
pub fn exhaustive_basic_candidates(
    max_nodes: usize,
    max_degree: usize,
) -> Vec<(LabeledDigraph, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_nodes {
        // Per-node options: a degree d and a target for each of the d slots.
        let mut per_node: Vec<Vec<usize>> = Vec::new();
        for d in 1..=max_degree {
            let mut vecs: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..d {
                let mut next = Vec::new();
                for v in &vecs {
                    for t in 0..n {
                        let mut w = v.clone();
                        w.push(t);
                        next.push(w);
                    }
                }
                vecs = next;
            }
            per_node.extend(vecs);
        }
        // Cartesian product of per-node choices.
        let mut assignments: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for partial in &assignments {
                for choice in &per_node {
                    let mut row = partial.clone();
                    row.push(choice.clone());
                    next.push(row);
                }
            }
            assignments = next;
        }
        for assignment in assignments {
            let arcs = assignment
                .iter()
                .map(|targets| {
                    targets
                        .iter()
                        .enumerate()
                        .map(|(s, &t)| (Label::Basic(s + 1), t))
                        .collect()
                })
                .collect();
            let g = LabeledDigraph::new(arcs).expect("slot labels are unique");
            if g.is_strongly_connected() {
                for start in 0..n {
                    out.push((g.clone(), start));
                }
            }
        }
    }
    out
}

/// All quotients of `g` by label-compatible partitions, each pointed at
/// the class of `start`. The minimum base is always among them.
pub fn quotient_candidates(g: &LabeledDigraph, start: usize) -> Vec<(LabeledDigraph, usize)> {
    let n = g.len();
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        if let Some(quotient) = quotient_by(g, &partition) {
            out.push((quotient, partition[start]));
        }
    }
    out
}

/// The quotient of `g` by a node partition, if the partition is
/// label-compatible: nodes in a block share their out-label set and
/// same-labeled arcs from a block lead into a single block.
fn quotient_by(g: &LabeledDigraph, class_of: &[usize]) -> Option<LabeledDigraph> {
    let k = class_of.iter().max().map_or(0, |m| m + 1);
    let mut representative = vec![usize::MAX; k];
    for (v, &c) in class_of.iter().enumerate() {
        if representative[c] == usize::MAX {
            representative[c] = v;
        }
    }
    for (v, &c) in class_of.iter().enumerate() {
        let rep = representative[c];
        if g.out_labels(v) != g.out_labels(rep) {
            return None;
        }
        for (label, t) in g.arcs(v) {
            let rep_t = g.step(rep, label).expect("label sets match");
            if class_of[*t] != class_of[rep_t] {
                return None;
            }
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
    Some(LabeledDigraph::new(arcs).expect("quotient inherits local orientation"))
}

/// All partitions of `0..n` as dense class-id vectors (restricted growth
/// strings), first-occurrence ordered.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fn rec(i: usize, max_used: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for c in 0..=max_used + 1 {
            current[i] = c;
            rec(i + 1, max_used.max(c), current, out);
        }
    }
    if n > 0 {
        current[0] = 0;
        rec(1, 0, &mut current, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn convex_basic(n: usize) -> LabeledDigraph {
        LabeledDigraph::new(
            (0..n)
                .map(|i| (1..n).map(|s| (Label::Basic(s), (i + s) % n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn singleton_candidate_returns_immediately() {
        let g = convex_basic(4);
        let base = minimum_base(&g).unwrap().base;
        let mut env = GraphEnv::new(&g, 0);
        let (found, at) =
            agent_explore_minimum_base(&mut env, vec![(base.clone(), 0)]).unwrap();
        assert!(found.pointed_isomorphic(at, &base, 0));
        assert!(env.trace().is_empty());
    }

    #[test]
    fn decoy_with_wrong_self_loop_labels_is_eliminated() {
        let hexagon = convex_basic(6);
        let base = minimum_base(&hexagon).unwrap().base;
        // One node, five self-loops, but labeled 1,2,3,4,6.
        let decoy = LabeledDigraph::new(vec![[1, 2, 3, 4, 6]
            .iter()
            .map(|&s| (Label::Basic(s), 0))
            .collect()])
        .unwrap();
        let mut env = GraphEnv::new(&hexagon, 0);
        let (found, at) = agent_explore_minimum_base(
            &mut env,
            vec![(base.clone(), 0), (hexagon.clone(), 0), (decoy, 0)],
        )
        .unwrap();
        assert!(found.pointed_isomorphic(at, &base, 0));
        assert!(!env.trace().is_empty());
    }

    #[test]
    fn missing_true_base_exhausts_candidates() {
        // The only candidate collapses to a smaller base, so the initial
        // minimality pruning empties the set.
        let g = convex_basic(5);
        let mut env = GraphEnv::new(&g, 0);
        assert_eq!(
            agent_explore_minimum_base(&mut env, vec![(g.clone(), 0)]),
            Err(GraphError::CandidateExhaustion)
        );
        let mut env = GraphEnv::new(&g, 0);
        assert_eq!(
            agent_explore_minimum_base(&mut env, Vec::new()),
            Err(GraphError::CandidateExhaustion)
        );
    }

    #[test]
    fn quotient_candidates_contain_the_base() {
        let g = convex_basic(4);
        let base = minimum_base(&g).unwrap();
        let quotients = quotient_candidates(&g, 0);
        assert!(quotients
            .iter()
            .any(|(q, s)| q.pointed_isomorphic(*s, &base.base, base.class_of[0])));
        // The trivial (identity) quotient is there too.
        assert!(quotients.iter().any(|(q, _)| q.len() == 4));
    }

    #[test]
    fn exploration_finds_base_from_quotients() {
        let g = convex_basic(6);
        let base = minimum_base(&g).unwrap().base;
        let mut env = GraphEnv::new(&g, 0);
        let candidates = quotient_candidates(&g, 0);
        let (found, at) = agent_explore_minimum_base(&mut env, candidates).unwrap();
        assert!(found.pointed_isomorphic(at, &base, 0));
    }

    #[test]
    fn exhaustive_enumerator_covers_small_graphs() {
        let candidates = exhaustive_basic_candidates(2, 2);
        // The 1-node, 1-loop graph appears pointed at its only node.
        assert!(candidates
            .iter()
            .any(|(g, s)| g.len() == 1 && g.out_degree(0) == 1 && *s == 0));
        // Everything is strongly connected and locally oriented.
        for (g, _) in &candidates {
            assert!(g.is_strongly_connected());
        }
    }

    #[test]
    fn exploration_with_exhaustive_candidates() {
        // Asymmetric 3-node environment; its base is itself.
        let env_graph = LabeledDigraph::new(vec![
            vec![(Label::Basic(1), 1)],
            vec![(Label::Basic(1), 2), (Label::Basic(2), 0)],
            vec![(Label::Basic(1), 0)],
        ])
        .unwrap();
        let base = minimum_base(&env_graph).unwrap();
        assert_eq!(base.k, 3);
        let mut env = GraphEnv::new(&env_graph, 0);
        let candidates = exhaustive_basic_candidates(3, 2);
        let (found, at) = agent_explore_minimum_base(&mut env, candidates).unwrap();
        assert!(found.pointed_isomorphic(at, &env_graph, 0));
    }
}
