use super::{GraphError, Label};

/// A directed multigraph with locally-unique arc labels: no two arcs
/// leaving the same node carry the same label. Immutable after
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    arcs: Vec<Vec<(Label, usize)>>,
}

impl LabeledDigraph {
    /// Validates local orientation and target ranges.
    pub fn new(arcs: Vec<Vec<(Label, usize)>>) -> Result<Self, GraphError> {
        let n = arcs.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for row in &arcs {
            for (label, target) in row {
                if *target >= n {
                    return Err(GraphError::TargetOutOfRange(*target));
                }
                if row.iter().filter(|(l, _)| l == label).count() > 1 {
                    return Err(GraphError::NotLocallyOriented);
                }
            }
        }
        Ok(LabeledDigraph { arcs })
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self, node: usize) -> &[(Label, usize)] {
        &self.arcs[node]
    }

    pub fn out_degree(&self, node: usize) -> usize {
        self.arcs[node].len()
    }

    /// Labels of the arcs leaving `node`, sorted.
    pub fn out_labels(&self, node: usize) -> Vec<Label> {
        let mut labels: Vec<Label> = self.arcs[node].iter().map(|(l, _)| l.clone()).collect();
        labels.sort();
        labels
    }

    /// Target of the arc with `label` at `node`, if present.
    pub fn step(&self, node: usize, label: &Label) -> Option<usize> {
        self.arcs[node]
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, t)| t)
    }

    /// Follows a label sequence; `None` if some label is missing en route.
    pub fn walk(&self, start: usize, labels: &[Label]) -> Option<usize> {
        let mut at = start;
        for label in labels {
            at = self.step(at, label)?;
        }
        Some(at)
    }

    /// Number of self-loops at `node`.
    pub fn self_loops(&self, node: usize) -> usize {
        self.arcs[node].iter().filter(|&&(_, t)| t == node).count()
    }

    pub fn is_strongly_connected(&self) -> bool {
        let forward = |node: usize| self.arcs[node].iter().map(|&(_, t)| t).collect::<Vec<_>>();
        if !reaches_all(self.len(), 0, forward) {
            return false;
        }
        let mut reverse = vec![Vec::new(); self.len()];
        for (u, row) in self.arcs.iter().enumerate() {
            for &(_, t) in row {
                reverse[t].push(u);
            }
        }
        reaches_all(self.len(), 0, |node| reverse[node].clone())
    }

    /// Whether the pointed graphs `(self, s1)` and `(other, s2)` are
    /// isomorphic as labeled graphs with distinguished start nodes. Both
    /// must be strongly connected (every node reachable from the start);
    /// determinism then forces the mapping.
    pub fn pointed_isomorphic(&self, s1: usize, other: &LabeledDigraph, s2: usize) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut inverse = vec![usize::MAX; n];
        map[s1] = s2;
        inverse[s2] = s1;
        let mut queue = std::collections::VecDeque::from([s1]);
        while let Some(u) = queue.pop_front() {
            let v = map[u];
            if self.out_labels(u) != other.out_labels(v) {
                return false;
            }
            for (label, t1) in &self.arcs[u] {
                let t2 = other.step(v, label).expect("label sets match");
                if map[*t1] == usize::MAX && inverse[t2] == usize::MAX {
                    map[*t1] = t2;
                    inverse[t2] = *t1;
                    queue.push_back(*t1);
                } else if map[*t1] != t2 {
                    return false;
                }
            }
        }
        map.iter().all(|&m| m != usize::MAX)
    }
}

fn reaches_all(n: usize, start: usize, succ: impl Fn(usize) -> Vec<usize>) -> bool {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for t in succ(u) {
            if !seen[t] {
                seen[t] = true;
                count += 1;
                stack.push(t);
            }
        }
    }
    count == n
}
