/// State of the iterative reconstruction after step `k`: exactly the edges
/// of the target graph connecting vertices at most `k` apart along the
/// boundary, plus the per-vertex window counters derived from them.
#[derive(Debug, Clone)]
pub struct PartialVisibility {
    n: usize,
    step: usize,
    adjacent: Vec<Vec<bool>>,
}

impl PartialVisibility {
    /// Empty edge set at step 0.
    pub fn new(n: usize) -> Self {
        PartialVisibility {
            n,
            step: 0,
            adjacent: vec![vec![false; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Boundary distance up to which all edges are decided.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn advance_step(&mut self) {
        self.step += 1;
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.adjacent[i][j]
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adjacent[i][j] = true;
        self.adjacent[j][i] = true;
    }

    /// `r_i`: visible among the next `radius` vertices along the boundary.
    pub fn right_count(&self, i: usize, radius: usize) -> usize {
        (1..=radius)
            .filter(|t| self.adjacent[i][(i + t) % self.n])
            .count()
    }

    /// `l_i`: visible among the previous `radius` vertices.
    pub fn left_count(&self, i: usize, radius: usize) -> usize {
        (1..=radius)
            .filter(|t| self.adjacent[i][(i + self.n - t) % self.n])
            .count()
    }

    /// Visible vertices of `v` strictly between `v + lo` and `v + hi`
    /// (cyclic forward offsets, exclusive bounds).
    pub fn count_between(&self, v: usize, lo: usize, hi: usize) -> usize {
        (lo + 1..hi)
            .filter(|t| self.adjacent[v][(v + t) % self.n])
            .count()
    }

    /// Per-vertex sorted adjacency lists (by global index).
    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.adjacent
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(j, &a)| a.then_some(j))
                    .collect()
            })
            .collect()
    }

    /// Incident lists in CCW order: for edges no more than `n/2` apart this
    /// is the boundary order starting at the successor.
    pub fn to_incident(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| {
                (1..self.n)
                    .map(|t| (i + t) % self.n)
                    .filter(|&j| self.adjacent[i][j])
                    .collect()
            })
            .collect()
    }
}
