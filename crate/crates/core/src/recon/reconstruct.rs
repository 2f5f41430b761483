use super::partial::PartialVisibility;
use super::ReconError;
use crate::geom::{AngleMeasurement, OrderedAngleMeasurements, VisibilityGraph};
use crate::ANGLE_EPS;
use std::f64::consts::PI;

/// CCW angle at a vertex between its `a`-th and `b`-th incident edges,
/// obtained by summing the enclosed measurement entries.
pub fn angle_between(measurement: &AngleMeasurement, a: usize, b: usize) -> Result<f64, ReconError> {
    let d = measurement.degree();
    if a < 1 || b <= a || b > d {
        return Err(ReconError::InvalidEdgeSlot);
    }
    Ok(measurement.angles()[a - 1..b - 1].iter().sum())
}

/// Records how close the pi-tests came to the decision threshold; used by
/// the generator to enforce angular slack. With `check_all_neighbors` set,
/// the criterion is evaluated for every common window neighbor instead of
/// the first, and any disagreement among them is an error.
#[derive(Debug, Clone)]
pub struct DecisionAudit {
    /// Largest |sum - pi| over decisions that accepted an edge.
    pub max_accept_gap: f64,
    /// Smallest |sum - pi| over decisions that rejected one.
    pub min_reject_gap: f64,
    pub tests: usize,
    pub check_all_neighbors: bool,
}

impl DecisionAudit {
    pub fn new() -> Self {
        DecisionAudit {
            max_accept_gap: 0.0,
            min_reject_gap: f64::INFINITY,
            tests: 0,
            check_all_neighbors: false,
        }
    }

    pub fn checking_all_neighbors() -> Self {
        DecisionAudit {
            check_all_neighbors: true,
            ..DecisionAudit::new()
        }
    }

    fn record(&mut self, gap: f64, accepted: bool) {
        self.tests += 1;
        if accepted {
            self.max_accept_gap = self.max_accept_gap.max(gap);
        } else {
            self.min_reject_gap = self.min_reject_gap.min(gap);
        }
    }
}

impl Default for DecisionAudit {
    fn default() -> Self {
        Self::new()
    }
}

fn pi_test(alpha: f64, beta: f64, gamma: f64, audit: &mut Option<&mut DecisionAudit>) -> bool {
    let gap = (alpha + beta + gamma - PI).abs();
    let accepted = gap < ANGLE_EPS;
    if let Some(a) = audit.as_deref_mut() {
        a.record(gap, accepted);
    }
    accepted
}

/// Decides whether the pair `(v_i, v_(i+k+1))` is an edge, where `k` is the
/// step held by `partial`: a common window neighbor `v_j` must exist, and
/// the angles alpha (at `v_i`), beta (at `v_(i+k+1)`) and gamma (at `v_j`)
/// must sum to pi. A hypothesized edge slot already consumed by the
/// opposite window is an immediate no.
pub fn decide_edge(
    partial: &PartialVisibility,
    measurements: &OrderedAngleMeasurements,
    i: usize,
) -> Result<bool, ReconError> {
    decide_edge_inner(partial, measurements, i, &mut None)
}

fn degree_of(measurements: &OrderedAngleMeasurements, v: usize) -> usize {
    measurements.at(v).degree()
}

fn decide_edge_inner(
    partial: &PartialVisibility,
    measurements: &OrderedAngleMeasurements,
    i: usize,
    audit: &mut Option<&mut DecisionAudit>,
) -> Result<bool, ReconError> {
    let n = partial.n();
    let k = partial.step();
    let p = (i + k + 1) % n;
    let d_i = degree_of(measurements, i);
    let d_p = degree_of(measurements, p);

    // Common neighbors of the pair inside the window, in CCW order.
    let common: Vec<usize> = (1..=k)
        .map(|t| (i + t) % n)
        .filter(|&j| partial.contains(i, j) && partial.contains(p, j))
        .collect();
    if common.is_empty() {
        return Ok(false);
    }

    let r_i = partial.right_count(i, k);
    let l_i = partial.left_count(i, k);
    let r_p = partial.right_count(p, k);
    let l_p = partial.left_count(p, k);
    if r_i >= d_i || l_p >= d_p {
        // The criterion would need a slot beyond the stated degree.
        return Err(ReconError::InconsistentMeasurements);
    }
    // All slots of the near side already assigned to the far window.
    if r_i + 1 > d_i - l_i || d_p - l_p < r_p + 1 {
        return Ok(false);
    }

    // The verdict is independent of which common neighbor carries the
    // test; the audit's check-all mode verifies that on every decision.
    let check_all = audit.as_deref().is_some_and(|a| a.check_all_neighbors);
    let mut verdict = None;
    for &j in &common {
        let dist_ij = (j + n - i) % n;
        let dist_jp = (p + n - j) % n;
        let x = 1 + partial.count_between(i, 0, dist_ij);
        let y = d_p - partial.count_between(p, n - dist_jp, n);
        let slot_j_to_p = 1 + partial.count_between(j, 0, dist_jp);
        let slot_j_to_i = degree_of(measurements, j) - partial.count_between(j, n - dist_ij, n);
        let alpha = angle_between(measurements.at(i), x, r_i + 1)
            .map_err(|_| ReconError::InconsistentMeasurements)?;
        let beta = angle_between(measurements.at(p), d_p - l_p, y)
            .map_err(|_| ReconError::InconsistentMeasurements)?;
        let gamma = angle_between(measurements.at(j), slot_j_to_p, slot_j_to_i)
            .map_err(|_| ReconError::InconsistentMeasurements)?;
        let this = pi_test(alpha, beta, gamma, audit);
        match verdict {
            None => verdict = Some(this),
            Some(first) if first != this => return Err(ReconError::InconsistentMeasurements),
            Some(_) => {}
        }
        if !check_all {
            break;
        }
    }
    Ok(verdict.unwrap())
}

/// Reconstructs the visibility graph from the ordered list of angle
/// measurements of an `n`-vertex polygon. Exact round trip: the result
/// equals the source polygon's graph with vertex identities preserved.
pub fn reconstruct_from_angles(
    measurements: &OrderedAngleMeasurements,
    n: usize,
) -> Result<VisibilityGraph, ReconError> {
    reconstruct_with_audit(measurements, n, &mut None)
}

/// Reconstruction variant exposing the pi-test audit.
pub fn reconstruct_with_audit(
    measurements: &OrderedAngleMeasurements,
    n: usize,
    audit: &mut Option<&mut DecisionAudit>,
) -> Result<VisibilityGraph, ReconError> {
    if n < 3 {
        return Err(ReconError::InvalidSize);
    }
    if measurements.len() != n {
        return Err(ReconError::InconsistentMeasurements);
    }
    let mut partial = PartialVisibility::new(n);
    for i in 0..n {
        partial.add_edge(i, (i + 1) % n);
    }
    partial.advance_step();
    for _k in 2..=(n / 2) {
        let mut added = Vec::new();
        for i in 0..n {
            let p = (i + partial.step() + 1) % n;
            if partial.contains(i, p) {
                continue;
            }
            if decide_edge_inner(&partial, measurements, i, audit)? {
                added.push((i, p));
            }
        }
        // Edges of one distance class are decided against the previous
        // step's graph, then committed together.
        for (i, p) in added {
            partial.add_edge(i, p);
        }
        partial.advance_step();
    }
    finish(&partial, measurements)
}

fn finish(
    partial: &PartialVisibility,
    measurements: &OrderedAngleMeasurements,
) -> Result<VisibilityGraph, ReconError> {
    let incident = partial.to_incident();
    for (i, row) in incident.iter().enumerate() {
        if row.len() != degree_of(measurements, i) {
            return Err(ReconError::InconsistentMeasurements);
        }
    }
    VisibilityGraph::from_incident(incident).map_err(|_| ReconError::InconsistentMeasurements)
}

/// Monotone edge-set snapshots `E(1) .. E(floor(n/2))` of a reconstruction,
/// for invariant checks.
pub fn reconstruction_stages(
    measurements: &OrderedAngleMeasurements,
    n: usize,
) -> Result<Vec<Vec<Vec<usize>>>, ReconError> {
    if n < 3 {
        return Err(ReconError::InvalidSize);
    }
    if measurements.len() != n {
        return Err(ReconError::InconsistentMeasurements);
    }
    let mut partial = PartialVisibility::new(n);
    for i in 0..n {
        partial.add_edge(i, (i + 1) % n);
    }
    partial.advance_step();
    let mut stages = vec![partial.edge_sets()];
    for _k in 2..=(n / 2) {
        let mut added = Vec::new();
        for i in 0..n {
            let p = (i + partial.step() + 1) % n;
            if !partial.contains(i, p) && decide_edge(&partial, measurements, i)? {
                added.push((i, p));
            }
        }
        for (i, p) in added {
            partial.add_edge(i, p);
        }
        partial.advance_step();
        stages.push(partial.edge_sets());
    }
    Ok(stages)
}

/// Fills the single absent angle using the fact that the inner angles of an
/// `n`-vertex polygon sum to `(n-2)pi`.
pub fn fill_missing_angle(
    measurements: &[Vec<Option<f64>>],
    n: usize,
) -> Result<OrderedAngleMeasurements, ReconError> {
    let missing: usize = measurements
        .iter()
        .map(|m| m.iter().filter(|a| a.is_none()).count())
        .sum();
    if missing >= 2 {
        return Err(ReconError::Underdetermined);
    }
    let present: f64 = measurements
        .iter()
        .flat_map(|m| m.iter().flatten())
        .sum();
    let fill = (n as f64 - 2.0) * PI - present;
    Ok(OrderedAngleMeasurements::new(
        measurements
            .iter()
            .map(|m| AngleMeasurement::new(m.iter().map(|a| a.unwrap_or(fill)).collect()))
            .collect(),
    ))
}

/// Reconstruction without prior knowledge of `n`: measurements are pulled
/// from `supplier` one boundary vertex at a time. Growing the known chain
/// `v0..vk`, the pair `(vt, vk)` is decided with the same pi-criterion the
/// moment `vk`'s measurement arrives; once all `d0` edges of `v0` are
/// identified, the last one points at the clockwise neighbor, which fixes
/// `n`, and the edge set is already complete.
pub fn reconstruct_unknown_n(
    supplier: &mut dyn FnMut() -> Option<AngleMeasurement>,
) -> Result<(usize, VisibilityGraph), ReconError> {
    let m0 = supplier().ok_or(ReconError::StreamEndedPrematurely)?;
    let d0 = m0.degree();
    let mut ms: Vec<AngleMeasurement> = vec![m0];
    let mut adj: Vec<Vec<bool>> = vec![vec![false]];
    let mut count0 = 0usize;
    loop {
        let k = ms.len();
        let mk = supplier().ok_or(ReconError::StreamEndedPrematurely)?;
        ms.push(mk);
        for row in adj.iter_mut() {
            row.push(false);
        }
        adj.push(vec![false; k + 1]);
        adj[k - 1][k] = true;
        adj[k][k - 1] = true;
        if k == 1 {
            count0 += 1;
        }
        if k >= 2 {
            for t in (0..=k - 2).rev() {
                if decide_chain(t, k, &adj, &ms)? {
                    adj[t][k] = true;
                    adj[k][t] = true;
                    if t == 0 {
                        count0 += 1;
                    }
                }
            }
        }
        if count0 == d0 {
            let n = k + 1;
            let incident: Vec<Vec<usize>> = (0..n)
                .map(|i| {
                    (1..n)
                        .map(|t| (i + t) % n)
                        .filter(|&j| adj[i][j])
                        .collect()
                })
                .collect();
            for (i, row) in incident.iter().enumerate() {
                if row.len() != ms[i].degree() {
                    return Err(ReconError::InconsistentMeasurements);
                }
            }
            let g = VisibilityGraph::from_incident(incident)
                .map_err(|_| ReconError::InconsistentMeasurements)?;
            return Ok((n, g));
        }
    }
}

/// The pi-criterion on the known chain `v0..vk`, deciding the pair
/// `(vt, vk)`. Slot bookkeeping differs from the cyclic case only in what
/// is known: `vt`'s trailing slots are its edges into `v0..v(t-1)`, and
/// nothing beyond `vk` has been seen yet.
fn decide_chain(
    t: usize,
    k: usize,
    adj: &[Vec<bool>],
    ms: &[AngleMeasurement],
) -> Result<bool, ReconError> {
    let d_t = ms[t].degree();
    let d_k = ms[k].degree();
    let common: Vec<usize> = (t + 1..k)
        .filter(|&j| adj[t][j] && adj[k][j])
        .collect();
    if common.is_empty() {
        return Ok(false);
    }
    let r_t = (t + 1..k).filter(|&m| adj[t][m]).count();
    let l_t = (0..t).filter(|&m| adj[t][m]).count();
    let l_k = (t + 1..k).filter(|&m| adj[k][m]).count();
    if r_t >= d_t || l_k >= d_k {
        return Err(ReconError::InconsistentMeasurements);
    }
    if r_t + 1 > d_t - l_t {
        return Ok(false);
    }
    let j = common[0];
    let d_j = ms[j].degree();
    let x = 1 + (t + 1..j).filter(|&m| adj[t][m]).count();
    let y = d_k - (j + 1..k).filter(|&m| adj[k][m]).count();
    let slot_j_to_k = 1 + (j + 1..k).filter(|&m| adj[j][m]).count();
    let slot_j_to_t = d_j - (t + 1..j).filter(|&m| adj[j][m]).count();
    let alpha = angle_between(&ms[t], x, r_t + 1)
        .map_err(|_| ReconError::InconsistentMeasurements)?;
    let beta = angle_between(&ms[k], d_k - l_k, y)
        .map_err(|_| ReconError::InconsistentMeasurements)?;
    let gamma = angle_between(&ms[j], slot_j_to_k, slot_j_to_t)
        .map_err(|_| ReconError::InconsistentMeasurements)?;
    Ok(pi_test(alpha, beta, gamma, &mut None))
}
