use super::AgentError;
use crate::geom::{
    angle_measurement, compass_observation, distance_observation, SimplePolygon, VisibilityGraph,
};

/// What the agent knows about the polygon size up front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeInfo {
    Exact(usize),
    UpperBound(usize),
    Unknown,
}

/// Which sensors the agent carries. Degree perception is always on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SensorConfig {
    pub angles: bool,
    pub angle_types: bool,
    pub inner_angle: bool,
    pub compass: bool,
    pub cvv: bool,
    pub distances: bool,
    pub look_back: bool,
    pub knowledge: SizeInfo,
}

impl SensorConfig {
    pub fn basic() -> Self {
        SensorConfig {
            angles: false,
            angle_types: false,
            inner_angle: false,
            compass: false,
            cvv: false,
            distances: false,
            look_back: false,
            knowledge: SizeInfo::Unknown,
        }
    }

    pub fn with_angles() -> Self {
        SensorConfig {
            angles: true,
            ..SensorConfig::basic()
        }
    }
}

/// Everything the agent perceives at its current vertex under a sensor
/// configuration. Degree is always present; `look_back` is the slot of the
/// return arc and is absent before the first move.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub degree: usize,
    pub angles: Option<Vec<f64>>,
    pub angle_types: Option<Vec<Vec<bool>>>,
    pub inner_angle: Option<f64>,
    pub compass: Option<Vec<f64>>,
    pub cvv: Option<Vec<bool>>,
    pub distances: Option<Vec<f64>>,
    pub look_back: Option<usize>,
    /// Present only in environments with a recognizable vertex.
    pub at_marked: Option<bool>,
}

/// Sequence of (observation, chosen move slot) pairs.
pub type Trace = Vec<(Observation, usize)>;

/// The combinatorial visibility vector of vertex `i`: bits 0 and `d` are
/// set, and bit `j` is set iff the `j`-th and `(j+1)`-th visible vertices
/// are neighbors on the boundary.
pub fn cvv(visgraph: &VisibilityGraph, i: usize) -> Vec<bool> {
    let n = visgraph.len();
    let incident = visgraph.incident(i);
    let d = incident.len();
    let mut bits = vec![false; d + 1];
    bits[0] = true;
    bits[d] = true;
    for j in 1..d {
        let a = incident[j - 1];
        let b = incident[j];
        bits[j] = (a + 1) % n == b || (b + 1) % n == a;
    }
    bits
}

/// A polygon environment stepped by one agent. The environment enforces
/// legal moves; the agent's knowledge is whatever its sensors report.
pub struct AgentEnv {
    polygon: SimplePolygon,
    visgraph: VisibilityGraph,
    config: SensorConfig,
    marked: Option<usize>,
    at: usize,
    prev: Option<usize>,
}

impl AgentEnv {
    pub fn new(polygon: SimplePolygon, config: SensorConfig) -> Result<Self, crate::geom::GeomError> {
        let visgraph = VisibilityGraph::build(&polygon)?;
        Ok(AgentEnv {
            polygon,
            visgraph,
            config,
            marked: None,
            at: 0,
            prev: None,
        })
    }

    /// Flags one vertex as recognizable by the agent.
    pub fn with_marked_vertex(mut self, v: usize) -> Self {
        self.marked = Some(v % self.visgraph.len());
        self
    }

    pub fn n(&self) -> usize {
        self.visgraph.len()
    }

    pub fn position(&self) -> usize {
        self.at
    }

    pub fn visgraph(&self) -> &VisibilityGraph {
        &self.visgraph
    }

    pub fn config(&self) -> SensorConfig {
        self.config
    }

    /// The observation at the current vertex.
    pub fn observe(&self) -> Observation {
        let i = self.at;
        let g = &self.visgraph;
        let d = g.degree(i);
        let angles = (self.config.angles || self.config.inner_angle)
            .then(|| angle_measurement(&self.polygon, g, i));
        Observation {
            degree: d,
            inner_angle: self.config.inner_angle.then(|| {
                angles.as_ref().expect("measured above").inner_angle()
            }),
            angles: self
                .config
                .angles
                .then(|| angles.as_ref().expect("measured above").angles().to_vec()),
            angle_types: self.config.angle_types.then(|| self.angle_type_bits(i)),
            compass: self
                .config
                .compass
                .then(|| compass_observation(&self.polygon, g, i)),
            cvv: self.config.cvv.then(|| cvv(g, i)),
            distances: self
                .config
                .distances
                .then(|| distance_observation(&self.polygon, g, i)),
            look_back: if self.config.look_back {
                self.prev.and_then(|p| g.slot_of(i, p))
            } else {
                None
            },
            at_marked: self.marked.map(|m| m == i),
        }
    }

    fn angle_type_bits(&self, i: usize) -> Vec<Vec<bool>> {
        crate::graph::angle_type_bits(&self.polygon, &self.visgraph, i)
    }

    /// Moves along the `slot`-th incident edge (1-based) and returns the
    /// observation at the new vertex.
    pub fn step(&mut self, slot: usize) -> Result<Observation, AgentError> {
        let target = self
            .visgraph
            .target(self.at, slot)
            .ok_or(AgentError::InvalidMove)?;
        self.prev = Some(self.at);
        self.at = target;
        Ok(self.observe())
    }
}

/// Runs a fixed move sequence, recording the observation before each move;
/// returns the trace and the final observation.
pub fn simulate_moves(
    env: &mut AgentEnv,
    moves: &[usize],
) -> Result<(Trace, Observation), AgentError> {
    let mut trace = Vec::with_capacity(moves.len());
    for &slot in moves {
        let before = env.observe();
        if slot == 0 || slot > before.degree {
            return Err(AgentError::InvalidMove);
        }
        trace.push((before, slot));
        env.step(slot)?;
    }
    Ok((trace, env.observe()))
}

/// A tour of the boundary: `n` observations taken at consecutive vertices
/// via slot-1 moves, starting from the current position.
pub fn boundary_tour_observations(env: &mut AgentEnv) -> Vec<Observation> {
    let n = env.n();
    let mut out = Vec::with_capacity(n);
    out.push(env.observe());
    for _ in 1..n {
        let obs = env.step(1).expect("slot 1 always exists");
        out.push(obs);
    }
    out
}

/// The marked-vertex trick: to identify where each edge at `v_i` leads,
/// move along it and count boundary moves until the recognizable vertex
/// appears; the target index is the marked index minus the count. Returns
/// the slot-to-global-index map of `v_i`.
pub fn identify_targets_via_marked_vertex(
    env: &mut AgentEnv,
    i: usize,
) -> Result<Vec<usize>, AgentError> {
    let marked = env.marked.ok_or(AgentError::NoMarkedVertex)?;
    let n = env.n();
    let walk_to_marked = |env: &mut AgentEnv| -> usize {
        let mut count = 0;
        while !env.observe().at_marked.unwrap_or(false) {
            env.step(1).expect("slot 1 always exists");
            count += 1;
        }
        count
    };
    // Navigate to v_i: find the marked vertex, then pace off the known
    // offset from it.
    walk_to_marked(env);
    for _ in 0..(i + n - marked) % n {
        env.step(1)?;
    }
    let degree = env.observe().degree;
    let mut targets = Vec::with_capacity(degree);
    for slot in 1..=degree {
        env.step(slot)?;
        let count = walk_to_marked(env);
        targets.push((marked + n - count % n) % n);
        for _ in 0..(i + n - marked) % n {
            env.step(1)?;
        }
    }
    Ok(targets)
}
