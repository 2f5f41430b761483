//! Simulation of an agent moving along visibility edges inside a polygon,
//! with a configurable sensor bundle, plus the observation-equivalence
//! checkers behind the negative-result fixtures.

mod ambiguity;
mod env;
mod equivalence;

pub use ambiguity::{ambiguity_report, geometry_congruent, AmbiguityReport, EquivalenceMode};
pub use env::{
    boundary_tour_observations, cvv, identify_targets_via_marked_vertex, simulate_moves,
    AgentEnv, Observation, SensorConfig, SizeInfo, Trace,
};
pub use equivalence::{
    boundary_tour_equivalent, graphs_boundary_isomorphic, observationally_equivalent,
    two_missing_angles_equivalent, unordered_angle_tours_equivalent,
};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AgentError {
    /// A move slot outside `1..=d` at the current vertex.
    InvalidMove,
    /// The marked-vertex trick needs a marked vertex.
    NoMarkedVertex,
}

impl fmt::Display for AgentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AgentError::InvalidMove => write!(f, "invalid move"),
            AgentError::NoMarkedVertex => write!(f, "no marked vertex"),
        }
    }
}

impl std::error::Error for AgentError {}
