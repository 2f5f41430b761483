//! Arc-labeled directed graphs: sensor labelings of the visibility graph,
//! minimum base graphs, distinguishing sequences, and the
//! candidate-elimination exploration strategy.

mod digraph;
mod distinguish;
mod explore;
mod label;
mod labelings;
mod minbase;

pub use digraph::LabeledDigraph;
pub use distinguish::distinguishing_sequence;
pub use explore::{
    agent_explore_minimum_base, exhaustive_basic_candidates, quotient_candidates, ExploreEnv,
    GraphEnv,
};
pub use label::Label;
pub use labelings::{angle_type_bits, angle_type_labeling, basic_labeling, lookback_labeling};
pub use minbase::{minimum_base, MinimumBase};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    TargetOutOfRange(usize),
    /// Two arcs leaving one node share a label.
    NotLocallyOriented,
    NotStronglyConnected,
    /// The exploration candidate set did not contain the true base.
    CandidateExhaustion,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no nodes"),
            GraphError::TargetOutOfRange(t) => write!(f, "arc target {t} out of range"),
            GraphError::NotLocallyOriented => write!(f, "not locally oriented"),
            GraphError::NotStronglyConnected => write!(f, "not strongly connected"),
            GraphError::CandidateExhaustion => write!(f, "candidate exhaustion"),
        }
    }
}

impl std::error::Error for GraphError {}
