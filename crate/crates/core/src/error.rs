//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has non-positive weight")]
    NonPositiveWeight { u: u64, v: u64 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u64, v: u64 },
    #[error("duplicate edge ({u}, {v}) with inconsistent weights")]
    InconsistentDuplicate { u: u64, v: u64 },
    #[error("unknown vertex {0}")]
    UnknownVertex(u64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("instance too large for {what}: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("hitting-set instance is infeasible: set {{{set}}} has no candidate hitter")]
    InfeasibleHittingSet { set: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
