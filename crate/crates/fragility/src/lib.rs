//! Edge-removal fragility of undirected graphs.
//!
//! The crate measures how quickly a graph disintegrates under targeted edge
//! removal. For structured families (complete, complete equitable bipartite,
//! generalized barbell) the critical removal counts and fragility have exact
//! closed forms; for arbitrary graphs a greedy attack with rewiring repair
//! and iterative add-back estimates them. Brute-force oracles certify both
//! on small instances.
//!
//! Module map:
//! - [`graph`]: graph representation, components, LCC, perturbed-graph state
//! - [`generators`]: graph families (complete/ceb/gb/er/ba/ws) and proximity
//!   graphs built from layout scenes
//! - [`closed_form`]: exact removal counts `r*(c)` and fragility formulas
//! - [`attack`]: destruction functions and greedy edge removal
//! - [`estimator`]: rewiring + add-back pipeline and fragility reports
//! - [`oracle`]: exhaustive ground truth for small instances
//! - [`metrics`]: degree distributions and Hellinger trajectories
//! - [`ratio`]: exact rational arithmetic used throughout

pub mod attack;
pub mod closed_form;
pub mod estimator;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod ratio;
pub mod score;

pub use graph::{AttackState, ComponentView, Graph, RemovalRecord};
pub use ratio::Rat;
pub use score::Score;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("self-loop ({0}, {0}) is not a valid edge")]
    SelfLoop(usize),
    #[error("edge endpoint {node} out of range for n = {n}")]
    EndpointOutOfRange { node: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("target edge count {target} exceeds current edge count {m}")]
    TargetExceedsEdgeCount { target: usize, m: usize },
    #[error("delta {delta} gives component bound c = {c}, outside [1, {n}) for n = {n}")]
    InvalidDelta { delta: String, c: i128, n: usize },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
