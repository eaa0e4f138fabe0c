use thiserror::Error;

use crate::family::FamilyReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("distance to the empty set is undefined")]
    EmptySet,

    #[error("cycle length {0} outside the supported range 3..=8")]
    CycleLengthOutOfRange(usize),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("graph is outside the required family: {0}")]
    FamilyViolation(FamilyReport),

    #[error("not an induced complete bipartite subgraph: {0}")]
    InvalidBipartite(String),

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),

    #[error("invalid instance: {}", .0.join("; "))]
    InvalidInstance(Vec<String>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rejection cap of {0} attempts exceeded")]
    RejectionCapExceeded(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
