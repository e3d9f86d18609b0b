use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("relations contain a cycle; the preorder is not T0")]
    CycleDetected,
    #[error("point index {index} out of range for {n} points")]
    PointOutOfRange { index: usize, n: usize },
    #[error("{0} points exceed the supported maximum of 64")]
    TooManyPoints(usize),
    #[error("unknown point label `{0}`")]
    UnknownPoint(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("space is not connected")]
    NotConnected,
    #[error("subset {0} is not locally closed")]
    NotLocallyClosed(String),
    #[error("space is of type (A)")]
    IsTypeA,
    #[error("space is not of type (A)")]
    NotTypeA,
    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),
    #[error("morphisms are not composable: {0}")]
    ObjectMismatch(String),
    #[error("arrow is not indecomposable: {0}")]
    NotIndecomposable(String),
    #[error("no forbidden subgraph found around vertex {0}")]
    NoForbiddenSubgraph(usize),
    #[error("presentation did not stabilise within {0} path-length levels")]
    NotStabilised(usize),
    #[error("pipeline precondition failed: {0}")]
    PipelinePreconditionFailed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
