use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} is outside the domain 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once in cycle notation")]
    RepeatedPoint(usize),

    #[error("malformed cycle notation: {0}")]
    Syntax(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("image table is not a bijection of 1..={0}")]
    NotBijection(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("base-pair points must differ, got ({0}, {0})")]
    EqualBasePoints(usize),

    #[error("invalid orbital graph: {0}")]
    InvalidGraph(String),

    #[error("graph with base-pair ({alpha}, {beta}) is not an orbital graph of the given group")]
    GraphGroupMismatch { alpha: usize, beta: usize },

    #[error("{beta} lies in the orbit of {alpha}")]
    SameOrbit { alpha: usize, beta: usize },

    #[error("group is not transitive on its domain")]
    NotTransitive,

    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
