use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("negative weight {weight} on edge {u}-{v}")]
    NegativeWeight { u: usize, v: usize, weight: f64 },
    #[error("non-finite weight on edge {u}-{v}")]
    NonFiniteWeight { u: usize, v: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight matrix is not symmetric at ({u}, {v})")]
    Asymmetric { u: usize, v: usize },
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("ordering has length {found}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("ordering is not a permutation: vertex {vertex} is missing or repeated")]
    NotPermutation { vertex: usize },
    #[error("shift positions ({from}, {to}) invalid for N = {n}; need 1 <= from, to <= N and from != to")]
    BadShift { from: usize, to: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ThinError {
    /// The width vector strictly decreases on every move, so hitting the cap
    /// means an invariant was broken somewhere.
    #[error("thinning did not converge within {limit} steps")]
    StepLimit { limit: u64 },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClusterError {
    #[error("ordering is not strongly irreducible; thin it first")]
    NotStronglyIrreducible,
    #[error("vertex {vertex} has positive slope {slope}; input is not a pinch cluster")]
    PositiveSlope { vertex: usize, slope: f64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("exact oracle limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop on '{label}'")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Top-level error for the driver and CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ordering(#[from] OrderingError),
    #[error(transparent)]
    Thin(#[from] ThinError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Io(#[from] IoError),
}

impl Error {
    /// Process exit code: 1 for bad input, 2 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Graph(_) | Error::Io(_) | Error::Oracle(_) | Error::Ordering(_) => 1,
            Error::Thin(_) | Error::Cluster(_) => 2,
        }
    }
}
