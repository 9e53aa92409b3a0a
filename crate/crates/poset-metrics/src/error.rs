use thiserror::Error;

/// Errors produced by poset construction, queries, and the harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("input relations imply a cycle through `{0}`")]
    CycleDetected(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("empty or invalid element name")]
    EmptyName,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("elements `{0}` and `{1}` have no common upper bound")]
    NoUpperBound(String, String),
    #[error("elements `{0}` and `{1}` have no least upper bound")]
    NoLeastUpperBound(String, String),
    #[error("elements `{0}` and `{1}` have no common lower bound")]
    NoLowerBound(String, String),
    #[error("poset is not a join semilattice")]
    NotAJoinSemilattice,
    #[error("poset is not a tree order")]
    NotATreeOrder,
    #[error("no Hasse path between `{0}` and `{1}`")]
    Disconnected(String, String),
    #[error("distance undefined for pair `{0}`, `{1}`")]
    DistanceUndefined(String, String),
    #[error("enumeration size {0} exceeds the cap of {1}")]
    SizeCapExceeded(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, PosetError>;
