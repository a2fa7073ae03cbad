use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("presentation is not right-complemented")]
    NotComplemented,
    #[error("presentation has no homogeneity witness")]
    NotHomogeneous,
    #[error("no reversing factor at position {0}")]
    NoFactorAt(usize),
    #[error("relation is not eligible for the factor at position {0}")]
    NotEligible(usize),
    #[error("reversing got stuck on the pair ({left}, {right})")]
    Stuck { left: String, right: String },
    #[error("grid construction stuck at cell ({row}, {col}) on the pair ({left}, {right})")]
    GridStuck {
        row: usize,
        col: usize,
        left: String,
        right: String,
    },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("prerequisite not established: {0}")]
    Prerequisite(String),
    #[error("`{0}` does not left-divide the given element")]
    NotLeftDivisor(String),
    #[error("the empty word has no normal decomposition")]
    EmptyWord,
    #[error("not a Garside element: {0}")]
    NotGarside(String),
    #[error("edge naming is path-dependent; diagram is inconsistent")]
    PathDependence,
    #[error("the words are not equivalent, no optimality certificate applies")]
    NotEquivalent,
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
