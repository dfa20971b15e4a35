use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("ambient spaces differ: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("{what}: enumeration size {count} exceeds cap {cap}")]
    CapExceeded { what: String, count: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("vector or subspace lies outside the domain of the map")]
    DomainViolation,
    #[error("vectors do not form a basis: {0}")]
    NotABasis(String),
    #[error("error budget t={t} infeasible for N={n_rows}, m={m}")]
    InfeasibleBudget { t: usize, n_rows: usize, m: usize },
    #[error("row selection does not form a basis of the row space: {0}")]
    InvalidSubmatrix(String),
    #[error("ambiguous decoding: {0}")]
    AmbiguityDetected(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),
    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, count: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what: what.into(),
            count,
            cap,
        }
    }
}
