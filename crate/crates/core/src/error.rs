use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not invertible modulo {1}")]
    NotInvertibleModP(String, u64),
    #[error("composition of differentials is nonzero at degree {degree}")]
    CompositionNonzero { degree: i64 },
    #[error("complex truncated below degree {needed} (have up to {have})")]
    InsufficientTruncation { needed: i64, have: i64 },
    #[error("group action does not commute with the differential at degree {degree}")]
    ActionNotChainMap { degree: i64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bimodule on edge `{edge}` does not match its endpoint algebras: {reason}")]
    EndpointMismatch { edge: String, reason: String },
    #[error("module side mismatch: expected {expected} module")]
    SideMismatch { expected: &'static str },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("cyclic constructions need characteristic 0; rerun in rational mode or pass the override")]
    CharP,
    #[error("axiom violations: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("unbounded complex: {0}")]
    Unbounded(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
