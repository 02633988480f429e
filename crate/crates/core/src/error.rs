use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable spaces differ: {0} vs {1}")]
    SpaceMismatch(String, String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("degree {requested} exceeds truncation order {order}")]
    BeyondTruncation { requested: u32, order: u32 },
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("invalid germ signature: {0}")]
    InvalidSignature(String),
    #[error("kappa mismatch: expected {expected}, found {found}")]
    KappaMismatch { expected: u32, found: u32 },
    #[error("codimension mismatch: {key} has codimension {codim}, source dimension is {m}")]
    CodimMismatch { key: String, codim: u32, m: u32 },
    #[error("unknown key: {0}")]
    UnknownKey(String),
    #[error("wrong entry kind for {key}: expected {expected}")]
    WrongKind { key: String, expected: String },
    #[error("degree {requested} exceeds the valid degree {max} of {key}")]
    BeyondValidity { key: String, requested: u32, max: u32 },
    #[error("torus rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: u32, found: u32 },
    #[error("polynomial is not supersymmetric")]
    NotSupersymmetric,
    #[error("no positive weight vector makes the map weighted homogeneous")]
    NoPositiveSolution,
    #[error("weight vector is not unique; solution basis {basis:?}")]
    AmbiguousSolution { basis: Vec<Vec<i64>> },
    #[error("residual polynomial of {tuple} is not free of s-classes: {residue}")]
    ResidueNotSFree { tuple: String, residue: String },
    #[error("missing residue for {0}")]
    MissingResidue(String),
    #[error("source and target routes disagree for {key}: {source_value} vs {target_value}")]
    RouteMismatch {
        key: String,
        source_value: String,
        target_value: String,
    },
    #[error("crosscap count must be even for a closed surface, got {0}")]
    OddCrosscapCount(i64),
    #[error("model branch is not proper: {0}")]
    NonProper(String),
    #[error("database error: {0}")]
    Database(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Parse,
    Precondition,
    UnknownKey,
    Internal,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } => ErrorCategory::Parse,
            Error::UnknownKey(_) => ErrorCategory::UnknownKey,
            Error::RouteMismatch { .. } | Error::Database(_) => ErrorCategory::Internal,
            _ => ErrorCategory::Precondition,
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
