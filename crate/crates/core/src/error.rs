use thiserror::Error;

/// Errors produced by the library.
///
/// Domain-level negative answers (a system failing an axiom, a subset that is
/// not distinguished when merely queried) are reported through return values,
/// not through this type. This type covers malformed input, violated
/// preconditions and internal consistency checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group specification {text:?}: {reason}")]
    GroupSpec { text: String, reason: String },

    #[error("rank {rank} is out of range for type {kind} in factor {factor:?}")]
    RankOutOfRange {
        factor: String,
        kind: char,
        rank: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("rank-one table line {line}: {message}")]
    Table { line: usize, message: String },

    #[error("ill-formed system: {0}")]
    Structure(String),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("system does not satisfy the axioms: {0}")]
    Invalid(String),

    #[error("{what}: {actual} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        bound: usize,
    },

    #[error("subset {0} is not distinguished")]
    NotDistinguished(String),

    #[error("quotient monoid is not free: {0}")]
    NotFree(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("{0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
