use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("ring mismatch: operands live over different rings")]
    RingMismatch,
    #[error("module mismatch: operands live in different modules")]
    ModuleMismatch,
    #[error("improper input: {0}")]
    ImproperInput(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size limit exceeded: {what} has {actual} elements, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("hom is not well defined: {0}")]
    RelationViolation(String),
    #[error("invalid multiplicative set: {0}")]
    InvalidMultiplicativeSet(String),
    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
