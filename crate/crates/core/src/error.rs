use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid radix: {0}")]
    InvalidRadix(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("mixed representations: discrete and triangular values cannot meet in one operator")]
    RepresentationMix,

    #[error("malformed operator: {0}")]
    Spec(String),

    #[error("invalid fuzzy number: {0}")]
    Invariant(String),

    #[error("invalid membership grade: {0}")]
    Grade(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}
