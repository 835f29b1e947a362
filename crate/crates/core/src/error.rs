use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero raised to the negative power {0}")]
    ZeroToNegativePower(i64),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
    #[error("Gamma has a pole at {0}")]
    PoleOfGamma(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("no pole-free point found after {0} attempts")]
    SamplingExhausted(u32),
    #[error("grid construction failed: {0}")]
    GridConstructionFailed(String),
    #[error("numerically ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub fn is_pole(&self) -> bool {
        matches!(self, Error::Pole(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
