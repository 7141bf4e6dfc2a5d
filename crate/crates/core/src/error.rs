use thiserror::Error;

/// Errors raised by the arithmetic, analytic and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("malformed L-data: {0}")]
    LData(String),

    #[error("operation requires a quadratic field")]
    NotQuadratic,

    #[error("{n} exceeds the factorization cap {cap}")]
    FactorizationCap { n: u64, cap: u64 },

    #[error("Bernoulli index {0} is odd or exceeds the cap")]
    BernoulliIndex(u32),

    #[error("pole at s = {0}")]
    Pole(String),

    #[error("outside the supported domain: {0}")]
    Domain(String),

    #[error("series did not converge within {0} terms")]
    SeriesCap(usize),

    #[error("contour quadrature failed its self-consistency check: {0}")]
    Quadrature(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
