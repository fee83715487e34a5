use thiserror::Error;

/// Errors raised by the series kernel, the cohomology tables and the
/// stratification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A series with vanishing constant term was asked to be inverted.
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,

    /// The requested power of `x` lies beyond the stored x-truncation.
    #[error("coefficient of x^{requested} requested but series is truncated at x^{available}")]
    XOrderExceeded { requested: usize, available: usize },

    #[error("{what} is only defined for {range}, got {value}")]
    Range {
        what: &'static str,
        range: String,
        value: i64,
    },

    /// A series that should be the Poincaré series of a space has a
    /// negative coefficient.
    #[error("negative Betti number {value} in degree {degree} of {series}")]
    NegativeBetti {
        series: String,
        degree: usize,
        value: String,
    },

    #[error("non-integral Betti number {value} in degree {degree} of {series}")]
    NonIntegralBetti {
        series: String,
        degree: usize,
        value: String,
    },

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("invalid request: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
