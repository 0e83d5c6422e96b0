use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Hölder exponent {0}: must lie in [1, inf]")]
    InvalidExponent(f64),

    #[error("exponent p = {0} is not one of 1, 2, inf")]
    NotExactExponent(f64),

    #[error("exponent p = {p} lies outside the interpolation range [{lo}, {hi}]")]
    OutsideEndpoints { p: f64, lo: f64, hi: f64 },

    #[error("non-finite entry at position {0}")]
    NonFinite(usize),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("map is not a group homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("homomorphism is not injective")]
    NotInjective,

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("group elements belong to different groups")]
    GroupMismatch,

    #[error("group is not the standard cyclic group Z_n")]
    NotCyclic,

    #[error("coefficient {index} is not a nonnegative real number")]
    NotNonnegative { index: usize },

    #[error("window half-width {window} is smaller than the support radius {radius}")]
    WindowTooSmall { window: usize, radius: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed input: field `{field}`: {reason}")]
    Format { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
