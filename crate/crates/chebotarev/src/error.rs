use thiserror::Error;

/// Errors surfaced by operations whose failure depends on input values.
///
/// Structural misuse (mixing conductors in field arithmetic, non-square
/// determinants, coordinate vectors of the wrong length) panics instead:
/// those are programming errors, not data errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(w_{conductor})")]
    DivisionByZero { conductor: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("coefficient at exponent {exp} is not rational")]
    NonRationalCoefficient { exp: usize },

    #[error("n = {n} is not prime")]
    CompositeModulus { n: usize },

    #[error("r = {r} does not divide n = {n}")]
    NotADivisor { r: usize, n: usize },

    #[error("shift l = {l} out of range [0, {r})")]
    ShiftOutOfRange { l: usize, r: usize },

    #[error("scale factor must be nonzero")]
    ZeroScaleFactor,

    /// The loud-failure channel: an input reached a state the theorem rules
    /// out. Must never be swallowed by callers.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
