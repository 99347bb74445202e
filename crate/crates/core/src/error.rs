use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series with constant term {0} is not a unit")]
    NonUnit(String),
    #[error("invalid product factor: {0}")]
    InvalidFactor(String),
    #[error("requested {requested} coefficients but only {available} are known")]
    InsufficientPrecision { requested: usize, available: usize },
    #[error("substitution exponent must be at least 1")]
    ZeroSubstitution,
    #[error("invalid dissection: residue {residue} modulo {modulus}")]
    InvalidDissection { modulus: usize, residue: usize },
    #[error("product has z-exponents; use the bivariate expansion")]
    NotUnivariate,
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration of size {n} exceeds the guardrail of {limit}; pass an override to force it")]
    EnumerationTooLarge { n: usize, limit: usize },
}
