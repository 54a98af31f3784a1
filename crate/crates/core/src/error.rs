use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter `a` must be odd for F generators, got {0}")]
    OddRequired(i64),
    #[error("parameter `a` must be even and at least 2 for G generators, got {0}")]
    EvenRequired(i64),
    #[error("H generator needs 1 <= a <= k (a = {a}, k = {k})")]
    SmallARequired { a: i64, k: i64 },
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(i64),
    #[error("zero polynomial has every point as a root")]
    ZeroPolynomial,
    #[error("ideal is not Artinian: {0}")]
    NotArtinian(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("interpolated polynomial disagrees with held-out sample at t = {t}")]
    HeldOutMismatch { t: i64 },
    #[error("polynomial is not symmetric in a1 and a2")]
    NotSymmetric,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
