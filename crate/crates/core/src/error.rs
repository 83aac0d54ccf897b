use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("bad reduction at p = {p} for curve {curve}")]
    BadReduction { curve: String, p: u64 },

    #[error("Hasse bound violated: a_p = {a_p} at p = {p}")]
    HasseViolation { a_p: i64, p: u64 },

    #[error("count parity failure at p = {p} (N1 = {n1}, N2 = {n2})")]
    ParityFailure { p: u64, n1: u64, n2: u64 },

    #[error("p = {p} exceeds the genus-2 counting cap {cap}")]
    Genus2CapExceeded { p: u64, cap: u64 },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial must be monic")]
    NotMonic,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} divides a leading coefficient")]
    LeadingCoefficientVanishes(u64),

    #[error("Frobenius polynomials are for different primes ({0} vs {1})")]
    PrimeMismatch(u64, u64),

    #[error("no count record for curve {curve} at p = {p}")]
    MissingRecord { curve: String, p: u64 },

    #[error("comparison mode requires a prime filter")]
    FilterRequired,

    #[error("radicals were taken with respect to different prime filters")]
    FilterMismatch,

    #[error("invalid prime filter: {0}")]
    InvalidFilter(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("enumeration of {points} points exceeds the cap {cap}")]
    EnumerationCap { points: u128, cap: u128 },

    #[error("invalid variety: {0}")]
    InvalidVariety(String),

    #[error("cache: {0}")]
    Cache(String),

    #[error("invalid count record: {0}")]
    InvalidRecord(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("report has no good primes")]
    EmptyReport,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
