use thiserror::Error;

/// Errors raised by the class number pipeline and its oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} must be odd and positive")]
    InvalidModulus(i64),

    #[error("cannot factor zero")]
    FactorZero,

    #[error("{0} is not a valid negative discriminant")]
    InvalidDiscriminant(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p = {0} is too small: the pipeline requires a prime p > 5")]
    PrimeTooSmall(u64),

    #[error("p = {p} exceeds the bound {bound} for this computation")]
    PrimeTooLarge { p: u64, bound: u64 },

    #[error("prime {p} divides discriminant {d}")]
    PrimeDividesDiscriminant { p: u64, d: i64 },

    #[error(
        "genus field of D = {d} has {found} independent radicands, expected mu - 1 = {expected}"
    )]
    GenusDegreeMismatch {
        d: i64,
        found: usize,
        expected: usize,
    },

    #[error("pair witness ({d1}, {d2}, {x}) fails a structural check at p = {p}: {reason}")]
    BadWitness {
        d1: i64,
        d2: i64,
        x: u64,
        p: u64,
        reason: &'static str,
    },

    #[error("s_p - t = {value} is inconsistent with p = {p} (mod 8 branch {branch})")]
    InconsistentCount { p: u64, value: i64, branch: u64 },

    #[error("oracle mismatch at p = {p}: {detail}")]
    OracleMismatch { p: u64, detail: String },

    #[error("class polynomial of D = {d} did not round within tolerance after {attempts} attempts (last error {last_error})")]
    PrecisionExhausted {
        d: i64,
        attempts: u32,
        last_error: String,
    },

    #[error("|D| = {abs} exceeds the class polynomial bound {bound}")]
    DiscriminantTooLarge { abs: u64, bound: u64 },

    #[error("precision of {0} bits is below the 64-bit minimum")]
    PrecisionTooLow(u32),

    #[error("class polynomial cache: {0}")]
    Cache(String),

    #[error("max_p too small: {0} < 7")]
    MaxPTooSmall(u64),

    #[error("report decoding failed: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
