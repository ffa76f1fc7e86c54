use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible quadratic rings: sqrt({left}) vs sqrt({right})")]
    RadicandMismatch { left: u64, right: u64 },

    #[error("radicand {0} is not a square-free integer greater than 1")]
    InvalidRadicand(u64),

    #[error("{value} is not invertible modulo {modulus} (gcd = {gcd})")]
    NotInvertible {
        value: BigInt,
        modulus: BigInt,
        gcd: BigInt,
    },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigInt),

    #[error("operands live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("total degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("symbolic evaluation at n = {n} exceeds the configured cap {cap}")]
    SymbolicCap { n: u64, cap: u64 },

    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("index r = {r} outside 0..={max}")]
    IndexOutOfRange { r: u64, max: u64 },

    #[error("non-integral value where an integer is required: {0}")]
    NonIntegral(String),

    #[error("exponent {0} is not prime")]
    NotPrime(u64),

    #[error("exponent {p} is below the minimum {min} for this test")]
    ExponentTooSmall { p: u64, min: u64 },

    #[error("capacity exceeded: {what} at p = {p} (limit p <= {limit})")]
    Capacity { what: String, p: u64, limit: u64 },

    #[error("no period found within {0} steps")]
    NoPeriod(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
