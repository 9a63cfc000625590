//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("invalid exponent at position {pos}: {msg}")]
    InvalidExponent { pos: usize, msg: String },

    #[error("variable index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("polynomial has a non-integer coefficient: {coeff}")]
    NonIntegerCoefficient { coeff: String },

    #[error("{value} is not a prime power")]
    NotPrimePower { value: u64 },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("p^m = {value} overflows the machine word budget")]
    ModulusOverflow { value: String },

    #[error("twist {twist} is not a unit modulo p = {p}")]
    TwistNotUnit { twist: u64, p: u64 },

    #[error("enumeration needs {needed} points but the budget is {budget} (set SINGULCT_BUDGET to raise it)")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("histogram of length {len} exceeds the {cap}-entry cap; lower m")]
    HistogramTooLong { len: u64, cap: u64 },

    #[error("search bound exhausted: {0}")]
    Inconclusive(String),

    #[error("f is smooth at the origin; the Milnor number is undefined there")]
    SmoothAtOrigin,

    #[error(
        "colength did not stabilize below K = {ceiling}; the singularity is likely non-isolated"
    )]
    NonIsolatedSingularity { ceiling: u32 },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid b-function roots: {0}")]
    InvalidBFunction(String),

    #[error("partition is not weakly decreasing or has a negative entry")]
    InvalidPartition,

    #[error("no supported lct pathway for this input: {0}")]
    UnsupportedInput(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("level m = {m} is below the minimum {min} for this check")]
    LevelTooSmall { m: u32, min: u32 },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("nonpositive input: {0}")]
    NonPositive(String),

    #[error("cannot write `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
