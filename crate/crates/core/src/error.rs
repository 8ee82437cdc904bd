use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition width d must be at least 1")]
    ZeroWidth,

    #[error("part {index} is negative ({value})")]
    NegativePart { index: usize, value: i64 },

    #[error("parts are not weakly decreasing at position {index}")]
    NotDecreasing { index: usize },

    #[error("{nonzero} nonzero parts do not fit in width d = {d}")]
    TooManyParts { nonzero: usize, d: usize },

    #[error("partition size overflows a 32-bit count")]
    Overflow,

    #[error("partition count for d = {d}, n = {n} exceeds the brute-force budget of {budget}")]
    BudgetExceeded { d: usize, n: u32, budget: u64 },

    #[error("diagram with {n} boxes exceeds the exhaustive-count cap of {cap}")]
    OracleCap { n: u32, cap: u32 },

    #[error("operation requires d = {expected}, got d = {got}")]
    UnsupportedWidth { expected: usize, got: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("logarithm of zero is undefined")]
    LogOfZero,
}

pub type Result<T> = std::result::Result<T, Error>;
