use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not strictly decreasing at index {index}")]
    NotStrictlyDecreasing { index: usize },

    #[error("part {part} is outside 1..={max}")]
    PartOutOfRange { part: u64, max: u64 },

    #[error("edge count {e} is outside {lo}..={hi}")]
    EdgeOutOfRange { e: u64, lo: u64, hi: u64 },

    #[error("vertex count {v} is below the minimum {min}")]
    VertexCountTooSmall { v: u64, min: u64 },

    #[error("vertex count {v} exceeds the supported maximum {max}")]
    VertexCountTooLarge { v: u64, max: u64 },

    #[error("R0 denominator vanishes for v = {v}")]
    DenominatorZero { v: u64 },

    #[error("unsupported Pell right-hand side {0}; expected one of -1, 7, -9, -49")]
    UnsupportedP(i64),

    #[error("v = {v} exceeds the oracle cap {cap}")]
    CapExceeded { v: u64, cap: u64 },
}
