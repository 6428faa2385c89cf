use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level out of range: k = {0}, expected k >= 1")]
    LevelOutOfRange(i64),

    #[error("i out of range: i = {0} is negative")]
    NegativeIndex(i64),

    #[error("i out of range: i = {i} exceeds level k = {k}")]
    IndexAboveLevel { i: i64, k: u32 },

    #[error("twist exponent r = {0} is not in {{0, 1, 2}}")]
    TwistOutOfRange(i64),

    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    #[error("parity violation: i1 + i2 + i3 = {0} is odd")]
    Parity(i64),

    #[error("syntax error at position {pos} in {input:?}: {msg}")]
    Syntax { input: String, pos: usize, msg: String },

    #[error("precision must be at least 1 decimal digit")]
    Precision,

    #[error("output error: {0}")]
    Output(String),

    #[error("cap exceeded: level {k} is above the exhaustive cap {cap} and sampling is disabled")]
    CapExceeded { k: u32, cap: u32 },
}
