use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),

    #[error("point {point} outside ground set [1, {m}]")]
    PointOutOfRange { point: usize, m: usize },

    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("ragged code: word {index} has length {got}, expected {expected}")]
    RaggedCode {
        index: usize,
        got: usize,
        expected: usize,
    },

    #[error("nanowire index {index} out of range for decoder of size {n}")]
    NanowireOutOfRange { index: usize, n: usize },

    #[error("inapplicable fault: mesowire {mesowire} is not in block of nanowire {nanowire}")]
    InapplicableFault { nanowire: usize, mesowire: usize },

    #[error("not an (r, lambda)-design: {0}")]
    NotRLambdaDesign(String),

    #[error("not supported: {0}")]
    NotSupported(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("brute-force enumeration of {0} fault sets exceeds the cap of {1}")]
    EnumerationTooLarge(u128, u128),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
