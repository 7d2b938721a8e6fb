use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand or generator {label} outside 1..={lines} lines")]
    OutOfRange { label: String, lines: u32 },
    #[error("half-twist needs two distinct strands, got {0} twice")]
    SameStrand(String),
    #[error("ambient line counts differ ({0} vs {1})")]
    AmbientMismatch(u32, u32),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("{what} requires k >= {min}, got {k}")]
    KTooSmall { what: &'static str, k: u32, min: u32 },
    #[error("presentation is at stage {found}, expected {expected}")]
    WrongStage { found: String, expected: String },
    #[error("malformed compound operands: {0}")]
    Malformed(String),
    #[error("integer overflow in normal form computation")]
    IntegerOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
