use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} appears in more than one block")]
    DuplicateElement(usize),
    #[error("element {element} is outside [1..{n}]")]
    OutOfRange { element: usize, n: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("element {0} is not covered by any block")]
    MissingElement(usize),
    #[error("partition is crossing")]
    Crossing,
    #[error("ground-set sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("{n} is not divisible by {k}")]
    NotDivisible { n: usize, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("input outside the operation's domain: {0}")]
    NotInDomain(String),
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
}
