use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the combinatorial and canonical-basis engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid modulus e = {0}; expected e >= 2")]
    InvalidModulus(u32),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("{0} is not an {1}-core")]
    NotACore(Partition, u32),
    #[error("quotient has {found} components but e = {expected}")]
    QuotientLength { expected: usize, found: usize },
    #[error("charge vector sums to {found} but d = {expected}")]
    ChargeSum { expected: i64, found: i64 },
    #[error("charge vector has {found} entries but e = {expected}")]
    ChargeLength { expected: usize, found: usize },
    #[error("residue {0} out of range for e = {1}")]
    InvalidResidue(u32, u32),
    #[error("malformed partition literal {0:?}")]
    ParsePartition(String),
    #[error("malformed Laurent polynomial {0:?}")]
    ParsePoly(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("non-unique ribbon tiling of {outer}/{inner}")]
    AmbiguousTiling { inner: Partition, outer: Partition },
    #[error("bar involution: no spanning vector with leading term {0}")]
    MissingPivot(Partition),
    #[error("inexact division while solving for bar({0})")]
    InexactDivision(Partition),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded { what: String, value: u64, bound: u64 },
    #[error("coefficient does not fit in a machine integer")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
