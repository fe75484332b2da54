//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported for inputs that violate an operation's contract.
///
/// Internal invariant violations (shape bugs, inexact divisions that are
/// mathematically impossible) panic instead: they are programming errors,
/// not user errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed scalar `{0}`: expected `-?digits(/digits)?`")]
    MalformedScalar(String),

    #[error("zero denominator in scalar `{0}`")]
    ZeroDenominator(String),

    #[error("root set contains a repeated element")]
    RepeatedRoot,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("subresultant index d={d} is inadmissible for degrees m={m}, n={n}")]
    InadmissibleSubresultant { d: usize, m: usize, n: usize },

    #[error("cofactor index k={k} out of range for degrees m={m}, n={n}")]
    CofactorIndexOutOfRange { k: usize, m: usize, n: usize },

    #[error("subset size {size} out of range for a set of {len} elements")]
    SubsetSizeOutOfRange { size: usize, len: usize },

    #[error("expected a tuple of {expected} entries, got {got}")]
    TupleSizeMismatch { expected: usize, got: usize },

    #[error("tuple entries must be pairwise distinct")]
    RepeatedTupleEntry,

    #[error("degree bound d={d} out of range for a node set of {n} elements")]
    DegreeBoundOutOfRange { d: usize, n: usize },

    #[error("missing interpolation value for node subset mask {mask:#b}")]
    MissingNodeValue { mask: u64 },

    #[error("evaluation point collides with a root")]
    PointCollidesWithRoot,

    #[error("partition parts must be weakly decreasing")]
    NotAPartition,

    #[error("partition length {len} does not match {vars} variables")]
    PartitionLengthMismatch { len: usize, vars: usize },

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("range {range} too small for {needed} pairwise distinct integer roots")]
    RangeTooSmall { range: i64, needed: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
