use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("expected a strict partition, got {0}")]
    NotStrict(Partition),

    #[error("expected an odd partition, got {0}")]
    NotOdd(Partition),

    #[error("{0} is not an h-core (expected (4m-3,...,5,1) or (4m-1,...,7,3))")]
    NotHCore(Partition),

    #[error("weight mismatch: expected {expected}, got {actual}")]
    WeightMismatch { expected: usize, actual: usize },

    #[error("cannot parse partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("linear system is singular")]
    Singular,

    #[error("expected an integer for {what}, got {value}")]
    NonIntegral { what: String, value: String },

    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),

    #[error("invalid block ({n0},{n1}) for n = {n}: need n0 + 2*n1 = n")]
    InvalidBlock { n: usize, n0: usize, n1: usize },

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),

    #[error("n = {n} is outside the configured range 1..={cap} for {claim}")]
    OutOfRange { claim: String, n: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
