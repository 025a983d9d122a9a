use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The pair `(k, n)` does not describe a nontrivial Grassmannian.
    #[error("invalid space context: need n > k >= 0, got n = {n}, k = {k}")]
    InvalidContext { n: u32, k: u32 },

    #[error("partition {partition} is not {k}-strict")]
    NotKStrict { partition: Partition, k: u32 },

    #[error("partition {partition} does not fit the {rows}x{cols} rectangle")]
    OutsideRectangle {
        partition: Partition,
        rows: u32,
        cols: u32,
    },

    #[error("special class degree {p} is out of range 1..={max}")]
    DegreeOutOfRange { p: u32, max: u32 },

    #[error("operation requires the {expected} family")]
    WrongFamily { expected: &'static str },

    #[error("{0}")]
    Unsupported(String),

    /// A class of weight larger than the stable ring handle's truncation bound was produced.
    #[error("stable truncation weight {limit} exceeded by {partition} (weight {weight})")]
    TruncationExceeded {
        partition: Partition,
        weight: u32,
        limit: u32,
    },

    #[error("recursion degree cap {cap} exceeded by {partition}")]
    DegreeCapExceeded { partition: Partition, cap: u32 },

    #[error("non-integral coefficient in a Schubert-basis result: {0}")]
    NonIntegral(String),

    /// Internal consistency failure; the message carries the offending instance.
    #[error("assertion failed: {0}")]
    Assertion(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
