//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by constructors and operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid window {0:?}: absolute values must be a permutation of 1..=n")]
    InvalidWindow(Vec<i32>),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {0} exceeds the enumeration cap {1}")]
    RankTooLarge(usize, usize),
    #[error("generator index {0} out of range for rank {1}")]
    BadGenerator(usize, usize),
    #[error("elements are not comparable in right weak order")]
    NotComparable,
    #[error("invalid composition {0:?}: {1}")]
    InvalidComposition(Vec<u32>, String),
    #[error("operation requires the {0} basis")]
    WrongBasis(&'static str),
    #[error("not a valid B_n poset: {0}")]
    InvalidPoset(String),
    #[error("relation is asymmetric: {0} \u{2264} {1} holds but {2} \u{2264} {3} does not")]
    AsymmetricRelation(i32, i32, i32, i32),
    #[error("relation has a cycle through {0} and {1}")]
    RelationCycle(i32, i32),
    #[error("pair ({0}, {1}) is not in inc^B of the poset")]
    PairNotIncB(i32, i32),
    #[error("poset is not regular: witness triple ({0}, {1}, {2})")]
    NotRegular(i32, i32, i32),
    #[error("poset is not distinguished: {0} is comparable to {1} but not to 0")]
    NotDistinguished(i32, i32),
    #[error("index {0} out of range: {1}")]
    IndexOutOfRange(i32, String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("module relation failure: {0}")]
    RelationFailure(String),
    #[error("isomorphism certification inconclusive: {0}")]
    Inconclusive(String),
    #[error("modules are not isomorphic: {0}")]
    NotIsomorphic(String),
    #[error("cannot split a singleton interval")]
    SingletonInterval,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
