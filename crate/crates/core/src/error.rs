//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("word position {position} out of range 1..={length}")]
    PositionOutOfRange { position: usize, length: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("unknown root system type `{0}`")]
    UnknownType(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("operation requires a finite root system")]
    NotFiniteType,

    #[error("word is not reduced")]
    NotReduced,

    #[error("position {0} is a reduced step; no Sigma divisor there")]
    ReducedPosition(usize),

    #[error("cycle class has grade {got}, expected {expected}")]
    GradeMismatch { expected: usize, got: usize },

    #[error("product grade {0} exceeds word length {1}")]
    GradeOverflow(usize, usize),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("no chart representation for this root system supports simple root {index}")]
    SigmaUnsupported { index: usize },

    #[error(
        "Sigma validation failed for word {word:?} at position {position}: {reason} \
         (components {components:?}, pullback {pullback:?})"
    )]
    SigmaValidation {
        word: Vec<usize>,
        position: usize,
        reason: String,
        components: Vec<(usize, usize)>,
        pullback: Vec<String>,
    },

    #[error("class has non-integer coefficients")]
    NonIntegralClass,

    #[error("M = {0} must exceed every ample coefficient (max {1})")]
    InvalidLogFanoScale(i64, i64),

    #[error("nef2 requires a reduced word of length 4, got length {0}")]
    Nef2Precondition(usize),

    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
