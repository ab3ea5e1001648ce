use thiserror::Error;

use crate::presentation::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("group of order {order} exceeds the configured bound {bound}")]
    SizeOverflow { order: String, bound: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("element set is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("not a homomorphism at level 3: relator {relator} survives in the target quotient")]
    NotHomomorphismAtLevel3 { relator: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("rank {rank} exceeds the search bound {bound}")]
    RankBound { rank: usize, bound: usize },

    #[error("action is not transitive on {m} points")]
    IntransitiveAction { m: usize },

    #[error("missing hypothesis: {0}")]
    MissingHypothesis(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}
