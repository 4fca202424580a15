use thiserror::Error;

use crate::model::Symbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {pos} is out of range for a string of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("<{p1}, {p2}> is not a Z-shape occurrence in the given string")]
    InvalidOccurrence { p1: usize, p2: usize },

    #[error("reserved sentinel symbol {symbol:?} at input index {index}")]
    SentinelInInput { symbol: Symbol, index: usize },

    #[error("reducer already finished")]
    ReducerFinished,

    #[error("the longest proper prefix of the string is reducible")]
    NotPpIrreducible,

    #[error("string is reducible; expected a Z-normal form")]
    Reducible,

    #[error("symbol {0:?} has no registered name")]
    UnnamedSymbol(Symbol),

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("debug validation failed: {0}")]
    Validation(String),
}
