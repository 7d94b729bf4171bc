use thiserror::Error;

use crate::word::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is empty")]
    EmptyWord,
    #[error("letter `{0}` does not occur in the word")]
    MissingLetter(Letter),
    #[error("letter `{0}` is not part of the alphabet")]
    ForeignLetter(Letter),
    #[error("letter `{0}` is repeated in the alphabet")]
    DuplicateLetter(Letter),
    #[error("positions must be pairwise distinct")]
    DegenerateTriple,
    #[error("slot {slot} is outside a circle of {len} slots")]
    SlotOutOfRange { slot: usize, len: usize },
    #[error("fiber of length {len} is too short, need at least {min}")]
    FiberTooShort { len: usize, min: usize },
    #[error("integer overflow while counting triangles")]
    Overflow,
    #[error("invalid shelling: {0}")]
    InvalidShelling(String),
    #[error("simplex [{0}] is not in the complex")]
    UnknownSimplex(String),
    #[error("vertex order does not list every vertex of the complex exactly once")]
    InvalidVertexOrder,
    #[error("not a closed oriented surface: {0}")]
    NotClosedOrientedSurface(String),
    #[error("malformed fibration: {0}")]
    MalformedFibration(String),
    #[error("parse error: {0}")]
    Parse(String),
}
