use thiserror::Error;

use crate::chow::RingId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("terms of mixed grade or ring ({0})")]
    MixedGrade(String),
    #[error("{symbol} is not a basis element of {ring}")]
    UnknownBasis { ring: RingId, symbol: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("grade {0} + {1} exceeds the dimension of the ring")]
    GradeOverflow(u8, u8),
    #[error("no multiplication table entry for {0} * {1}")]
    MissingTableEntry(String, String),
    #[error("expected a class of grade {expected}, got grade {found}")]
    WrongGrade { expected: u8, found: u8 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid Cremona centers: {0}")]
    BadCenters(String),
    #[error("record degenerated to degree {0} (contracted)")]
    Contracted(i64),
    #[error("orbit exceeded the budget of {0} members")]
    OrbitBudgetExceeded(usize),
    #[error("record is not a Weyl plane")]
    NotAWeylPlane,
    #[error("record is not in the Weyl orbit of a hyperplane through four points")]
    NotAWeylDivisor,
    #[error("no normalizing word exists for this pair")]
    NoWord,
    #[error("point count mismatch: {0} vs {1}")]
    PointCountMismatch(usize, usize),
    #[error("unsupported number of points: {0}")]
    UnsupportedPointCount(usize),
    #[error("invalid record: {0}")]
    InvalidRecord(String),
}
