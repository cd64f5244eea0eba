use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("zero vector has no normal direction")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rank {rank} is not admissible for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector {0} is not a root")]
    NotARoot(String),
    #[error("letter {0} is not a simple reflection")]
    NonSimpleLetter(String),
    #[error("{index} is not a standard facet index")]
    NotAFacetIndex { index: usize },
    #[error("full arrangement enumeration is capped at rank 6 (got {rank})")]
    RankTooLargeForFullArrangement { rank: usize },
    #[error("exhaustive subset search supports at most {max} generators (got {found})")]
    GeneratorSetTooLarge { max: usize, found: usize },
    #[error("operation requires type A_n or C_n, got {0}")]
    WrongType(String),
    #[error("{0} is not one of the zonotope types A_n, C_n, B3, G2")]
    NotAZonotopeType(String),
    #[error("no witness row for {0}")]
    MissingWitnessRow(String),
    #[error("structure lemma suite is limited to rank <= 4 plus E6, F4, G2 (got {0})")]
    RankTooLarge(String),
    #[error("orbit exceeds {limit} points")]
    OrbitTooLarge { limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
