use thiserror::Error;

use crate::scalar::Field;

/// Which convolution equation an antipode search failed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeSide {
    /// `S * id = η∘ε` has no solution.
    Left,
    /// `id * S = η∘ε` has no solution.
    Right,
    /// Each side is solvable on its own but no single map solves both.
    Both,
}

impl std::fmt::Display for AntipodeSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AntipodeSide::Left => write!(f, "left (S * id)"),
            AntipodeSide::Right => write!(f, "right (id * S)"),
            AntipodeSide::Both => write!(f, "left and right jointly"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("map is not bijective: rank {rank} of {dim}")]
    NotBijective { rank: usize, dim: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has no unique solution: rank {rank} of {unknowns}")]
    NotUnique { rank: usize, unknowns: usize },
    #[error("algebra is not associative, witness {0:?}")]
    NotAssociative(Vec<usize>),
    #[error("no antipode: {0} convolution equation is unsolvable")]
    NoAntipode(AntipodeSide),
    #[error("not an antipode: {0}")]
    NotAntipode(String),
    #[error("conditions failed: {}", .0.join(", "))]
    ChecksFailed(Vec<String>),
    #[error("not a factorization: multiplication map has rank {rank} of {dim}")]
    NotAFactorization { rank: usize, dim: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration cap exceeded: {count} candidates, cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("group error: {0}")]
    Group(String),
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
