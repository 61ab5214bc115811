use thiserror::Error;

use crate::path::Cell;

/// Everything that can go wrong while building or transforming paths, words
/// and polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimensions must be positive, got ({m}, {n})")]
    ZeroDimension { m: usize, n: usize },

    #[error("({m}, {n}) are not coprime")]
    NotCoprime { m: usize, n: usize },

    #[error("expected {expected} east-step heights, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("east-step heights must be weakly increasing and at most {n}, got {heights:?}")]
    NotMonotone { n: usize, heights: Vec<usize> },

    #[error("east step {column} at height {height} is below the diagonal (needs at least {min})")]
    BelowDiagonal {
        column: usize,
        height: usize,
        min: usize,
    },

    #[error("unexpected character {ch:?} at position {position} (only N and E are allowed)")]
    BadCharacter { ch: char, position: usize },

    #[error("cell {0} is not above the path")]
    CellNotAboveThePath(Cell),

    #[error("cell {cell} is outside the {m}x{n} lattice")]
    CellOutOfBounds { cell: Cell, m: usize, n: usize },

    #[error("only m = 3 is supported, got m = {0}")]
    UnsupportedM(usize),

    #[error("n = {0} is divisible by 3")]
    BadResidue(usize),

    #[error("({a}, {s}, {d}) is not a valid statistic triple")]
    InvalidTriple { a: usize, s: usize, d: usize },

    #[error("marked rank word does not come from a path: {0}")]
    NotRealizable(String),

    #[error("malformed rank word: {0}")]
    BadRankWord(String),

    #[error("cell {0} satisfies none of the non-contributing conditions")]
    Unclassified(Cell),

    #[error("coefficient overflow")]
    CoefficientOverflow,

    #[error("malformed polynomial: {0}")]
    BadPolynomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
