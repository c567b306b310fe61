use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator s_{index} does not exist in rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },

    #[error("invalid Weyl element: {0}")]
    InvalidElement(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("element is not a minimal double coset representative")]
    NotMinimalRepresentative,

    #[error("gaussian binomial needs n >= 0, got {0}")]
    NegativeGaussBinomial(i64),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("elements live in different algebras: (n, r) = {left:?} vs {right:?}")]
    AmbientMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("basis size {size} exceeds the cap {cap}")]
    BasisTooLarge { size: usize, cap: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("nonzero residual after decomposition: {0}")]
    Residual(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("negative diagonal entry while building a triangular monomial for {0}")]
    NegativeDiagonal(String),

    #[error("multi-index entry {entry} outside [1, {bound}]")]
    IndexOutOfRange { entry: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
