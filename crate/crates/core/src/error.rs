use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid Dynkin type {family}{rank}")]
    InvalidDynkinType { family: char, rank: usize },

    #[error("weight {0:?} is not dominant")]
    NonDominantWeight(Vec<i64>),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),

    #[error("element is not ad-nilpotent")]
    NotNilpotent,

    #[error("homomorphism check fails on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),

    #[error("node map does not reproduce the source Cartan matrix: {0}")]
    CartanMismatch(String),

    #[error("embedding construction failed: {0}")]
    Construction(String),

    #[error("node {node} has coefficient {coeff} in the highest root; nilradical is not abelian")]
    NonAbelianParabolic { node: usize, coeff: i64 },

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("vector is not in the subspace")]
    NotInSubspace,

    #[error("bivector has rank {0}, expected at most 2")]
    NotDecomposable(usize),

    #[error("intertwiner: {0}")]
    Intertwiner(String),

    #[error("algebra mismatch")]
    AlgebraMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
