use alloc::string::String;

/// Errors reported by the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {0} is out of range (need 3 <= n <= 64)")]
    InvalidRank(usize),
    #[error("generator index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("position {position} is out of range for rank {rank}")]
    PositionOutOfRange { position: usize, rank: usize },
    #[error("position {0} occurs twice in a configuration")]
    DuplicatePosition(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("the zero monomial has no word representative")]
    ZeroMonomial,
    #[error("the empty word (identity) is not allowed here")]
    EmptyWord,
    #[error("operation needs a normal form with at least one block")]
    NoBlocks,
    #[error("invalid psi key: |I_in| = {i_in} but |I_out| = {i_out}")]
    InvalidKey { i_in: usize, i_out: usize },
    #[error("no normal form maps to the given psi key")]
    NotInImage,
    #[error("particle count {k} is out of range for rank {rank}")]
    ParticleCountOutOfRange { k: usize, rank: usize },
    #[error("configuration sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("configuration has no gap (every or no position is occupied)")]
    NoGap,
    #[error("element is not central")]
    NotCentral,
    #[error("constant term must vanish")]
    NonzeroConstantTerm,
    #[error("embedding position {m} is out of range for rank {rank}")]
    EmbeddingOutOfRange { m: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
