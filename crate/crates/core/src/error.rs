use thiserror::Error;

/// Errors raised by game construction and the index/bound computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate weights: every entry is zero")]
    DegenerateWeights,
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("quota must be positive so that the empty coalition loses")]
    NonPositiveQuota,
    #[error("quota exceeds total weight; v(N) would be 0")]
    QuotaExceedsTotal,
    #[error("every weight class needs a count of at least 1")]
    EmptyClass,
    #[error("player {player} out of range for a game with {n} players")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("{what} supports at most {cap} players, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("linear program failed: {0}")]
    Lp(String),
}

pub type Result<T> = std::result::Result<T, Error>;
