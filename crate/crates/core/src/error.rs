use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty pattern")]
    EmptyPattern,
    #[error("invalid sign character at index {index}")]
    InvalidSign { index: usize },
    #[error("period too large: {n} (supported range 1..={max})")]
    PeriodTooLarge { n: u32, max: u32 },
    #[error("period too large for exact arithmetic: {n} (max 62)")]
    PeriodTooLargeForExact { n: usize },
    #[error("period too large for brute force: {n} (supported range 1..=20)")]
    PeriodTooLargeForBruteForce { n: u32 },
    #[error("period too large for exhaustive check: {n} (supported range 1..=16)")]
    PeriodTooLargeForCheck { n: u32 },
    #[error("depth must be positive")]
    ZeroDepth,
    #[error("tolerance must lie in (0, 1), got {tol}")]
    InvalidTolerance { tol: f64 },
    #[error("tolerance below certified precision: {tol} needs a depth above 200")]
    ToleranceTooSmall { tol: f64 },
    #[error("argument outside [-1,1]: {x}")]
    ChebyshevDomain { x: f64 },
    #[error("Chebyshev degree {degree} exceeds 2^20")]
    DegreeTooLarge { degree: u64 },
    #[error("outside conjugacy domain [-2,2]: {x}")]
    ConjugacyDomain { x: f64 },
    #[error("iteration count {n} outside 1..={max}")]
    IterationCount { n: u32, max: u32 },
    #[error("too many fixed points: period {n} (supported range 1..=20)")]
    TooManyFixedPoints { n: u32 },
}
