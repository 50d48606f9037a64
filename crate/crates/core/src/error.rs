use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("{0} must be proper")]
    Improper(&'static str),
    #[error("element belongs to a different module")]
    HostMismatch,
    #[error("representative is not in the span of the basis")]
    NotInSpan,
    #[error("kernel inclusion fails: Theta does not map Ker rho^L into Ker rho^L1")]
    KernelInclusion,
    #[error("Theta L != L1 Theta1")]
    NotIntertwining,
    #[error("invalid realization data: {0}")]
    InvalidRealization(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
