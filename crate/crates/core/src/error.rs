use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has every number as a root")]
    ZeroPolynomial,
    #[error("factorization too large: cofactor {0} survives trial division up to {1}")]
    FactorizationTooLarge(String, u64),
    #[error("radical descriptors differ: {0}")]
    DescriptorMismatch(String),
    #[error("radical descriptor (n={index}, t={radicand}) is not normalized")]
    NotNormalized { index: u32, radicand: String },
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
