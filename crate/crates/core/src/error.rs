use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid monomial ideal: {0}")]
    InvalidMonomials(String),
    #[error("invalid family descriptor: {0}")]
    InvalidFamily(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("vector is not in the kernel of the matrix")]
    NotInKernel,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("more than {cap} cycles")]
    CycleCapExceeded { cap: usize },
    #[error("more than {cap} candidate connecting paths")]
    PathCapExceeded { cap: usize },
    #[error("fiber has more than {cap} points")]
    FiberCapExceeded { cap: usize },
    #[error("{what} exceeded its budget of {cap}")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("internal equivalence violated: {0}")]
    EquivalenceViolation(String),
}

impl Error {
    /// True for errors raised because a configured cap or budget was hit.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::CycleCapExceeded { .. }
                | Error::PathCapExceeded { .. }
                | Error::FiberCapExceeded { .. }
                | Error::BudgetExceeded { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
