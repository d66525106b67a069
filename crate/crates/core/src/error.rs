use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("group dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary with unit determinant (defect {0:e})")]
    NotUnitary(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("degenerate spectrum: eigenvalue gap {gap:e} below tolerance {tol:e}")]
    DegenerateSpectrum { gap: f64, tol: f64 },

    #[error("ill-conditioned system (condition number {0:e})")]
    IllConditioned(f64),

    #[error("eigenphase {0} lies on the branch cut at ±π")]
    BranchCut(f64),

    #[error("structure tensor integrity check failed: {0}")]
    TensorIntegrity(String),

    #[error("constraint violated: {name} residual {residual:e}")]
    ConstraintViolation { name: &'static str, residual: f64 },
}

impl Error {
    /// Machine-readable reason code used on the command line.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::InvalidDimension(_) => "invalid-dimension",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::NonFinite(_) => "non-finite",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::NotHermitian(_) => "not-hermitian",
            Error::NotUnitary(_) => "not-unitary",
            Error::NoConvergence(_) => "no-convergence",
            Error::DegenerateSpectrum { .. } => "degenerate-spectrum",
            Error::IllConditioned(_) => "ill-conditioned",
            Error::BranchCut(_) => "branch-cut",
            Error::TensorIntegrity(_) => "tensor-integrity",
            Error::ConstraintViolation { .. } => "constraint-violation",
        }
    }

    /// True for errors caused by malformed input rather than by the numerics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidDimension(_)
                | Error::DimensionMismatch { .. }
                | Error::NonFinite(_)
                | Error::InvalidArgument(_)
        )
    }
}
