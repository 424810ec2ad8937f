use thiserror::Error;

/// Errors raised by validation and by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not antisymmetric (deviation {0:e})")]
    NotAntisymmetric(f64),

    #[error("matrix is not unitary (deviation {0:e})")]
    NotUnitary(f64),

    #[error("conjugation matrix is neither symmetric nor antisymmetric (deviation {0:e})")]
    NoTransposeSymmetry(f64),

    #[error("matrix is not positive semidefinite (minimal eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("trace is not one (got {0})")]
    BadTrace(f64),

    #[error("vector is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error(
        "conjugation is antisymmetric: the closed-form concurrence does not apply, \
         use the convex-roof oracle instead"
    )]
    AntisymmetricConjugation,

    #[error("phase closure failed: residual {residual:e} for mu = {mu:?}")]
    PhaseClosure { residual: f64, mu: Vec<f64> },

    #[error("singular values of an antisymmetric matrix are not paired (gap {0:e})")]
    UnpairedSingularValues(f64),

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("state is not classical: {criterion} = {value:e}")]
    Nonclassical { criterion: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
