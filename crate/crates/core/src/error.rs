//! Error type shared across the crate.

/// Convenience alias used by every fallible operation in this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for linear-algebra, map-construction, and detection
/// routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Operands have incompatible shapes for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A routine that requires a Hermitian input was handed something else.
    #[error("matrix is not Hermitian: max |H - H^dag| = {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },

    /// The cyclic Jacobi eigensolver exhausted its sweep budget.
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    /// An operator factor was numerically singular where an invertible one is
    /// required.
    #[error("operator factor is numerically singular: |det| = {0:.3e}")]
    SingularInput(f64),

    /// Kraus extraction was requested for a map whose Choi matrix has a
    /// negative eigenvalue.
    #[error("map is not completely positive: min Choi eigenvalue = {0:.3e}")]
    NotCp(f64),

    /// A quantity that must be real came out with a significant imaginary
    /// part, signalling corrupted input.
    #[error("expected a real value but found imaginary part of magnitude {0:.3e}")]
    NonRealValue(f64),

    /// A product basis failed its orthonormality check.
    #[error("product basis is not orthonormal: max Gram deviation = {0:.3e}")]
    BasisNotOrthonormal(f64),

    /// A complement state was requested for a basis that already spans the
    /// whole space, leaving nothing to project onto.
    #[error("product basis already spans the full space; complement is empty")]
    BasisComplete,

    /// A matrix does not qualify as a density operator (trace, positivity, or
    /// Hermiticity violation).
    #[error("invalid density operator: {0}")]
    InvalidState(String),

    /// Two sweep curves cannot be compared because their grids differ or the
    /// requested shift is not a grid multiple.
    #[error("sweep grid mismatch: {0}")]
    GridMismatch(String),

    /// A scalar or structural parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
