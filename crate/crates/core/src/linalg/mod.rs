//! Dense complex linear algebra: matrices, Hermitian eigensolver, and
//! bipartite-system helpers (Kronecker factors, partial transpose).

mod eigen;
mod matrix;

pub use eigen::{
    hermitian_eig, hermitian_eigenvalues, is_psd, min_eigenpair, min_eigenvalue,
    EigenDecomposition, DEFAULT_HERMITICITY_TOL,
};
pub use matrix::{normalized, outer_product, tensor_vec, vdot, vnorm, ComplexMatrix};

use crate::error::{Error, Result};

/// Factor dimensions of a bipartite system `A (x) B`.
///
/// Indices are composed with the first factor on the slow axis: basis vector
/// `|i>_A |j>_B` sits at position `i * dim_b + j`, matching
/// [`ComplexMatrix::kron`] and [`tensor_vec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteDims {
    dim_a: usize,
    dim_b: usize,
}

impl BipartiteDims {
    /// Both factors must be at least two-dimensional.
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a < 2 || dim_b < 2 {
            return Err(Error::InvalidParameter(format!(
                "bipartite factors must each have dimension >= 2, got {dim_a} and {dim_b}"
            )));
        }
        Ok(Self { dim_a, dim_b })
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    /// Dimension of the joint space, `dim_a * dim_b`.
    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }
}

impl std::fmt::Display for BipartiteDims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.dim_a, self.dim_b)
    }
}

/// Partial transpose on the second factor: each `dim_b x dim_b` block of the
/// matrix is transposed in place while the block (first-factor) indices stay
/// fixed.
pub fn partial_transpose(m: &ComplexMatrix, dims: BipartiteDims) -> Result<ComplexMatrix> {
    let n = dims.total();
    if !m.is_square() || m.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "partial transpose over {dims} needs a {n}x{n} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let db = dims.dim_b();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        let (ia, ib) = (i / db, i % db);
        let (ja, jb) = (j / db, j % db);
        m[(ia * db + jb, ja * db + ib)]
    }))
}
