//! Linear maps on `d x d` complex matrices.
//!
//! A map is stored as its `d^2 x d^2` action tensor `T` with respect to
//! column-major vectorisation, so `vec(phi(X)) = T vec(X)`. That one
//! convention fixes everything else: composition is tensor multiplication,
//! conjugation by an operator `A` becomes `conj(A) (x) A`, and the Choi
//! matrix is a cheap re-indexing of `T`.

mod automorphism;
mod families;
mod seesaw;

pub use automorphism::{
    clamp_to_operation, inner_automorphism, outer_automorphism, unitary_u, OperatorFactor,
};
pub use families::{
    cho_kye_t, choi_c1, choi_c2, generalized_choi, identity_map, transpose_map, ChoKyeParams,
};
pub use seesaw::{biquadratic_form, positivity_seesaw, SeesawOptions, SeesawOutcome};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, DEFAULT_HERMITICITY_TOL};

/// A linear map on `d x d` matrices, represented by its action tensor.
#[derive(Debug, Clone)]
pub struct MapSpec {
    dim: usize,
    action: ComplexMatrix,
    label: String,
}

impl MapSpec {
    /// Wraps an explicit `d^2 x d^2` action tensor.
    pub fn from_action(
        dim: usize,
        action: ComplexMatrix,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = dim * dim;
        if action.rows() != n || action.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "action tensor for dimension {dim} must be {n}x{n}, got {}x{}",
                action.rows(),
                action.cols()
            )));
        }
        Ok(Self {
            dim,
            action,
            label: label.into(),
        })
    }

    /// Builds the action tensor by applying `f` to every matrix unit `E_ij`.
    ///
    /// `f` must be linear and return `d x d` matrices; linearity is the
    /// caller's responsibility, the shape is checked.
    pub fn from_fn(
        dim: usize,
        label: impl Into<String>,
        mut f: impl FnMut(&ComplexMatrix) -> ComplexMatrix,
    ) -> Self {
        let n = dim * dim;
        let mut action = ComplexMatrix::zeros(n, n);
        for j in 0..dim {
            for i in 0..dim {
                let image = f(&ComplexMatrix::matrix_unit(dim, i, j));
                assert_eq!(
                    (image.rows(), image.cols()),
                    (dim, dim),
                    "map image has wrong shape"
                );
                // vec(E_ij) is the basis vector at column-major index j*d + i.
                let col = j * dim + i;
                for (row, &z) in image.to_vec_col().iter().enumerate() {
                    action[(row, col)] = z;
                }
            }
        }
        Self {
            dim,
            action,
            label: label.into(),
        }
    }

    /// Dimension `d` of the matrices the map acts on.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Human-readable description of how the map was built.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The `d^2 x d^2` action tensor.
    pub fn action(&self) -> &ComplexMatrix {
        &self.action
    }

    /// Applies the map to a `d x d` matrix.
    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.rows() != self.dim || x.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "map acts on {0}x{0} matrices, got {1}x{2}",
                self.dim,
                x.rows(),
                x.cols()
            )));
        }
        let out = self.action.mul_vec(&x.to_vec_col());
        Ok(ComplexMatrix::from_vec_col(self.dim, self.dim, &out))
    }

    /// Composition `self . inner` (apply `inner` first).
    pub fn compose(&self, inner: &MapSpec) -> Result<MapSpec> {
        if self.dim != inner.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose maps on dimensions {} and {}",
                self.dim, inner.dim
            )));
        }
        MapSpec::from_action(
            self.dim,
            &self.action * &inner.action,
            format!("{} . {}", self.label, inner.label),
        )
    }

    /// Choi matrix `C = sum_ij E_ij (x) phi(E_ij)`, a pure re-indexing of the
    /// action tensor.
    pub fn choi_matrix(&self) -> ComplexMatrix {
        let d = self.dim;
        // Block (i, j) of C is phi(E_ij), whose (k, l) entry sits in the
        // action tensor at row l*d + k, column j*d + i.
        ComplexMatrix::from_fn(d * d, d * d, |r, c| {
            let (i, k) = (r / d, r % d);
            let (j, l) = (c / d, c % d);
            self.action[(l * d + k, j * d + i)]
        })
    }

    /// Maximum entrywise distance between two action tensors.
    pub fn action_distance(&self, other: &MapSpec) -> f64 {
        assert_eq!(
            self.dim, other.dim,
            "cannot compare maps of different dimension"
        );
        self.action.max_diff(&other.action)
    }

    /// Whether the map sends Hermitian matrices to Hermitian matrices,
    /// equivalent to its Choi matrix being Hermitian.
    pub fn preserves_hermiticity(&self, tol: f64) -> bool {
        self.choi_matrix().is_hermitian(tol)
    }

    /// Complete positivity test: the map is CP iff its Choi matrix is
    /// positive semidefinite (smallest eigenvalue >= `-tol`).
    pub fn is_cp(&self, tol: f64) -> Result<bool> {
        let choi = self.choi_matrix();
        let values = crate::linalg::hermitian_eigenvalues(&choi, DEFAULT_HERMITICITY_TOL)?;
        Ok(values.first().copied().unwrap_or(0.0) >= -tol)
    }

    /// Kraus decomposition of a completely positive map.
    ///
    /// Eigenvectors of the Choi matrix with eigenvalue above `tol` are folded
    /// back into operators `V_m` with `phi(X) = sum_m V_m X V_m^dag`; the
    /// decomposition is verified against the action tensor to `1e-9` before
    /// being returned. Fails with [`Error::NotCp`] if the Choi matrix has an
    /// eigenvalue below `-tol`.
    pub fn kraus_operators(&self, tol: f64) -> Result<Vec<ComplexMatrix>> {
        let d = self.dim;
        let choi = self.choi_matrix();
        let eig = hermitian_eig(&choi, DEFAULT_HERMITICITY_TOL)?;
        let min = eig.values.first().copied().unwrap_or(0.0);
        if min < -tol {
            return Err(Error::NotCp(min));
        }

        let mut kraus = Vec::new();
        for (m, &lambda) in eig.values.iter().enumerate() {
            if lambda <= tol {
                continue;
            }
            let u = eig.eigenvector(m);
            let w = lambda.sqrt();
            // Choi row index i*d + k corresponds to operator entry (k, i).
            kraus.push(ComplexMatrix::from_fn(d, d, |k, i| u[i * d + k] * w));
        }

        // Rebuild the action tensor, sum_m conj(V_m) (x) V_m, as a self-check
        // that nothing significant was truncated.
        let mut rebuilt = ComplexMatrix::zeros(d * d, d * d);
        for v in &kraus {
            rebuilt = &rebuilt + &v.conj().kron(v);
        }
        let residual = rebuilt.max_diff(&self.action);
        if residual > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "Kraus reconstruction residual {residual:.3e} exceeds 1e-9; \
                 eigenvalue cutoff {tol:.1e} discarded too much of the Choi matrix"
            )));
        }
        Ok(kraus)
    }
}

/// Applies `phi` to a matrix; free-function form of [`MapSpec::apply`].
pub fn apply_map(phi: &MapSpec, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    phi.apply(x)
}

/// Conjugation `A X A^dag`, the action of `ad(A)` on a single matrix.
pub fn conjugate(a: &ComplexMatrix, x: &ComplexMatrix) -> ComplexMatrix {
    &(a * x) * &a.dagger()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigenvalues;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn test_from_fn_matches_direct_application() {
        // X -> A X A^dag built through matrix units must agree with doing the
        // conjugation directly on an arbitrary input.
        let a = ComplexMatrix::from_fn(3, 3, |i, j| c(i as f64 - j as f64, (i * j) as f64 * 0.3));
        let phi = MapSpec::from_fn(3, "ad(a)", |x| conjugate(&a, x));
        let x = ComplexMatrix::from_fn(3, 3, |i, j| c(0.2 * (i + 1) as f64, j as f64 - 1.0));
        let via_tensor = phi.apply(&x).unwrap();
        let direct = conjugate(&a, &x);
        assert!(via_tensor.max_diff(&direct) < 1e-13);
    }

    #[test]
    fn test_identity_map_choi_is_maximally_entangled() {
        let phi = identity_map(3);
        let choi = phi.choi_matrix();
        // sum_ij E_ij (x) E_ij = 3 * projector onto the maximally entangled
        // state: spectrum {0 x 8, 3}.
        let values = hermitian_eigenvalues(&choi, 1e-12).unwrap();
        assert!(values[..8].iter().all(|v| v.abs() < 1e-13));
        assert!((values[8] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn test_transpose_map_choi_is_swap() {
        let phi = transpose_map(2);
        let choi = phi.choi_matrix();
        // Choi of the transpose is the SWAP operator: spectrum {-1, 1, 1, 1}.
        let values = hermitian_eigenvalues(&choi, 1e-12).unwrap();
        assert!((values[0] + 1.0).abs() < 1e-13);
        assert!(values[1..].iter().all(|v| (v - 1.0).abs() < 1e-13));
    }

    #[test]
    fn test_is_cp_identity_yes_transpose_no() {
        assert!(identity_map(3).is_cp(1e-10).unwrap());
        assert!(!transpose_map(3).is_cp(1e-10).unwrap());
    }

    #[test]
    fn test_kraus_round_trip_for_cp_map() {
        // A genuinely CP map: X -> A X A^dag + B X B^dag.
        let a = ComplexMatrix::from_fn(3, 3, |i, j| c(0.4 * i as f64 - 0.1, 0.2 * j as f64));
        let b = ComplexMatrix::from_fn(3, 3, |i, j| c(0.05 * (i * j) as f64, 0.3 - 0.1 * i as f64));
        let phi = MapSpec::from_fn(3, "two-kraus", |x| &conjugate(&a, x) + &conjugate(&b, x));
        let kraus = phi.kraus_operators(1e-10).unwrap();
        assert!(kraus.len() <= 9);
        // Rebuild the map from the extracted operators and compare actions.
        let rebuilt = MapSpec::from_fn(3, "rebuilt", |x| {
            let mut acc = ComplexMatrix::zeros(3, 3);
            for v in &kraus {
                acc = &acc + &conjugate(v, x);
            }
            acc
        });
        assert!(phi.action_distance(&rebuilt) < 1e-10);
    }

    #[test]
    fn test_kraus_rejects_non_cp_map() {
        let err = transpose_map(3).kraus_operators(1e-10).unwrap_err();
        assert!(matches!(err, Error::NotCp(_)));
    }

    #[test]
    fn test_apply_rejects_wrong_shape() {
        let phi = identity_map(3);
        let err = phi.apply(&ComplexMatrix::zeros(2, 2)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn test_compose_is_sequential_application() {
        let a = ComplexMatrix::from_fn(2, 2, |i, j| c((i + j) as f64, 0.5));
        let b = ComplexMatrix::from_fn(2, 2, |i, j| c(1.0 - i as f64, 0.2 * j as f64));
        let phi = MapSpec::from_fn(2, "ad(a)", |x| conjugate(&a, x));
        let psi = MapSpec::from_fn(2, "ad(b)", |x| conjugate(&b, x));
        let chained = phi.compose(&psi).unwrap();
        let x = ComplexMatrix::from_fn(2, 2, |i, j| c(i as f64, j as f64));
        let expect = phi.apply(&psi.apply(&x).unwrap()).unwrap();
        assert!(chained.apply(&x).unwrap().max_diff(&expect) < 1e-13);
    }

    #[test]
    fn test_choi_matrix_of_conjugation_is_rank_one() {
        // Choi of X -> A X A^dag is |vec(A)><vec(A)| up to index convention:
        // rank one with trace = ||A||_F^2.
        let a = ComplexMatrix::from_fn(3, 3, |i, j| c(0.3 * i as f64 + 0.1, 0.2 - 0.1 * j as f64));
        let phi = MapSpec::from_fn(3, "ad(a)", |x| conjugate(&a, x));
        let values = hermitian_eigenvalues(&phi.choi_matrix(), 1e-12).unwrap();
        assert!(values[..8].iter().all(|v| v.abs() < 1e-12));
        let fro2 = a.frobenius_norm().powi(2);
        assert!((values[8] - fro2).abs() < 1e-12);
    }
}
