//! Inner and outer automorphism extensions of a map.
//!
//! Conjugation by an invertible operator `A` is the map `ad(A): X -> A X A^dag`.
//! Composing a positive map with `ad(A)` on either side preserves positivity
//! but moves the map to a different point of the positive cone. In tensor
//! form, with column-major vectorisation, `ad(A)` is `conj(A) (x) A`, so both
//! compositions are single tensor multiplications.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, DEFAULT_HERMITICITY_TOL};
use crate::maps::MapSpec;

/// Max-norm threshold below which `A A^dag = I` is treated as exact.
const UNITARY_TOL: f64 = 1e-10;

/// Determinant magnitude below which a factor is rejected as singular.
const SINGULAR_TOL: f64 = 1e-12;

/// An invertible operator used to build automorphism extensions.
#[derive(Debug, Clone)]
pub struct OperatorFactor {
    matrix: ComplexMatrix,
    unitary: bool,
    label: String,
}

impl OperatorFactor {
    /// Wraps a square, numerically non-singular matrix.
    ///
    /// The determinant magnitude is computed as `sqrt(det(A^dag A))` through
    /// the eigenvalues of `A^dag A`; factors below `1e-12` are rejected.
    pub fn new(matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "operator factor must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let gram = &matrix.dagger() * &matrix;
        let singular_values_sq = hermitian_eigenvalues(&gram, DEFAULT_HERMITICITY_TOL)?;
        let abs_det = singular_values_sq
            .iter()
            .map(|v| v.max(0.0).sqrt())
            .product::<f64>();
        if abs_det <= SINGULAR_TOL {
            return Err(Error::SingularInput(abs_det));
        }
        let n = matrix.rows();
        let unitary =
            (&matrix * &matrix.dagger()).max_diff(&ComplexMatrix::identity(n)) <= UNITARY_TOL;
        Ok(Self {
            matrix,
            unitary,
            label: label.into(),
        })
    }

    /// Diagonal factor with the given real entries (all must be non-zero).
    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let label = format!(
            "diag({})",
            entries
                .iter()
                .map(|e| format!("{e}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        Self::new(ComplexMatrix::diagonal_real(entries), label)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Whether `A A^dag = I` holds to within `1e-10`.
    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The tensor of `ad(A): X -> A X A^dag`, namely `conj(A) (x) A`.
    fn conjugation_tensor(&self) -> ComplexMatrix {
        self.matrix.conj().kron(&self.matrix)
    }
}

/// The one-parameter rotation family used to sweep map extensions:
///
/// ```text
///          [ cos t   0   sin t ]
/// U(t)  =  [   0     1     0   ]
///          [-sin t   0   cos t ]
/// ```
pub fn unitary_u(theta: f64) -> OperatorFactor {
    let (s, c) = theta.sin_cos();
    let mut m = ComplexMatrix::identity(3);
    m[(0, 0)] = Complex64::new(c, 0.0);
    m[(0, 2)] = Complex64::new(s, 0.0);
    m[(2, 0)] = Complex64::new(-s, 0.0);
    m[(2, 2)] = Complex64::new(c, 0.0);
    OperatorFactor::new(m, format!("U({theta:.6})")).expect("rotation matrices are unitary")
}

/// Inner extension `phi . ad(A)`: applies the conjugation first, then the map.
pub fn inner_automorphism(phi: &MapSpec, factor: &OperatorFactor) -> Result<MapSpec> {
    check_dims(phi, factor)?;
    MapSpec::from_action(
        phi.dim(),
        phi.action() * &factor.conjugation_tensor(),
        format!("{} . ad({})", phi.label(), factor.label()),
    )
}

/// Outer extension `ad(A) . phi`: applies the map first, then the conjugation.
pub fn outer_automorphism(factor: &OperatorFactor, phi: &MapSpec) -> Result<MapSpec> {
    check_dims(phi, factor)?;
    MapSpec::from_action(
        phi.dim(),
        &factor.conjugation_tensor() * phi.action(),
        format!("ad({}) . {}", factor.label(), phi.label()),
    )
}

fn check_dims(phi: &MapSpec, factor: &OperatorFactor) -> Result<()> {
    if phi.dim() != factor.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map acts on dimension {} but factor has dimension {}",
            phi.dim(),
            factor.dim()
        )));
    }
    Ok(())
}

/// Rescales `A` by its largest singular value so that `A A^dag <= I`,
/// turning the conjugation into a legitimate (trace-non-increasing)
/// operation.
pub fn clamp_to_operation(a: &ComplexMatrix) -> Result<OperatorFactor> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "clamp requires a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let gram = &a.dagger() * a;
    let singular_values_sq = hermitian_eigenvalues(&gram, DEFAULT_HERMITICITY_TOL)?;
    let top = singular_values_sq
        .last()
        .copied()
        .unwrap_or(0.0)
        .max(0.0)
        .sqrt();
    if top <= SINGULAR_TOL {
        return Err(Error::SingularInput(0.0));
    }
    OperatorFactor::new(
        a.scale_re(1.0 / top),
        format!("clamped({}x{})", a.rows(), a.cols()),
    )
}
