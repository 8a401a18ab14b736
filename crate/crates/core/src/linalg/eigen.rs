//! Hermitian eigensolver based on cyclic Jacobi rotations.
//!
//! Each complex off-diagonal pivot `a_pq = |a_pq| e^{i phi}` is eliminated by
//! a phased Givens rotation: a diagonal phase `diag(1, e^{-i phi})` makes the
//! 2x2 pivot block real-symmetric, and the classic real Jacobi rotation then
//! zeroes it. Quadratic convergence sets in after a few sweeps; for the matrix
//! sizes this crate handles (up to 81x81) the solver is exact to near machine
//! precision in well under the sweep budget.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;

/// Default max-norm tolerance when checking that an input is Hermitian.
pub const DEFAULT_HERMITICITY_TOL: f64 = 1e-10;

/// Hard cap on Jacobi sweeps before reporting failure.
const MAX_SWEEPS: usize = 100;

/// Convergence: stop once the off-diagonal Frobenius mass drops below this
/// multiple of the input Frobenius norm.
const OFF_DIAG_FACTOR: f64 = 1e-13;

/// Result of a full Hermitian eigendecomposition.
///
/// Eigenvalues are sorted ascending; column `k` of `vectors` is a unit
/// eigenvector for `values[k]`, so `H = V diag(values) V^dag`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Copies out eigenvector `k` (column `k` of the vector matrix).
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.rows())
            .map(|i| self.vectors[(i, k)])
            .collect()
    }
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// The input must be Hermitian within `hermiticity_tol` in the max norm; the
/// solver then works on the Hermitian part `(H + H^dag)/2`, which perturbs
/// each eigenvalue by at most the (tiny) skew defect.
pub fn hermitian_eig(h: &ComplexMatrix, hermiticity_tol: f64) -> Result<EigenDecomposition> {
    let (values, vectors) = jacobi(h, hermiticity_tol, true)?;
    Ok(EigenDecomposition {
        values,
        vectors: vectors.expect("vectors requested"),
    })
}

/// Eigenvalues only (ascending); skips eigenvector accumulation.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, hermiticity_tol: f64) -> Result<Vec<f64>> {
    Ok(jacobi(h, hermiticity_tol, false)?.0)
}

/// Smallest eigenvalue, using the default Hermiticity tolerance.
pub fn min_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    let values = hermitian_eigenvalues(h, DEFAULT_HERMITICITY_TOL)?;
    Ok(values.first().copied().unwrap_or(0.0))
}

/// Smallest eigenvalue together with a unit eigenvector.
pub fn min_eigenpair(h: &ComplexMatrix) -> Result<(f64, Vec<Complex64>)> {
    let eig = hermitian_eig(h, DEFAULT_HERMITICITY_TOL)?;
    let value = eig.values.first().copied().unwrap_or(0.0);
    Ok((value, eig.eigenvector(0)))
}

/// Whether a Hermitian matrix is positive semidefinite up to `-tol` on the
/// smallest eigenvalue.
pub fn is_psd(h: &ComplexMatrix, tol: f64) -> Result<bool> {
    Ok(min_eigenvalue(h)? >= -tol)
}

/// Core cyclic Jacobi loop shared by the public entry points.
fn jacobi(
    h: &ComplexMatrix,
    hermiticity_tol: f64,
    with_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigensolver requires a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let defect = h.hermiticity_defect();
    if defect > hermiticity_tol {
        return Err(Error::NotHermitian {
            defect,
            tol: hermiticity_tol,
        });
    }

    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = with_vectors.then(|| ComplexMatrix::identity(n));

    let scale = a.frobenius_norm();
    if n <= 1 || scale == 0.0 {
        let values = (0..n).map(|i| a[(i, i)].re).collect();
        return Ok((values, v));
    }
    let threshold = OFF_DIAG_FACTOR * scale;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, v.as_mut(), p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    // Sort ascending, permuting eigenvector columns in step.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]));
    Ok((values, vectors))
}

/// Frobenius norm of the off-diagonal part.
fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for p in 0..n - 1 {
        for q in p + 1..n {
            sum += 2.0 * a[(p, q)].norm_sqr();
        }
    }
    sum.sqrt()
}

/// Applies one phased Jacobi rotation zeroing the pivot `a[(p, q)]`.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    // Phase that makes the pivot block real-symmetric, then the classic
    // stable tangent formula for the 2x2 rotation.
    let phase_conj = apq.conj() / mag; // e^{-i phi}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let sp = phase_conj * s; // s e^{-i phi}
    let cp = phase_conj * c; // c e^{-i phi}

    let n = a.rows();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_p = akp * c - akq * sp;
        let new_q = akp * s + akq * cp;
        a[(k, p)] = new_p;
        a[(k, q)] = new_q;
        a[(p, k)] = new_p.conj();
        a[(q, k)] = new_q.conj();
    }
    a[(p, p)] = Complex64::new(app - t * mag, 0.0);
    a[(q, q)] = Complex64::new(aqq + t * mag, 0.0);
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * c - vkq * sp;
            v[(k, q)] = vkp * s + vkq * cp;
        }
    }
}
