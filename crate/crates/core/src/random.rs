//! Seeded random generators for vectors, operators, and states.
//!
//! Everything funnels through a ChaCha8 stream so that every stochastic
//! routine in the crate (seesaw restarts, property fixtures, CLI runs) is
//! exactly reproducible from a `u64` seed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{
    normalized, outer_product, tensor_vec, vdot, vnorm, BipartiteDims, ComplexMatrix,
};
use crate::upb::DensityOperator;

/// Deterministic generator for the given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian sample via Box-Muller: real and imaginary parts
/// are independent `N(0, 1)`.
pub fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    let u1: f64 = 1.0 - rng.random::<f64>(); // in (0, 1], keeps the log finite
    let u2: f64 = rng.random::<f64>();
    let r = (-2.0 * u1.ln()).sqrt();
    let angle = std::f64::consts::TAU * u2;
    Complex64::new(r * angle.cos(), r * angle.sin())
}

/// Vector of independent complex Gaussians.
pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| gaussian_complex(rng)).collect()
}

/// Haar-like random unit vector (normalized complex Gaussian).
pub fn random_unit_vector(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    normalized(&random_vector(rng, n))
}

/// Square matrix of independent complex Gaussians (Ginibre ensemble).
pub fn random_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| gaussian_complex(rng))
}

/// Random Hermitian matrix `(G + G^dag) / 2`.
pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    random_matrix(rng, n).hermitian_part()
}

/// Random unitary from modified Gram-Schmidt on a Ginibre matrix, with a
/// second orthogonalization pass for numerical hygiene.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..n {
        for _pass in 0..2 {
            let (settled, rest) = cols.split_at_mut(j);
            let current = &mut rest[0];
            for prev in settled.iter() {
                let coeff = vdot(prev, current);
                for (z, p) in current.iter_mut().zip(prev) {
                    *z -= p * coeff;
                }
            }
        }
        let norm = vnorm(&cols[j]);
        for z in &mut cols[j] {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Random full-rank density matrix `G G^dag / tr(G G^dag)`.
pub fn random_density_matrix(rng: &mut impl Rng, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let gg = &g * &g.dagger();
    gg.scale_re(1.0 / gg.trace().re)
}

/// Random separable bipartite state: a convex mixture of `terms` random
/// product pure states.
pub fn random_separable(
    rng: &mut impl Rng,
    dims: BipartiteDims,
    terms: usize,
) -> Result<DensityOperator> {
    assert!(terms > 0, "a separable mixture needs at least one term");
    let n = dims.total();
    let mut weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut rho = ComplexMatrix::zeros(n, n);
    for &w in &weights {
        let a = random_unit_vector(rng, dims.dim_a());
        let b = random_unit_vector(rng, dims.dim_b());
        let joint = tensor_vec(&a, &b);
        rho = &rho + &outer_product(&joint, &joint).scale_re(w);
    }
    Ok(DensityOperator::new(rho, dims)?.with_label(format!("separable({terms} terms)")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{min_eigenvalue, partial_transpose};

    #[test]
    fn test_same_seed_reproduces_stream() {
        let a = random_matrix(&mut rng_from_seed(42), 5);
        let b = random_matrix(&mut rng_from_seed(42), 5);
        assert_eq!(a.max_diff(&b), 0.0);
        let c = random_matrix(&mut rng_from_seed(43), 5);
        assert!(c.max_diff(&a) > 1e-3);
    }

    #[test]
    fn test_gaussian_moments_are_plausible() {
        let mut rng = rng_from_seed(1);
        let n = 20_000;
        let samples: Vec<Complex64> = (0..n).map(|_| gaussian_complex(&mut rng)).collect();
        let mean = samples.iter().sum::<Complex64>() / n as f64;
        let var = samples.iter().map(|z| z.norm_sqr()).sum::<f64>() / n as f64;
        assert!(mean.norm() < 0.05, "mean {mean}");
        assert!((var - 2.0).abs() < 0.1, "variance {var}"); // E|z|^2 = 2 for N(0,1) parts
    }

    #[test]
    fn test_random_unit_vector_is_normalized() {
        let v = random_unit_vector(&mut rng_from_seed(7), 9);
        assert!((vnorm(&v) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn test_random_hermitian_is_hermitian() {
        let h = random_hermitian(&mut rng_from_seed(3), 8);
        assert!(h.is_hermitian(1e-15));
    }

    #[test]
    fn test_random_unitary_is_unitary() {
        let u = random_unitary(&mut rng_from_seed(11), 7);
        let gram = &u.dagger() * &u;
        assert!(gram.max_diff(&ComplexMatrix::identity(7)) < 1e-13);
    }

    #[test]
    fn test_random_density_matrix_is_a_state() {
        let rho = random_density_matrix(&mut rng_from_seed(5), 6);
        assert!((rho.trace().re - 1.0).abs() < 1e-13);
        assert!(rho.is_hermitian(1e-14));
        assert!(min_eigenvalue(&rho).unwrap() > -1e-13);
    }

    #[test]
    fn test_random_separable_state_is_ppt() {
        let dims = BipartiteDims::new(3, 3).unwrap();
        let rho = random_separable(&mut rng_from_seed(9), dims, 12).unwrap();
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        let pt = partial_transpose(rho.matrix(), dims).unwrap();
        // Separable states stay positive under partial transposition.
        assert!(min_eigenvalue(&pt).unwrap() > -1e-12);
    }
}
