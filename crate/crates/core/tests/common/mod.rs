//! Independent eigenvalue oracles for cross-checking the Jacobi solver.
//!
//! Both oracles compute Hermitian spectra through routes that share nothing
//! with the library's rotation-based solver:
//!
//! - [`charpoly_eigenvalues`] (n <= 4) builds the characteristic polynomial
//!   from power-sum traces via Newton's identities and isolates its real
//!   roots by bisection between the roots of the derivative chain;
//! - [`power_iteration_eigenvalues`] (any n) peels eigenvalues off a shifted
//!   positive definite copy by power iteration with Hotelling deflation,
//!   accepting each value only once its Rayleigh residual certifies it.

use entwit_core::{Complex64, ComplexMatrix};

/// Eigenvalues (ascending) of a Hermitian matrix with `n <= 4`, via the
/// characteristic polynomial.
pub fn charpoly_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.rows();
    assert!(
        h.is_square() && (1..=4).contains(&n),
        "charpoly oracle handles 1..=4"
    );

    // Normalize so polynomial coefficients stay O(1).
    let scale = h.frobenius_norm().max(1.0);
    let hs = h.scale_re(1.0 / scale);

    // Power sums p_k = tr(H^k), then elementary symmetric functions by
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
    let mut power = ComplexMatrix::identity(n);
    let mut p = vec![0.0; n + 1];
    for pk in p.iter_mut().skip(1) {
        power = &power * &hs;
        let t = power.trace();
        assert!(t.im.abs() < 1e-9, "trace of Hermitian power must be real");
        *pk = t.re;
    }
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for k in 1..=n {
        let mut acc = 0.0;
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += sign * e[k - i] * p[i];
        }
        e[k] = acc / k as f64;
    }

    // Monic characteristic polynomial, coefficients indexed by power:
    // lambda^n - e1 lambda^{n-1} + e2 lambda^{n-2} - ...
    let mut coeffs = vec![0.0; n + 1];
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[n - k] = sign * e[k];
    }

    let mut roots = real_roots(&coeffs);
    assert_eq!(roots.len(), n, "expected {n} real roots, got {roots:?}");
    for r in &mut roots {
        *r *= scale;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// All real roots (with multiplicity) of a polynomial known to have only
/// real roots, by recursive interlacing: the roots of the derivative split
/// the line into intervals each holding at most one root.
fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let degree = coeffs.len() - 1;
    assert!(
        coeffs[degree] != 0.0,
        "leading coefficient must be non-zero"
    );
    if degree == 1 {
        return vec![-coeffs[0] / coeffs[1]];
    }

    let derivative: Vec<f64> = (1..=degree).map(|i| coeffs[i] * i as f64).collect();
    let mut criticals = real_roots(&derivative);
    criticals.sort_by(f64::total_cmp);
    criticals.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    // Cauchy bound: all roots lie within 1 + max |c_i / c_n|.
    let lead = coeffs[degree];
    let bound = 1.0
        + coeffs[..degree]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);

    let mut endpoints = Vec::with_capacity(criticals.len() + 2);
    endpoints.push(-bound - 1.0);
    endpoints.extend(criticals.iter().copied());
    endpoints.push(bound + 1.0);

    let mut roots = Vec::new();
    for pair in endpoints.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if eval_poly(coeffs, a) * eval_poly(coeffs, b) < 0.0 {
            roots.push(bisect_root(coeffs, a, b));
        }
    }

    // Multiple roots touch zero at a critical point instead of crossing.
    for &r in &criticals {
        if poly_vanishes(coeffs, r) && roots.iter().all(|&x| (x - r).abs() > 1e-9) {
            let multiplicity = root_multiplicity(coeffs, r);
            roots.extend(std::iter::repeat_n(r, multiplicity));
        }
    }

    roots.sort_by(f64::total_cmp);
    roots
}

fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Scale-aware test for `p(x) = 0` under floating-point evaluation noise.
fn poly_vanishes(coeffs: &[f64], x: f64) -> bool {
    let noise: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (c * x.abs().max(1.0).powi(i as i32)).abs())
        .sum();
    eval_poly(coeffs, x).abs() <= 1e-9 * noise.max(1.0)
}

/// Multiplicity of a root via the derivative chain.
fn root_multiplicity(coeffs: &[f64], r: f64) -> usize {
    let mut m = 1;
    let mut current: Vec<f64> = coeffs.to_vec();
    loop {
        if current.len() <= 2 {
            return m;
        }
        current = (1..current.len()).map(|i| current[i] * i as f64).collect();
        if !poly_vanishes(&current, r) {
            return m;
        }
        m += 1;
    }
}

fn bisect_root(coeffs: &[f64], mut a: f64, mut b: f64) -> f64 {
    let mut fa = eval_poly(coeffs, a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        let fm = eval_poly(coeffs, mid);
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Eigenvalues (ascending) by shifted power iteration with deflation.
///
/// Works on `A = H + cI` with `c = ||H||_F + 1`, so `A` is positive definite
/// and the dominant eigenvalue of the deflated matrix is always the next one
/// down. Iterations are driven by `A^2` for speed; each eigenvalue is
/// accepted only when the Rayleigh residual `||A v - mu v||` — which for
/// Hermitian matrices bounds the distance from `mu` to the true spectrum —
/// drops below `1e-11 * ||A||`.
pub fn power_iteration_eigenvalues(h: &ComplexMatrix, seed: u64) -> Vec<f64> {
    let n = h.rows();
    assert!(h.is_square() && n >= 1);
    let shift = h.frobenius_norm() + 1.0;
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] += Complex64::new(shift, 0.0);
    }
    let residual_tol = 1e-11 * (2.0 * shift);
    let max_iters = 200_000;

    let mut lcg = Lcg::new(seed);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let mut v = lcg.unit_vector(n);
        let mut mu = 0.0;
        let mut certified = false;
        for _ in 0..max_iters {
            // One driving step of A^2.
            let w = a.mul_vec(&a.mul_vec(&v));
            let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!(norm > 0.0, "power iteration collapsed to zero");
            v = w.into_iter().map(|z| z / norm).collect();

            // Certify against A itself, not the squared driver.
            let av = a.mul_vec(&v);
            mu = v
                .iter()
                .zip(&av)
                .map(|(x, y)| (x.conj() * y).re)
                .sum::<f64>();
            let residual = av
                .iter()
                .zip(&v)
                .map(|(x, y)| (x - y * mu).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if residual <= residual_tol {
                certified = true;
                break;
            }
        }
        assert!(
            certified,
            "power iteration failed to certify an eigenvalue within {max_iters} iterations"
        );
        values.push(mu - shift);

        // Hotelling deflation: send the found eigenvalue to zero, far below
        // the remaining (positive, >= shift - ||H||) spectrum.
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] -= v[i] * v[j].conj() * mu;
            }
        }
    }
    values.sort_by(f64::total_cmp);
    values
}

/// Minimal deterministic generator so the oracle shares no randomness
/// utilities with the library under test.
struct Lcg {
    state: u64,
}

impl Lcg {
    fn new(seed: u64) -> Self {
        Self {
            state: seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1),
        }
    }

    fn next_f64(&mut self) -> f64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        // Top 53 bits as a uniform in [0, 1).
        (self.state >> 11) as f64 / (1u64 << 53) as f64
    }

    fn unit_vector(&mut self, n: usize) -> Vec<Complex64> {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(self.next_f64() - 0.5, self.next_f64() - 0.5))
            .collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / norm).collect()
    }
}
