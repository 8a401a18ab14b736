//! Concrete map families: identity, transpose, the two Choi map variants,
//! and their Cho-Kye one-parameter generalization.

use crate::error::{Error, Result};
use crate::maps::MapSpec;

/// The identity map on `d x d` matrices.
pub fn identity_map(dim: usize) -> MapSpec {
    MapSpec::from_fn(dim, format!("id({dim})"), |x| x.clone())
}

/// The transpose map on `d x d` matrices: positive but famously not CP.
pub fn transpose_map(dim: usize) -> MapSpec {
    MapSpec::from_fn(dim, format!("transpose({dim})"), |x| x.transpose())
}

/// Diagonal weights `(a, b, c)` of the generalized Choi map.
///
/// Carries no positivity claim by itself; any finite non-negative triple is
/// accepted and [`generalized_choi`] will happily build maps outside the
/// positive cone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChoKyeParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ChoKyeParams {
    /// Validates that all three weights are finite and non-negative.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "Cho-Kye weight {name} must be finite and non-negative, got {v}"
                )));
            }
        }
        Ok(Self { a, b, c })
    }
}

/// Weights of the extremal one-parameter sub-family at parameter `t >= 0`:
///
/// ```text
/// a = (1 - t)^2 / (1 - t + t^2)
/// b = t^2       / (1 - t + t^2)
/// c = 1         / (1 - t + t^2)
/// ```
///
/// Every triple on this curve satisfies `a + b + c = 2` and `bc = (1 - a)^2`.
/// At `t = 0` the weights are `(1, 0, 1)`, reproducing [`choi_c2`].
pub fn cho_kye_t(t: f64) -> Result<ChoKyeParams> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Cho-Kye curve parameter must be finite and non-negative, got {t}"
        )));
    }
    let denom = 1.0 - t + t * t; // = (t - 1/2)^2 + 3/4, never zero
    ChoKyeParams::new((1.0 - t) * (1.0 - t) / denom, t * t / denom, 1.0 / denom)
}

/// The generalized Choi map with diagonal weights `(a, b, c)`:
///
/// ```text
///              1  [ a x11 + b x22 + c x33      -x12                 -x13            ]
/// phi(X)  =   --- [      -x21            a x22 + b x33 + c x11      -x23            ]
///              2  [      -x31                  -x32            a x33 + b x11 + c x22]
/// ```
pub fn generalized_choi(params: ChoKyeParams) -> MapSpec {
    let ChoKyeParams { a, b, c } = params;
    let label = format!("gen_choi(a={a:.6}, b={b:.6}, c={c:.6})");
    MapSpec::from_fn(3, label, move |x| {
        let mut out = x.scale_re(-0.5);
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            out[(i, i)] = (x[(i, i)] * a + x[(j, j)] * b + x[(k, k)] * c) * 0.5;
        }
        out
    })
}

/// First Choi map variant, weights `(1, 1, 0)`:
/// diagonal `(x11 + x22, x22 + x33, x33 + x11) / 2`, off-diagonal `-x_ij / 2`.
pub fn choi_c1() -> MapSpec {
    relabel(
        generalized_choi(ChoKyeParams {
            a: 1.0,
            b: 1.0,
            c: 0.0,
        }),
        "choi1",
    )
}

/// Second Choi map variant, weights `(1, 0, 1)`:
/// diagonal `(x11 + x33, x22 + x11, x33 + x22) / 2`, off-diagonal `-x_ij / 2`.
pub fn choi_c2() -> MapSpec {
    relabel(
        generalized_choi(ChoKyeParams {
            a: 1.0,
            b: 0.0,
            c: 1.0,
        }),
        "choi2",
    )
}

fn relabel(phi: MapSpec, label: &str) -> MapSpec {
    MapSpec::from_action(phi.dim(), phi.action().clone(), label)
        .expect("action tensor shape is valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Generic Hermitian input with distinct entries everywhere.
    fn sample_input() -> ComplexMatrix {
        let mut x = ComplexMatrix::zeros(3, 3);
        x[(0, 0)] = c(1.0, 0.0);
        x[(1, 1)] = c(-2.0, 0.0);
        x[(2, 2)] = c(0.5, 0.0);
        x[(0, 1)] = c(0.3, 0.7);
        x[(1, 0)] = c(0.3, -0.7);
        x[(0, 2)] = c(-1.1, 0.2);
        x[(2, 0)] = c(-1.1, -0.2);
        x[(1, 2)] = c(0.0, -0.9);
        x[(2, 1)] = c(0.0, 0.9);
        x
    }

    #[test]
    fn test_choi_c1_on_diagonal_example() {
        let phi = choi_c1();
        let out = phi
            .apply(&ComplexMatrix::diagonal_real(&[2.0, 4.0, 6.0]))
            .unwrap();
        let expect = ComplexMatrix::diagonal_real(&[3.0, 5.0, 4.0]);
        assert!(out.max_diff(&expect) < 1e-15);
    }

    #[test]
    fn test_choi_c1_on_matrix_unit() {
        // E_11 maps to diag(1, 0, 1) / 2.
        let phi = choi_c1();
        let out = phi.apply(&ComplexMatrix::matrix_unit(3, 0, 0)).unwrap();
        let expect = ComplexMatrix::diagonal_real(&[0.5, 0.0, 0.5]);
        assert!(out.max_diff(&expect) < 1e-15);
    }

    #[test]
    fn test_choi_c1_entrywise_formula() {
        let x = sample_input();
        let out = choi_c1().apply(&x).unwrap();
        // Diagonal: cyclic pair sums; off-diagonal: -x_ij / 2.
        assert!((out[(0, 0)] - (x[(0, 0)] + x[(1, 1)]) * 0.5).norm() < 1e-15);
        assert!((out[(1, 1)] - (x[(1, 1)] + x[(2, 2)]) * 0.5).norm() < 1e-15);
        assert!((out[(2, 2)] - (x[(2, 2)] + x[(0, 0)]) * 0.5).norm() < 1e-15);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!((out[(i, j)] + x[(i, j)] * 0.5).norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn test_choi_c2_entrywise_formula() {
        let x = sample_input();
        let out = choi_c2().apply(&x).unwrap();
        assert!((out[(0, 0)] - (x[(0, 0)] + x[(2, 2)]) * 0.5).norm() < 1e-15);
        assert!((out[(1, 1)] - (x[(1, 1)] + x[(0, 0)]) * 0.5).norm() < 1e-15);
        assert!((out[(2, 2)] - (x[(2, 2)] + x[(1, 1)]) * 0.5).norm() < 1e-15);
        assert!((out[(0, 2)] + x[(0, 2)] * 0.5).norm() < 1e-15);
    }

    #[test]
    fn test_generalized_choi_cyclic_diagonal() {
        let params = ChoKyeParams::new(0.9, 0.4, 0.7).unwrap();
        let x = sample_input();
        let out = generalized_choi(params).apply(&x).unwrap();
        let (d0, d1, d2) = (x[(0, 0)], x[(1, 1)], x[(2, 2)]);
        assert!((out[(0, 0)] - (d0 * 0.9 + d1 * 0.4 + d2 * 0.7) * 0.5).norm() < 1e-15);
        assert!((out[(1, 1)] - (d1 * 0.9 + d2 * 0.4 + d0 * 0.7) * 0.5).norm() < 1e-15);
        assert!((out[(2, 2)] - (d2 * 0.9 + d0 * 0.4 + d1 * 0.7) * 0.5).norm() < 1e-15);
        assert!((out[(1, 0)] + x[(1, 0)] * 0.5).norm() < 1e-15);
    }

    #[test]
    fn test_cho_kye_t_examples() {
        let p = cho_kye_t(2.0).unwrap();
        assert!((p.a - 1.0 / 3.0).abs() < 1e-15);
        assert!((p.b - 4.0 / 3.0).abs() < 1e-15);
        assert!((p.c - 1.0 / 3.0).abs() < 1e-15);

        let p0 = cho_kye_t(0.0).unwrap();
        assert_eq!((p0.a, p0.b, p0.c), (1.0, 0.0, 1.0));
        // At t = 0 the curve lands exactly on the second Choi variant.
        assert!(generalized_choi(p0).action_distance(&choi_c2()) < 1e-15);
    }

    #[test]
    fn test_cho_kye_curve_constraints() {
        for &t in &[0.0, 0.1, 0.5, 1.0, 2.5, 10.0] {
            let p = cho_kye_t(t).unwrap();
            assert!((p.a + p.b + p.c - 2.0).abs() < 1e-12, "sum at t={t}");
            assert!(
                (p.b * p.c - (1.0 - p.a) * (1.0 - p.a)).abs() < 1e-12,
                "product at t={t}"
            );
        }
    }

    #[test]
    fn test_cho_kye_t_rejects_bad_parameters() {
        assert!(cho_kye_t(-0.5).is_err());
        assert!(cho_kye_t(f64::NAN).is_err());
        assert!(cho_kye_t(f64::INFINITY).is_err());
        assert!(ChoKyeParams::new(1.0, -0.1, 0.0).is_err());
    }

    #[test]
    fn test_choi_maps_are_unital_and_trace_preserving() {
        let x = sample_input();
        for phi in [choi_c1(), choi_c2()] {
            let id_out = phi.apply(&ComplexMatrix::identity(3)).unwrap();
            assert!(id_out.max_diff(&ComplexMatrix::identity(3)) < 1e-15);
            let out = phi.apply(&x).unwrap();
            assert!((out.trace() - x.trace()).norm() < 1e-14);
        }
    }

    #[test]
    fn test_choi_maps_preserve_hermiticity() {
        for phi in [
            choi_c1(),
            choi_c2(),
            generalized_choi(cho_kye_t(0.7).unwrap()),
        ] {
            assert!(phi.preserves_hermiticity(1e-13));
            let out = phi.apply(&sample_input()).unwrap();
            assert!(out.is_hermitian(1e-14));
        }
    }

    #[test]
    fn test_transpose_map_transposes() {
        let x = sample_input();
        let out = transpose_map(3).apply(&x).unwrap();
        assert_eq!(out.max_diff(&x.transpose()), 0.0);
    }
}
