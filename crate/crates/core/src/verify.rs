//! Built-in identity checks tying the map families together.
//!
//! These are exact algebraic identities of the implemented families, so their
//! residuals sit at machine precision. They cross-check three independent
//! code paths at once: the explicit family formulas, the tensor-algebra
//! automorphism construction, and direct matrix-by-matrix application.

use std::f64::consts::PI;

use crate::linalg::ComplexMatrix;
use crate::maps::{
    cho_kye_t, choi_c1, choi_c2, generalized_choi, inner_automorphism, outer_automorphism,
    unitary_u, MapSpec, OperatorFactor,
};

/// One named identity with its measured residual.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual <= self.tol
    }
}

const IDENTITY_TOL: f64 = 1e-12;

/// Runs the full identity suite and returns every check with its residual.
///
/// The suite covers:
/// 1. the rotation conjugacy of the two Choi variants,
///    `choi1 = ad(U(3 pi/2)) . choi2 . ad(U(pi/2))`;
/// 2. the same conjugacy inside the Cho-Kye curve, which exchanges `t` with
///    `1/t`; and
/// 3. the equivalence of diagonal-scaling extensions with the inner
///    automorphism by the corresponding diagonal factor.
pub fn identity_suite() -> Vec<IdentityCheck> {
    let mut checks = Vec::new();

    checks.push(check(
        "choi1 = ad(U(3pi/2)) . choi2 . ad(U(pi/2))",
        rotation_sandwich(&choi_c2()).action_distance(&choi_c1()),
    ));

    for t in [0.2, 0.5, 2.0, 5.0] {
        let phi_t = generalized_choi(cho_kye_t(t).expect("t > 0"));
        let phi_inv = generalized_choi(cho_kye_t(1.0 / t).expect("1/t > 0"));
        checks.push(check(
            format!(
                "cho_kye({t}) = ad(U(3pi/2)) . cho_kye({}) . ad(U(pi/2))",
                1.0 / t
            ),
            rotation_sandwich(&phi_inv).action_distance(&phi_t),
        ));
    }

    checks.push(check(
        "choi1 . ad(diag(1, 0.5, 0.25)) built two ways",
        diagonal_extension_residual(&choi_c1(), &[1.0, 0.5, 0.25]),
    ));
    checks.push(check(
        "cho_kye(0.7) . ad(diag(1.3, 0.8, 0.45)) built two ways",
        diagonal_extension_residual(
            &generalized_choi(cho_kye_t(0.7).expect("t > 0")),
            &[1.3, 0.8, 0.45],
        ),
    ));

    checks
}

/// `ad(U(3 pi/2)) . phi . ad(U(pi/2))`.
fn rotation_sandwich(phi: &MapSpec) -> MapSpec {
    let inner = inner_automorphism(phi, &unitary_u(0.5 * PI)).expect("dimension 3");
    outer_automorphism(&unitary_u(1.5 * PI), &inner).expect("dimension 3")
}

/// Distance between the tensor-algebra inner automorphism by a diagonal
/// factor and the same map assembled by explicit conjugation `X -> D X D`.
fn diagonal_extension_residual(phi: &MapSpec, entries: &[f64]) -> f64 {
    let factor = OperatorFactor::diagonal(entries).expect("non-zero entries");
    let via_tensor = inner_automorphism(phi, &factor).expect("dimension matches");
    let d = ComplexMatrix::diagonal_real(entries);
    let direct = MapSpec::from_fn(phi.dim(), "direct", |x| {
        phi.apply(&(&(&d * x) * &d.dagger()))
            .expect("dimension matches")
    });
    via_tensor.action_distance(&direct)
}

fn check(name: impl Into<String>, residual: f64) -> IdentityCheck {
    IdentityCheck {
        name: name.into(),
        residual,
        tol: IDENTITY_TOL,
    }
}
