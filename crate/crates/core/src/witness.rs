//! Entanglement detection by positive maps and rotation sweeps.
//!
//! A positive-but-not-CP map `phi` witnesses entanglement: for every
//! separable state `rho` the extended operator `(id (x) phi)(rho)` stays
//! positive, so a negative eigenvalue certifies entanglement. A single map
//! misses most states, though; sweeping the inner rotation family
//! `phi . ad(U(theta))` over a full turn probes a one-parameter circle of
//! witnesses and records the smallest eigenvalue at every angle.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{min_eigenvalue, partial_transpose, BipartiteDims, ComplexMatrix};
use crate::maps::{inner_automorphism, unitary_u, MapSpec};
use crate::upb::DensityOperator;

/// Number of bisection steps when refining an interval endpoint.
const REFINE_STEPS: usize = 30;

/// Sweep grid and detection threshold.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    theta_start: f64,
    theta_end: f64,
    samples: usize,
    negativity_tol: f64,
}

impl SweepConfig {
    /// Validates that the grid is finite, increasing, has at least two
    /// samples, and uses a positive tolerance.
    pub fn new(
        theta_start: f64,
        theta_end: f64,
        samples: usize,
        negativity_tol: f64,
    ) -> Result<Self> {
        if !theta_start.is_finite() || !theta_end.is_finite() || theta_end <= theta_start {
            return Err(Error::InvalidParameter(format!(
                "sweep range [{theta_start}, {theta_end}] must be finite and increasing"
            )));
        }
        if samples < 2 {
            return Err(Error::InvalidParameter(format!(
                "sweep needs at least 2 samples, got {samples}"
            )));
        }
        // NaN tolerances fail the finiteness check.
        if negativity_tol <= 0.0 || !negativity_tol.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "negativity tolerance must be positive and finite, got {negativity_tol}"
            )));
        }
        Ok(Self {
            theta_start,
            theta_end,
            samples,
            negativity_tol,
        })
    }

    pub fn theta_start(&self) -> f64 {
        self.theta_start
    }

    pub fn theta_end(&self) -> f64 {
        self.theta_end
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn negativity_tol(&self) -> f64 {
        self.negativity_tol
    }

    /// Grid spacing.
    pub fn step(&self) -> f64 {
        (self.theta_end - self.theta_start) / (self.samples - 1) as f64
    }

    /// The `k`-th grid angle; both endpoints are included exactly.
    pub fn theta_at(&self, k: usize) -> f64 {
        let span = self.theta_end - self.theta_start;
        self.theta_start + span * (k as f64 / (self.samples - 1) as f64)
    }
}

impl Default for SweepConfig {
    /// Full turn at quarter-degree resolution: 721 samples put `pi/2` exactly
    /// on the grid (180 steps), which the shift-symmetry comparison relies
    /// on.
    fn default() -> Self {
        Self {
            theta_start: 0.0,
            theta_end: std::f64::consts::TAU,
            samples: 721,
            negativity_tol: 1e-9,
        }
    }
}

/// One sweep sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub theta: f64,
    pub lambda_min: f64,
}

/// A sampled curve `theta -> lambda_min((id (x) phi_theta)(rho))`.
#[derive(Debug, Clone)]
pub struct SweepCurve {
    points: Vec<SweepPoint>,
    map_label: String,
    state_label: String,
}

impl SweepCurve {
    /// Requires at least two points with finite, strictly increasing angles.
    pub fn new(
        points: Vec<SweepPoint>,
        map_label: impl Into<String>,
        state_label: impl Into<String>,
    ) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "a sweep curve needs at least 2 points, got {}",
                points.len()
            )));
        }
        for pair in points.windows(2) {
            if !pair[0].theta.is_finite() || pair[1].theta <= pair[0].theta {
                return Err(Error::InvalidParameter(format!(
                    "curve angles must be finite and strictly increasing, found {} then {}",
                    pair[0].theta, pair[1].theta
                )));
            }
        }
        Ok(Self {
            points,
            map_label: map_label.into(),
            state_label: state_label.into(),
        })
    }

    pub fn points(&self) -> &[SweepPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn map_label(&self) -> &str {
        &self.map_label
    }

    pub fn state_label(&self) -> &str {
        &self.state_label
    }

    /// The sample with the smallest eigenvalue (first one on ties).
    pub fn global_min(&self) -> SweepPoint {
        *self
            .points
            .iter()
            .reduce(|best, p| {
                if p.lambda_min < best.lambda_min {
                    p
                } else {
                    best
                }
            })
            .expect("curve is non-empty by construction")
    }
}

/// Detection intervals of a sweep, with bisection-refined endpoints.
#[derive(Debug, Clone)]
pub struct DetectionReport {
    /// Angle ranges on which `lambda_min < -tol` (open endpoints refined to
    /// the crossing, grid endpoints kept as-is).
    pub intervals: Vec<(f64, f64)>,
    /// Grid angle of the smallest sampled eigenvalue.
    pub global_min_theta: f64,
    /// The smallest sampled eigenvalue itself.
    pub global_min_lambda: f64,
}

impl DetectionReport {
    /// Whether any interval was found.
    pub fn detected(&self) -> bool {
        !self.intervals.is_empty()
    }
}

/// Applies `id (x) phi` blockwise to a matrix on `A (x) B`; `phi` must act on
/// the `B` factor dimension.
pub fn apply_to_second_matrix(
    phi: &MapSpec,
    m: &ComplexMatrix,
    dims: BipartiteDims,
) -> Result<ComplexMatrix> {
    if phi.dim() != dims.dim_b() {
        return Err(Error::DimensionMismatch(format!(
            "map acts on dimension {} but the second factor has dimension {}",
            phi.dim(),
            dims.dim_b()
        )));
    }
    let n = dims.total();
    if !m.is_square() || m.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "operator on {dims} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let (da, db) = (dims.dim_a(), dims.dim_b());
    let mut out = ComplexMatrix::zeros(n, n);
    for ia in 0..da {
        for ja in 0..da {
            let block = ComplexMatrix::from_fn(db, db, |k, l| m[(ia * db + k, ja * db + l)]);
            let image = phi.apply(&block)?;
            for k in 0..db {
                for l in 0..db {
                    out[(ia * db + k, ja * db + l)] = image[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// [`apply_to_second_matrix`] on a validated state.
pub fn apply_to_second(phi: &MapSpec, rho: &DensityOperator) -> Result<ComplexMatrix> {
    apply_to_second_matrix(phi, rho.matrix(), rho.dims())
}

/// Outcome of a single-map detection attempt.
#[derive(Debug, Clone, Copy)]
pub struct DetectionOutcome {
    /// Smallest eigenvalue of `(id (x) phi)(rho)`.
    pub lambda_min: f64,
    /// True when that eigenvalue is below `-tol`.
    pub detected: bool,
}

/// Tests a single witness: entanglement is certified when
/// `(id (x) phi)(rho)` has an eigenvalue below `-tol`.
///
/// The conclusion is only valid when `phi` is a positive map; this function
/// does not (and cannot cheaply) verify positivity.
pub fn detect(phi: &MapSpec, rho: &DensityOperator, tol: f64) -> Result<DetectionOutcome> {
    let extended = apply_to_second(phi, rho)?.hermitian_part();
    let lambda_min = min_eigenvalue(&extended)?;
    Ok(DetectionOutcome {
        lambda_min,
        detected: lambda_min < -tol,
    })
}

/// Positive-partial-transpose check: `true` when the partial transpose of
/// `rho` has no eigenvalue below `-tol`.
pub fn ppt_check(rho: &DensityOperator, tol: f64) -> Result<bool> {
    let pt = partial_transpose(rho.matrix(), rho.dims())?;
    Ok(min_eigenvalue(&pt)? >= -tol)
}

/// Smallest eigenvalue of `(id (x) (base . ad(U(theta))))(rho)` at one angle.
pub fn lambda_min_at(base: &MapSpec, rho: &DensityOperator, theta: f64) -> Result<f64> {
    let rotated = inner_automorphism(base, &unitary_u(theta))?;
    let extended = apply_to_second(&rotated, rho)?.hermitian_part();
    min_eigenvalue(&extended)
}

/// Samples `lambda_min` over the rotation family on the configured grid.
pub fn sweep(base: &MapSpec, rho: &DensityOperator, config: &SweepConfig) -> Result<SweepCurve> {
    // Surface dimension problems once, before fanning out.
    lambda_min_at(base, rho, config.theta_start())?;
    let points = (0..config.samples())
        .into_par_iter()
        .map(|k| {
            let theta = config.theta_at(k);
            Ok(SweepPoint {
                theta,
                lambda_min: lambda_min_at(base, rho, theta)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SweepCurve::new(
        points,
        format!("{} . ad(U(theta))", base.label()),
        rho.label(),
    )
}

/// Extracts the detection intervals of a curve, refining each interior
/// endpoint by 30 bisection steps of `eval` (the continuous function the
/// curve was sampled from).
pub fn detection_intervals(
    curve: &SweepCurve,
    negativity_tol: f64,
    eval: impl Fn(f64) -> f64,
) -> DetectionReport {
    let points = curve.points();
    let is_negative = |p: &SweepPoint| p.lambda_min < -negativity_tol;

    let mut intervals = Vec::new();
    let mut run_start: Option<usize> = None;
    for (k, p) in points.iter().enumerate() {
        match (is_negative(p), run_start) {
            (true, None) => run_start = Some(k),
            (false, Some(start)) => {
                intervals.push(refine_interval(points, start, k - 1, negativity_tol, &eval));
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(start) = run_start {
        intervals.push(refine_interval(
            points,
            start,
            points.len() - 1,
            negativity_tol,
            &eval,
        ));
    }

    let global = curve.global_min();
    DetectionReport {
        intervals,
        global_min_theta: global.theta,
        global_min_lambda: global.lambda_min,
    }
}

/// Refines the endpoints of a negative run `points[first..=last]`.
fn refine_interval(
    points: &[SweepPoint],
    first: usize,
    last: usize,
    tol: f64,
    eval: &impl Fn(f64) -> f64,
) -> (f64, f64) {
    // g(theta) = lambda(theta) + tol changes sign at each interval endpoint.
    let g = |theta: f64| eval(theta) + tol;
    let left = if first == 0 {
        points[0].theta
    } else {
        bisect_crossing(points[first - 1].theta, points[first].theta, &g)
    };
    let right = if last == points.len() - 1 {
        points[last].theta
    } else {
        bisect_crossing(points[last + 1].theta, points[last].theta, &g)
    };
    (left, right)
}

/// Bisection for the crossing of `g` between an angle where `g >= 0`
/// (`outside`) and one where `g < 0` (`inside`).
fn bisect_crossing(outside: f64, inside: f64, g: &impl Fn(f64) -> f64) -> f64 {
    let (mut lo, mut hi) = (outside, inside);
    for _ in 0..REFINE_STEPS {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sweeps and reports in one call, reusing the sweep's own evaluator for the
/// endpoint refinement.
pub fn sweep_with_report(
    base: &MapSpec,
    rho: &DensityOperator,
    config: &SweepConfig,
) -> Result<(SweepCurve, DetectionReport)> {
    let curve = sweep(base, rho, config)?;
    let report = detection_intervals(&curve, config.negativity_tol(), |theta| {
        lambda_min_at(base, rho, theta).expect("dimensions validated by the sweep")
    });
    Ok((curve, report))
}

/// Largest eigenvalue difference between curve `a` advanced by `shift` and
/// curve `b`, treating both as periodic over their (identical, full-period)
/// grid. The shift must be an integer number of grid steps.
pub fn curve_shift_distance(a: &SweepCurve, b: &SweepCurve, shift: f64) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::GridMismatch(format!(
            "curves have {} and {} samples",
            a.len(),
            b.len()
        )));
    }
    let pa = a.points();
    let pb = b.points();
    for (x, y) in pa.iter().zip(pb) {
        if (x.theta - y.theta).abs() > 1e-12 {
            return Err(Error::GridMismatch(format!(
                "grid angles differ: {} vs {}",
                x.theta, y.theta
            )));
        }
    }
    let periods = pa.len() - 1; // last point duplicates the first modulo 2 pi
    let span = pa[periods].theta - pa[0].theta;
    if (span - std::f64::consts::TAU).abs() > 1e-9 {
        return Err(Error::GridMismatch(format!(
            "shift comparison needs a full 2 pi grid, span is {span}"
        )));
    }
    let step = span / periods as f64;
    let steps_exact = shift / step;
    let steps = steps_exact.round();
    if (steps_exact - steps).abs() * step > 1e-9 {
        return Err(Error::GridMismatch(format!(
            "shift {shift} is not an integer number of grid steps (step {step})"
        )));
    }
    let offset = (steps as i64).rem_euclid(periods as i64) as usize;

    let mut distance: f64 = 0.0;
    for k in 0..periods {
        let shifted = pa[(k + offset) % periods].lambda_min;
        distance = distance.max((shifted - pb[k].lambda_min).abs());
    }
    Ok(distance)
}
