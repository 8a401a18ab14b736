//! Unextendable product bases and the bound entangled states they generate.
//!
//! A set of orthonormal product vectors `psi_i = a_i (x) b_i` is unextendable
//! when no further product vector is orthogonal to all of them. The
//! normalized projector onto the orthogonal complement of such a set is then
//! a PPT entangled ("bound entangled") state: it has no product vector in its
//! range, yet stays positive under partial transposition.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    is_psd, min_eigenpair, outer_product, tensor_vec, vdot, vnorm, BipartiteDims, ComplexMatrix,
};
use crate::maps::{SeesawOptions, SeesawOutcome};
use crate::random::{random_unit_vector, rng_from_seed};

/// Max-norm tolerance on the joint Gram matrix of a product basis.
const ORTHONORMALITY_TOL: f64 = 1e-12;

/// A list of orthonormal product vectors on a bipartite system.
#[derive(Debug, Clone)]
pub struct ProductBasisSet {
    dims: BipartiteDims,
    pairs: Vec<(Vec<Complex64>, Vec<Complex64>)>,
    label: String,
}

impl ProductBasisSet {
    /// Validates factor lengths, unit norms, and joint orthonormality.
    pub fn new(
        dims: BipartiteDims,
        pairs: Vec<(Vec<Complex64>, Vec<Complex64>)>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if pairs.len() > dims.total() {
            return Err(Error::InvalidParameter(format!(
                "{} product vectors cannot be orthonormal in dimension {}",
                pairs.len(),
                dims.total()
            )));
        }
        for (k, (a, b)) in pairs.iter().enumerate() {
            if a.len() != dims.dim_a() || b.len() != dims.dim_b() {
                return Err(Error::DimensionMismatch(format!(
                    "product vector {k} has factor lengths {} and {}, expected {} and {}",
                    a.len(),
                    b.len(),
                    dims.dim_a(),
                    dims.dim_b()
                )));
            }
            let defect = (vnorm(a) - 1.0).abs().max((vnorm(b) - 1.0).abs());
            if defect > ORTHONORMALITY_TOL {
                return Err(Error::BasisNotOrthonormal(defect));
            }
        }
        let set = Self {
            dims,
            pairs,
            label: label.into(),
        };
        let defect = set.gram_defect();
        if defect > ORTHONORMALITY_TOL {
            return Err(Error::BasisNotOrthonormal(defect));
        }
        Ok(set)
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Whether the set already spans the whole joint space.
    pub fn is_complete(&self) -> bool {
        self.pairs.len() == self.dims.total()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The `k`-th factor pair `(a_k, b_k)`.
    pub fn pair(&self, k: usize) -> (&[Complex64], &[Complex64]) {
        let (a, b) = &self.pairs[k];
        (a, b)
    }

    /// The `k`-th joint vector `a_k (x) b_k`.
    pub fn joint(&self, k: usize) -> Vec<Complex64> {
        let (a, b) = &self.pairs[k];
        tensor_vec(a, b)
    }

    /// Max-norm distance of the joint Gram matrix from the identity.
    pub fn gram_defect(&self) -> f64 {
        let n = self.pairs.len();
        let mut defect: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let (ai, bi) = &self.pairs[i];
                let (aj, bj) = &self.pairs[j];
                let overlap = vdot(ai, aj) * vdot(bi, bj);
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((overlap - Complex64::new(target, 0.0)).norm());
            }
        }
        defect
    }

    /// Projector `sum_i |psi_i><psi_i|` onto the span of the set.
    pub fn span_projector(&self) -> ComplexMatrix {
        let n = self.dims.total();
        let mut p = ComplexMatrix::zeros(n, n);
        for k in 0..self.pairs.len() {
            let joint = self.joint(k);
            p = &p + &outer_product(&joint, &joint);
        }
        p
    }
}

/// The complete product basis `{e_i (x) e_j}`; useful as the trivially
/// extendable control case.
pub fn complete_product_basis(dims: BipartiteDims) -> ProductBasisSet {
    let mut pairs = Vec::with_capacity(dims.total());
    for i in 0..dims.dim_a() {
        for j in 0..dims.dim_b() {
            let mut a = vec![Complex64::new(0.0, 0.0); dims.dim_a()];
            let mut b = vec![Complex64::new(0.0, 0.0); dims.dim_b()];
            a[i] = Complex64::new(1.0, 0.0);
            b[j] = Complex64::new(1.0, 0.0);
            pairs.push((a, b));
        }
    }
    ProductBasisSet::new(dims, pairs, "complete").expect("standard basis is orthonormal")
}

/// The five-vector "tiles" unextendable product basis on a 3x3 system.
///
/// Four vectors tile the edges of the 3x3 grid with `|i>(|j> - |k>)/sqrt(2)`
/// patterns and the fifth is the uniform vector on both factors.
pub fn tiles() -> ProductBasisSet {
    let dims = BipartiteDims::new(3, 3).expect("3x3 is valid");
    let half = 1.0 / 2f64.sqrt();
    let third = 1.0 / 3f64.sqrt();
    let e = |k: usize| {
        let mut v = vec![Complex64::new(0.0, 0.0); 3];
        v[k] = Complex64::new(1.0, 0.0);
        v
    };
    let diff = |j: usize, k: usize| {
        let mut v = vec![Complex64::new(0.0, 0.0); 3];
        v[j] = Complex64::new(half, 0.0);
        v[k] = Complex64::new(-half, 0.0);
        v
    };
    let uniform = vec![Complex64::new(third, 0.0); 3];
    let pairs = vec![
        (e(0), diff(0, 1)),
        (e(2), diff(1, 2)),
        (diff(0, 1), e(2)),
        (diff(1, 2), e(0)),
        (uniform.clone(), uniform),
    ];
    ProductBasisSet::new(dims, pairs, "tiles").expect("tiles basis is orthonormal")
}

/// The five-vector "pyramid" unextendable product basis on a 3x3 system.
///
/// The factors are the unit vectors to the apex-raised corners of a regular
/// pentagon; vector `j` pairs factor `v_j` with factor `v_{2j mod 5}`, which
/// makes every joint pair orthogonal in one factor or the other.
pub fn pyramid() -> ProductBasisSet {
    let dims = BipartiteDims::new(3, 3).expect("3x3 is valid");
    let h = 0.5 * (1.0 + 5f64.sqrt()).sqrt();
    let norm = 2.0 / (5.0 + 5f64.sqrt()).sqrt();
    let v = |j: usize| {
        let angle = std::f64::consts::TAU * j as f64 / 5.0;
        vec![
            Complex64::new(norm * angle.cos(), 0.0),
            Complex64::new(norm * angle.sin(), 0.0),
            Complex64::new(norm * h, 0.0),
        ]
    };
    let pairs = (0..5).map(|j| (v(j), v((2 * j) % 5))).collect();
    ProductBasisSet::new(dims, pairs, "pyramid").expect("pyramid basis is orthonormal")
}

/// A density operator on a bipartite system, validated on construction.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
    dims: BipartiteDims,
    label: String,
}

impl DensityOperator {
    /// Checks shape, Hermiticity (`1e-10`), unit trace (`1e-12`), and
    /// positive semidefiniteness (`-1e-10` on the smallest eigenvalue).
    pub fn new(matrix: ComplexMatrix, dims: BipartiteDims) -> Result<Self> {
        let n = dims.total();
        if !matrix.is_square() || matrix.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "state on {dims} must be {n}x{n}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_hermitian(1e-10) {
            return Err(Error::InvalidState(format!(
                "not Hermitian (defect {:.3e})",
                matrix.hermiticity_defect()
            )));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > 1e-12 || trace.im.abs() > 1e-12 {
            return Err(Error::InvalidState(format!("trace {trace} is not 1")));
        }
        if !is_psd(&matrix, 1e-10)? {
            return Err(Error::InvalidState(
                "negative eigenvalue beyond tolerance".into(),
            ));
        }
        Ok(Self {
            matrix,
            dims,
            label: format!("state({dims})"),
        })
    }

    /// Replaces the default label with a descriptive one.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// The normalized projector onto the orthogonal complement of a product
/// basis: `rho = (I - P) / (n - k)`.
///
/// For an unextendable basis this is a PPT entangled state. Fails with
/// [`Error::BasisComplete`] when the basis already spans everything.
pub fn upb_complement_state(basis: &ProductBasisSet) -> Result<DensityOperator> {
    if basis.is_complete() {
        return Err(Error::BasisComplete);
    }
    let n = basis.dims().total();
    let k = basis.len();
    let scale = 1.0 / (n - k) as f64;
    let complement = &ComplexMatrix::identity(n) - &basis.span_projector();
    Ok(
        DensityOperator::new(complement.scale_re(scale), basis.dims())?
            .with_label(format!("complement({})", basis.label())),
    )
}

/// Minimizes the total squared overlap `sum_i |<a_i|x>|^2 |<b_i|y>|^2` over
/// product states `x (x) y` by alternating exact eigenvector steps.
///
/// A minimum bounded away from zero certifies unextendability: every product
/// state has significant overlap with the span of the basis. For a complete
/// basis the objective is identically 1.
pub fn unextendability_seesaw(
    basis: &ProductBasisSet,
    opts: &SeesawOptions,
) -> Result<SeesawOutcome> {
    let dims = basis.dims();
    let mut rng = rng_from_seed(opts.seed);
    let mut best: Option<SeesawOutcome> = None;

    for _ in 0..opts.restarts {
        let mut x = random_unit_vector(&mut rng, dims.dim_a());
        let mut y = vec![Complex64::new(0.0, 0.0); dims.dim_b()];
        let mut history = Vec::new();
        let mut current = f64::INFINITY;

        for _ in 0..opts.iterations {
            // y-step: minimize sum_i w_i |<b_i|y>|^2 with w_i = |<a_i|x>|^2.
            let (value_y, new_y) = min_eigenpair(&weighted_projector_sum(basis, &x, true))?;
            y = new_y;
            history.push(value_y);

            // x-step: same with the roles of the factors exchanged.
            let (value_x, new_x) = min_eigenpair(&weighted_projector_sum(basis, &y, false))?;
            x = new_x;
            history.push(value_x);

            if (current - value_x).abs() < opts.improvement_tol {
                break;
            }
            current = value_x;
        }

        let value = overlap_objective(basis, &x, &y);
        if best.as_ref().is_none_or(|b| value < b.min_value) {
            best = Some(SeesawOutcome {
                min_value: value,
                x,
                y,
                history,
            });
        }
    }
    Ok(best.expect("at least one restart"))
}

/// `sum_i |<a_i|x>|^2 |b_i><b_i|` when `on_b`, else
/// `sum_i |<b_i|y>|^2 |a_i><a_i|` (argument plays the fixed factor).
fn weighted_projector_sum(
    basis: &ProductBasisSet,
    fixed: &[Complex64],
    on_b: bool,
) -> ComplexMatrix {
    let dim = if on_b {
        basis.dims().dim_b()
    } else {
        basis.dims().dim_a()
    };
    let mut m = ComplexMatrix::zeros(dim, dim);
    for k in 0..basis.len() {
        let (a, b) = basis.pair(k);
        let (weight_side, proj_side) = if on_b { (a, b) } else { (b, a) };
        let w = vdot(weight_side, fixed).norm_sqr();
        if w == 0.0 {
            continue;
        }
        m = &m + &outer_product(proj_side, proj_side).scale_re(w);
    }
    m.hermitian_part()
}

/// The exact objective `sum_i |<a_i|x>|^2 |<b_i|y>|^2`.
fn overlap_objective(basis: &ProductBasisSet, x: &[Complex64], y: &[Complex64]) -> f64 {
    (0..basis.len())
        .map(|k| {
            let (a, b) = basis.pair(k);
            vdot(a, x).norm_sqr() * vdot(b, y).norm_sqr()
        })
        .sum()
}
