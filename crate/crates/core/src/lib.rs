//! Positive-map entanglement witnesses over small bipartite systems.
//!
//! The crate builds positive-but-not-completely-positive maps (the two Choi
//! variants and their Cho-Kye generalization), extends them with inner and
//! outer automorphisms `X -> A X A^dag`, and uses them to detect the
//! entanglement of PPT states — in particular the bound entangled states
//! obtained from unextendable product bases ("tiles" and "pyramid").
//!
//! The working pieces:
//!
//! - [`linalg`]: dense complex matrices, a cyclic Jacobi Hermitian
//!   eigensolver, and the partial transpose;
//! - [`maps`]: the map representation ([`MapSpec`]), the families, Choi
//!   matrices, Kraus extraction, automorphism extensions, and the
//!   positivity seesaw;
//! - [`upb`]: unextendable product bases, their complement states, and the
//!   unextendability seesaw;
//! - [`witness`]: `(id (x) phi)` extension, PPT checks, rotation sweeps over
//!   `phi . ad(U(theta))`, and detection-interval extraction;
//! - [`verify`]: exact identities connecting the families, used as built-in
//!   self-tests;
//! - [`random`]: seeded generators for reproducible stochastic searches.
//!
//! Everything is deterministic: stochastic routines take explicit seeds and
//! sweeps evaluate a pure function on a fixed grid, so identical inputs give
//! identical outputs bit-for-bit.

pub mod error;
pub mod linalg;
pub mod maps;
pub mod random;
pub mod upb;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use linalg::{BipartiteDims, ComplexMatrix, EigenDecomposition};
pub use maps::{ChoKyeParams, MapSpec, OperatorFactor, SeesawOptions, SeesawOutcome};
pub use upb::{DensityOperator, ProductBasisSet};
pub use witness::{DetectionReport, SweepConfig, SweepCurve, SweepPoint};

/// Complex scalar used throughout.
pub use num_complex::Complex64;
