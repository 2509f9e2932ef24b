//! Simulation of tripartite qubit states observed from uniformly accelerated
//! frames.
//!
//! The crate builds the W, GHZ and GHZ-like states, applies the fermionic
//! single-mode transformation into the two Rindler wedges, reduces to the
//! region-I (fermion) and region-II (anti-fermion) density operators, and
//! evaluates fidelity, dense-coding capacity and negativity on the results.
//! A companion module carries the closed-form expressions these channels are
//! usually quoted as, transcribed verbatim (misprints included) so they can
//! be audited entry-by-entry against the first-principles pipeline.
//!
//! Everything is dense `f64` linear algebra over at most 64x64 matrices; all
//! operations are pure functions over immutable values.

pub mod closed_form;
pub mod density;
pub mod eigen;
mod error;
pub mod matrix;
pub mod measures;
pub mod rindler;
pub mod rng;
pub mod state;

pub use closed_form::{audit, ClosedFormId, ClosedFormKind, DiscrepancyReport};
pub use density::DensityMatrix;
pub use eigen::{hermitian_eig, EigenDecomposition};
pub use error::Error;
pub use matrix::ComplexMatrix;
pub use measures::{CapacitySummary, NegativitySummary};
pub use rindler::{AccelerationTriple, RindlerRegion, StateFamily};
pub use rng::SplitMix64;
pub use state::PureState;

/// Complex scalar used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;

/// Relative Hermiticity tolerance for density operators and eigensolver input.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Residual and orthonormality tolerance for the eigensolver.
pub const EIGEN_TOL: f64 = 1e-10;
/// Default equality tolerance for traces, norms and entry comparisons.
pub const EQUALITY_TOL: f64 = 1e-12;
/// Eigenvalues in `[-EIGENVALUE_FLOOR, 0)` are treated as exact zeros by the
/// entropy and negativity measures.
pub const EIGENVALUE_FLOOR: f64 = 1e-12;
