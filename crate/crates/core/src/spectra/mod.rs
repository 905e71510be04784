//! Quantum bounds from operator spectra.
//!
//! The largest eigenvalue of a Bell operator is the largest value any
//! quantum state can give the expression; for the `I_mm ≤ 0` family it is
//! directly the size of the violation.

mod o22;
mod state;
mod sweep;

pub use o22::{
    cabello_bound, f_coefficient, o22_eigenstates, o22_eigenvalues, o22_eigenvectors,
    O22Eigenstate, O22Eigenstates, O22Label,
};
pub use state::{concurrence, Basis, TwoQubitState, NORM_TOL};
pub use sweep::{
    grid, max_curves, max_violation, maximize_o22, sweep, symmetric_operator, MaxViolation,
    O22Search, SweepPoint, PRESCAN_POINTS, THETA_TOL,
};

use crate::linalg::{hermitian_eigen, ComplexMatrix};
use crate::Result;

/// Largest eigenvalue of a Hermitian operator.
pub fn norm_bound(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigen(m)?.max())
}
