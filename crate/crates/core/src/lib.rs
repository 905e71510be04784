//! Exact quantum bounds on Bell-type inequalities.
//!
//! Classical probabilities in a Bell-type inequality are replaced by
//! projectors built from measurement directions in the x–z plane. The
//! resulting sum is a self-adjoint operator on two qubits, and its extreme
//! eigenvalues bound every quantum expectation value of the expression.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: dense complex matrices, Kronecker products, a cyclic Jacobi
//!   eigensolver for Hermitian matrices and the trigonometric cubic solver.
//! * [`operators`]: projectors, the CH operator, the `I_mm` family and the
//!   Bell basis.
//! * [`classical`]: exhaustive enumeration of deterministic strategies
//!   (vertices of the correlation polytope).
//! * [`spectra`]: closed-form CH spectrum, sweeps, violation maximization
//!   and concurrence.
//! * [`stateprep`]: local SU(2) preparation and multiport decomposition.

pub mod classical;
mod error;
pub mod linalg;
pub mod operators;
pub mod spectra;
pub mod stateprep;

pub use error::{Error, Result};

pub use classical::{classical_range, evaluate_strategy, ClassicalRange, DeterministicStrategy};
pub use linalg::{
    cardano_roots, conjugate_by, hermitian_eigen, kron, ComplexMatrix, CubicCoeffs, Spectrum,
};
pub use num_complex::Complex64;
pub use operators::{
    bell_basis, build_o22, build_omm, imm_coeffs, o33_explicit, q_joint, q_single, sigma,
    symmetric_setup, AngleSetup, InequalityCoeffs, Side,
};
pub use spectra::{
    cabello_bound, concurrence, grid, max_curves, max_violation, maximize_o22, norm_bound,
    o22_eigenstates, o22_eigenvalues, o22_eigenvectors, sweep, symmetric_operator, Basis,
    MaxViolation, O22Eigenstate, O22Eigenstates, O22Label, O22Search, SweepPoint, TwoQubitState,
};
pub use stateprep::{
    apply_local, multiport_forward, multiport_solve, su2, MultiportParams, Su2Params,
};
