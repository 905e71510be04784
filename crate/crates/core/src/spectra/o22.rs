//! Closed-form spectrum and eigenvectors of the CH operator.
//!
//! In the Bell basis the operator splits into two 2×2 blocks, one on
//! `{φ⁺, ψ⁻}` and one on `{ψ⁺, φ⁻}`, so every eigenvector is a real
//! combination of two Bell states and therefore maximally entangled.

use num_complex::Complex64;

use super::state::{Basis, TwoQubitState};
use crate::linalg::{conjugate_by, hermitian_eigen};
use crate::operators::{bell_basis, build_o22};
use crate::{Error, Result};

/// Below this magnitude the sine combination in `F±` is treated as zero.
pub const SINGULAR_TOL: f64 = 1e-8;

/// `½(±√(1 ± sin(α-β) sin(γ-δ)) - 1)`, descending.
pub fn o22_eigenvalues(alpha: f64, beta: f64, gamma: f64, delta: f64) -> [f64; 4] {
    let s = (alpha - beta).sin() * (gamma - delta).sin();
    let rp = (1.0 + s).max(0.0).sqrt();
    let rm = (1.0 - s).max(0.0).sqrt();
    let mut out = [
        0.5 * (rp - 1.0),
        0.5 * (rm - 1.0),
        0.5 * (-rm - 1.0),
        0.5 * (-rp - 1.0),
    ];
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// Maximal eigenvalue of the CH operator for the one-parameter family
/// `α = 0, β = 2θ, γ = θ, δ = 3θ`: `½(√((3 - cos 4θ)/2) - 1)`.
pub fn cabello_bound(theta: f64) -> f64 {
    0.5 * (((3.0 - (4.0 * theta).cos()) / 2.0).sqrt() - 1.0)
}

/// Sine and cosine combinations shared by the eigenvector formulas.
fn combos(a: f64, b: f64, c: f64, d: f64) -> (f64, f64, f64) {
    let cos_sum = (a - d).cos() + (a - c).cos() - (b - d).cos() + (b - c).cos();
    let sin_sum = (a - d).sin() + (a - c).sin() - (b - d).sin() + (b - c).sin();
    let s = (a - b).sin() * (c - d).sin();
    (cos_sum, sin_sum, s)
}

/// Coefficient `F±(α,β,γ,δ) = -(C ± 2√(1 - sin(α-β) sin(γ-δ))) / S` with
/// `C = cos(α-δ) + cos(α-γ) - cos(β-δ) + cos(β-γ)` and
/// `S = sin(α-δ) + sin(α-γ) - sin(β-δ) + sin(β-γ)`.
///
/// Returns `None` when `|S| ≤ 1e-8`.
pub fn f_coefficient(sign: f64, a: f64, b: f64, c: f64, d: f64) -> Option<f64> {
    let (cos_sum, sin_sum, s) = combos(a, b, c, d);
    if sin_sum.abs() <= SINGULAR_TOL {
        return None;
    }
    let r = 2.0 * (1.0 - s).max(0.0).sqrt();
    Some(-(cos_sum + sign * r) / sin_sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum O22Label {
    /// `∝ F⁺(α,β,-γ,-δ)|ψ⁺⟩ + |φ⁻⟩`
    NuPlus,
    /// `∝ F⁻(α,β,-γ,-δ)|ψ⁺⟩ + |φ⁻⟩`
    NuMinus,
    /// `∝ F⁺(α,β,γ,δ)|φ⁺⟩ + |ψ⁻⟩`
    MuPlus,
    /// `∝ F⁻(α,β,γ,δ)|φ⁺⟩ + |ψ⁻⟩`
    MuMinus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct O22Eigenstate {
    pub label: O22Label,
    pub value: f64,
    /// Bell-basis amplitudes.
    pub state: TwoQubitState,
}

fn bell_combination(f: f64, first: usize, second: usize) -> TwoQubitState {
    let mut amps = [Complex64::new(0.0, 0.0); 4];
    amps[first] = Complex64::new(f, 0.0);
    amps[second] = Complex64::new(1.0, 0.0);
    TwoQubitState::normalized(amps, Basis::Bell).expect("nonzero combination")
}

/// Closed-form eigenvectors, sorted by descending eigenvalue.
///
/// `μ±` has eigenvalue `-½ ± ½√(1 - s)` and `ν±` has `-½ ∓ ½√(1 + s)`,
/// where `s = sin(α-β) sin(γ-δ)`. Fails with
/// [`Error::DegenerateConfiguration`] when either sine combination is
/// singular; use [`o22_eigenstates`] for an automatic fallback.
pub fn o22_eigenvectors(
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
) -> Result<[O22Eigenstate; 4]> {
    let s = (alpha - beta).sin() * (gamma - delta).sin();
    let mu = |sign: f64| f_coefficient(sign, alpha, beta, gamma, delta);
    let nu = |sign: f64| f_coefficient(sign, alpha, beta, -gamma, -delta);
    let (Some(mu_p), Some(mu_m), Some(nu_p), Some(nu_m)) = (mu(1.0), mu(-1.0), nu(1.0), nu(-1.0))
    else {
        return Err(Error::DegenerateConfiguration);
    };
    let rm = 0.5 * (1.0 - s).max(0.0).sqrt();
    let rp = 0.5 * (1.0 + s).max(0.0).sqrt();

    // Bell indices: φ⁺ = 0, ψ⁺ = 1, ψ⁻ = 2, φ⁻ = 3.
    let mut states = [
        O22Eigenstate {
            label: O22Label::MuPlus,
            value: -0.5 + rm,
            state: bell_combination(mu_p, 0, 2),
        },
        O22Eigenstate {
            label: O22Label::MuMinus,
            value: -0.5 - rm,
            state: bell_combination(mu_m, 0, 2),
        },
        O22Eigenstate {
            label: O22Label::NuPlus,
            value: -0.5 - rp,
            state: bell_combination(nu_p, 1, 3),
        },
        O22Eigenstate {
            label: O22Label::NuMinus,
            value: -0.5 + rp,
            state: bell_combination(nu_m, 1, 3),
        },
    ];
    states.sort_by(|a, b| b.value.total_cmp(&a.value));
    Ok(states)
}

/// Eigenpairs of the CH operator in the Bell basis, descending.
#[derive(Debug, Clone, PartialEq)]
pub struct O22Eigenstates {
    pub pairs: Vec<(f64, TwoQubitState)>,
    /// `true` when the closed form was singular and the numeric
    /// eigensolver supplied the vectors.
    pub fallback: bool,
}

/// Closed-form eigenpairs, or the Jacobi eigensolver where the closed form
/// is singular.
pub fn o22_eigenstates(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<O22Eigenstates> {
    match o22_eigenvectors(alpha, beta, gamma, delta) {
        Ok(states) => Ok(O22Eigenstates {
            pairs: states.into_iter().map(|e| (e.value, e.state)).collect(),
            fallback: false,
        }),
        Err(Error::DegenerateConfiguration) => {
            let o = conjugate_by(&build_o22(alpha, beta, gamma, delta), &bell_basis())?;
            let spectrum = hermitian_eigen(&o)?;
            let pairs = spectrum
                .values()
                .iter()
                .zip(spectrum.vectors())
                .map(|(&v, vec)| {
                    let amps = [vec[0], vec[1], vec[2], vec[3]];
                    TwoQubitState::normalized(amps, Basis::Bell).map(|s| (v, s))
                })
                .collect::<Result<_>>()?;
            Ok(O22Eigenstates {
                pairs,
                fallback: true,
            })
        }
        Err(e) => Err(e),
    }
}
