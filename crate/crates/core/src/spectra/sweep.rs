//! Parameter sweeps and violation maximization over the symmetric setup.

use std::f64::consts::TAU;

use rayon::prelude::*;

use super::o22::o22_eigenvalues;
use super::state::{concurrence, Basis, TwoQubitState};
use crate::linalg::{conjugate_by, hermitian_eigen, inner, ComplexMatrix, Spectrum};
use crate::operators::{
    bell_basis, build_omm, build_omm_symmetric_derivative, imm_coeffs, symmetric_setup,
    InequalityCoeffs,
};
use crate::{Error, Result};

/// Grid points scanned before the golden-section search.
pub const PRESCAN_POINTS: usize = 512;
/// Final bracket width of the golden-section search.
pub const THETA_TOL: f64 = 1e-10;

/// Eigenvalues of the symmetric `I_mm` operator at one angle.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub theta: f64,
    /// Descending.
    pub eigenvalues: [f64; 4],
    /// Concurrence of the eigenvector of the largest eigenvalue.
    pub max_entanglement: f64,
}

/// Symmetric-setup operator `O_mm(θ)` in the computational basis.
pub fn symmetric_operator(m: usize, theta: f64) -> Result<ComplexMatrix> {
    build_omm(&imm_coeffs(m)?, &symmetric_setup(m, theta))
}

fn check_range(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::InvalidRange(format!("need finite lo < hi, got ({lo}, {hi})")));
    }
    Ok(())
}

/// `steps` evenly spaced angles from `lo` to `hi` inclusive.
pub fn grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    check_range(lo, hi)?;
    if steps < 2 {
        return Err(Error::InvalidRange(format!("need at least 2 steps, got {steps}")));
    }
    let h = (hi - lo) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| if k == steps - 1 { hi } else { lo + k as f64 * h })
        .collect())
}

fn bell_spectrum(coeffs: &InequalityCoeffs, theta: f64) -> Result<Spectrum> {
    let o = build_omm(coeffs, &symmetric_setup(coeffs.m, theta))?;
    hermitian_eigen(&conjugate_by(&o, &bell_basis())?)
}

fn state_of(vector: &[num_complex::Complex64]) -> Result<TwoQubitState> {
    TwoQubitState::normalized([vector[0], vector[1], vector[2], vector[3]], Basis::Bell)
}

/// Spectrum of the symmetric `I_mm` operator on an inclusive angle grid.
/// Points are evaluated in parallel and returned in grid order.
pub fn sweep(m: usize, theta_min: f64, theta_max: f64, steps: usize) -> Result<Vec<SweepPoint>> {
    let coeffs = imm_coeffs(m)?;
    let thetas = grid(theta_min, theta_max, steps)?;
    thetas
        .par_iter()
        .map(|&theta| {
            let spectrum = bell_spectrum(&coeffs, theta)?;
            let v = spectrum.values();
            Ok(SweepPoint {
                theta,
                eigenvalues: [v[0], v[1], v[2], v[3]],
                max_entanglement: concurrence(&state_of(spectrum.vector(0))?),
            })
        })
        .collect()
}

/// Largest eigenvalue for each `m` in `ms` on a shared grid: one row per
/// angle, one column per `m`.
pub fn max_curves(
    ms: &[usize],
    theta_min: f64,
    theta_max: f64,
    steps: usize,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let coeffs = ms.iter().map(|&m| imm_coeffs(m)).collect::<Result<Vec<_>>>()?;
    let thetas = grid(theta_min, theta_max, steps)?;
    thetas
        .par_iter()
        .map(|&theta| {
            let tops = coeffs
                .iter()
                .map(|c| {
                    let o = build_omm(c, &symmetric_setup(c.m, theta))?;
                    Ok(hermitian_eigen(&o)?.max())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((theta, tops))
        })
        .collect()
}

/// Optimum of the largest eigenvalue over `θ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxViolation {
    pub theta: f64,
    pub value: f64,
    /// Top eigenvector, Bell basis.
    pub state: TwoQubitState,
    pub concurrence: f64,
}

/// Maximizes the largest eigenvalue of the symmetric `I_mm` operator over
/// `θ ∈ bracket`.
///
/// A 512-point pre-scan picks the best sub-bracket, golden-section search
/// narrows it to `1e-10`, and the result is polished by bisection on the
/// derivative `⟨v|dO/dθ|v⟩` of the top eigenvalue, which resolves the
/// optimum well below the flat-top limit of comparing eigenvalues.
pub fn max_violation(m: usize, bracket: (f64, f64)) -> Result<MaxViolation> {
    let (lo, hi) = bracket;
    check_range(lo, hi)?;
    let coeffs = imm_coeffs(m)?;
    let top = |theta: f64| -> Result<f64> { Ok(hermitian_eigen(&build_omm(&coeffs, &symmetric_setup(m, theta))?)?.max()) };

    let thetas = grid(lo, hi, PRESCAN_POINTS)?;
    let values = thetas
        .par_iter()
        .map(|&t| top(t))
        .collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .fold(0, |best, (k, &v)| if v > values[best] { k } else { best });
    let sub_lo = thetas[best.saturating_sub(1)];
    let sub_hi = thetas[(best + 1).min(thetas.len() - 1)];

    let golden = golden_section_max(&top, sub_lo, sub_hi, THETA_TOL)?;
    let theta = polish(&coeffs, golden, sub_lo, sub_hi)?.unwrap_or(golden);

    let spectrum = bell_spectrum(&coeffs, theta)?;
    let (value, vector) = spectrum.top();
    let state = state_of(vector)?;
    Ok(MaxViolation {
        theta,
        value,
        concurrence: concurrence(&state),
        state,
    })
}

fn golden_section_max(
    f: &impl Fn(f64) -> Result<f64>,
    mut a: f64,
    mut b: f64,
    tol: f64,
) -> Result<f64> {
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

/// `d λ_max / dθ` by the Hellmann–Feynman relation.
fn top_derivative(coeffs: &InequalityCoeffs, theta: f64) -> Result<f64> {
    let o = build_omm(coeffs, &symmetric_setup(coeffs.m, theta))?;
    let spectrum = hermitian_eigen(&o)?;
    let v = spectrum.vector(0);
    let dv = build_omm_symmetric_derivative(coeffs, theta).mul_vec(v)?;
    Ok(inner(v, &dv).re)
}

/// Bisection on the derivative sign around `theta`, staying in `[lo, hi]`.
/// Returns `None` if no sign change brackets `theta`.
fn polish(coeffs: &InequalityCoeffs, theta: f64, lo: f64, hi: f64) -> Result<Option<f64>> {
    let mut h = 1e-7;
    let (mut a, mut b) = loop {
        let a = (theta - h).max(lo);
        let b = (theta + h).min(hi);
        if top_derivative(coeffs, a)? > 0.0 && top_derivative(coeffs, b)? < 0.0 {
            break (a, b);
        }
        if a == lo && b == hi {
            return Ok(None);
        }
        h *= 10.0;
    };
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if top_derivative(coeffs, mid)? > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(Some(0.5 * (a + b)))
}

/// Result of maximizing the closed-form CH spectrum over all four angles.
#[derive(Debug, Clone, PartialEq)]
pub struct O22Search {
    /// `(α, β, γ, δ)` at the optimum.
    pub angles: [f64; 4],
    pub value: f64,
    /// Largest value seen at any evaluated point, grid or refinement.
    pub max_seen: f64,
    pub evaluations: u64,
}

fn o22_top(angles: [f64; 4]) -> f64 {
    o22_eigenvalues(angles[0], angles[1], angles[2], angles[3])[0]
}

/// Maximizes the largest CH eigenvalue over `[0, 2π)⁴`: a `grid⁴` scan
/// followed by a compass search from the best grid point.
pub fn maximize_o22(grid: usize) -> Result<O22Search> {
    if grid < 2 {
        return Err(Error::InvalidRange(format!("need grid >= 2, got {grid}")));
    }
    let h = TAU / grid as f64;
    let (best_value, best_idx) = (0..grid)
        .into_par_iter()
        .map(|i| {
            let mut best = (f64::NEG_INFINITY, [0usize; 4]);
            for j in 0..grid {
                for k in 0..grid {
                    for l in 0..grid {
                        let v = o22_top([i, j, k, l].map(|n| n as f64 * h));
                        if v > best.0 {
                            best = (v, [i, j, k, l]);
                        }
                    }
                }
            }
            best
        })
        .reduce(
            || (f64::NEG_INFINITY, [0usize; 4]),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );

    let mut x = best_idx.map(|n| n as f64 * h);
    let mut fx = best_value;
    let mut max_seen = best_value;
    let mut evaluations = (grid as u64).pow(4);
    let mut step = h;
    while step > 1e-12 {
        let mut improved = false;
        for axis in 0..4 {
            for dir in [1.0, -1.0] {
                let mut y = x;
                y[axis] += dir * step;
                let fy = o22_top(y);
                evaluations += 1;
                max_seen = max_seen.max(fy);
                if fy > fx {
                    x = y;
                    fx = fy;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    Ok(O22Search {
        angles: x,
        value: fx,
        max_seen,
        evaluations,
    })
}
