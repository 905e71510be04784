use num_complex::Complex64;

use super::{ComplexMatrix, HERMITIAN_TOL};
use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;
/// Off-diagonal Frobenius mass, relative to `max(1, ‖M‖_F)`, at which the
/// iteration stops.
const OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Eigenvalues closer than this are treated as tied when ordering.
const TIE_TOL: f64 = 1e-10;
/// Components below this magnitude are skipped by the phase and tie rules.
const NONZERO_TOL: f64 = 1e-8;

/// Real eigenvalues in descending order with orthonormal eigenvectors.
///
/// `vectors()[k]` belongs to `values()[k]`. Each eigenvector has its first
/// component of magnitude above `1e-8` real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    vectors: Vec<Vec<Complex64>>,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn vector(&self, k: usize) -> &[Complex64] {
        &self.vectors[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue and its eigenvector.
    pub fn top(&self) -> (f64, &[Complex64]) {
        (self.values[0], &self.vectors[0])
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<Vec<Complex64>>) {
        (self.values, self.vectors)
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// Each rotation first removes the phase of the pivot `m[p][q]` with a
/// diagonal unitary, then annihilates the now real pivot with an ordinary
/// plane rotation. Sweeps repeat until the off-diagonal Frobenius mass drops
/// below `1e-14 · max(1, ‖M‖_F)`.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<Spectrum> {
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let n = m.dim();
    let mut a = m.clone();
    super::symmetrize(&mut a);
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_mass(&a) < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_mass(&a) >= threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut pairs: Vec<(f64, Vec<Complex64>)> = (0..n)
        .map(|k| {
            let mut col = v.column(k);
            fix_phase(&mut col);
            (a[(k, k)].re, col)
        })
        .collect();
    sort_descending(&mut pairs);
    let (values, vectors) = pairs.into_iter().unzip();
    Ok(Spectrum { values, vectors })
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }

    // Phase step: D = diag(.., conj(e) at q, ..) makes a[p][q] = r.
    let e = apq / r;
    let ec = e.conj();
    for k in 0..n {
        a[(k, q)] *= ec;
    }
    for k in 0..n {
        a[(q, k)] *= e;
    }
    for k in 0..n {
        v[(k, q)] *= ec;
    }

    // Real plane rotation on (p, q).
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * s;
        a[(k, q)] = akp * s + akq * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * s;
        a[(q, k)] = apk * s + aqk * c;
    }
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * s;
        v[(k, q)] = vkp * s + vkq * c;
    }

    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

fn first_significant(v: &[Complex64]) -> usize {
    v.iter()
        .position(|z| z.norm() > NONZERO_TOL)
        .unwrap_or(v.len())
}

/// Rotates `v` so that its first significant component is real positive.
pub(crate) fn fix_phase(v: &mut [Complex64]) {
    let k = first_significant(v);
    if k == v.len() {
        return;
    }
    let phase = v[k].conj() / v[k].norm();
    for z in v.iter_mut() {
        *z *= phase;
    }
    v[k] = Complex64::new(v[k].norm(), 0.0);
}

fn sort_descending(pairs: &mut [(f64, Vec<Complex64>)]) {
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[start].0 - pairs[end].0 <= TIE_TOL {
            end += 1;
        }
        pairs[start..end].sort_by_key(|(_, vec)| first_significant(vec));
        start = end;
    }
}
