use super::{ComplexMatrix, HERMITIAN_TOL};
use crate::{Error, Result};

/// `|u|` at or below which the cubic is treated as having a triple root.
const DEGENERATE_U: f64 = 1e-14;

/// Monic cubic `λ³ + bλ² + cλ + d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CubicCoeffs {
    pub fn new(b: f64, c: f64, d: f64) -> Self {
        Self { b, c, d }
    }

    /// Characteristic polynomial `det(λ - o)` of a 3×3 Hermitian block:
    /// `b = -Tr o`, `c = (Tr²o - Tr o²) / 2`, `d = -det o`.
    pub fn from_hermitian_block(o: &ComplexMatrix) -> Result<Self> {
        if o.dim() != 3 {
            return Err(Error::DimMismatch {
                expected: 3,
                found: o.dim(),
            });
        }
        let deviation = o.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = o.trace().re;
        let tr_sq = (o * o).trace().re;
        Ok(Self {
            b: -tr,
            c: 0.5 * (tr * tr - tr_sq),
            d: -o.determinant().re,
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.b) * x + self.c) * x + self.d
    }

    /// `u = (3c - b²) / 9`; negative whenever the three roots are real and
    /// not all equal.
    pub fn u(&self) -> f64 {
        (3.0 * self.c - self.b * self.b) / 9.0
    }
}

/// Real roots of a cubic with three real roots, in descending order.
///
/// With `u = (3c - b²)/9` and
/// `cos ξ = (9bc - 2b³ - 27d) / (54 · u · √|u|)` the roots are
///
/// ```text
/// λ₂    = -2√|u| cos(ξ/3) - b/3
/// λ₃,₄  = √|u| (cos(ξ/3) ± √3 sin(ξ/3)) - b/3
/// ```
///
/// `cos ξ` is clamped to `[-1, 1]` before taking the arccosine. Cubics with
/// a single real root are outside the domain of this routine.
pub fn cardano_roots(coeffs: CubicCoeffs) -> Result<[f64; 3]> {
    let CubicCoeffs { b, c, d } = coeffs;
    let u = coeffs.u();
    let shift = -b / 3.0;
    if u.abs() <= DEGENERATE_U {
        return Err(Error::DegenerateCubic { root: shift });
    }
    let r = u.abs().sqrt();
    let cos_xi = ((9.0 * b * c - 2.0 * b * b * b - 27.0 * d) / (54.0 * u * r)).clamp(-1.0, 1.0);
    let third = cos_xi.acos() / 3.0;
    let (sin3, cos3) = third.sin_cos();
    let sqrt3 = 3.0_f64.sqrt();

    let mut roots = [
        -2.0 * r * cos3 + shift,
        r * (cos3 + sqrt3 * sin3) + shift,
        r * (cos3 - sqrt3 * sin3) + shift,
    ];
    roots.sort_by(|x, y| y.total_cmp(x));
    Ok(roots)
}
