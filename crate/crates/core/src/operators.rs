//! Quantum operators associated with Bell-type inequalities.
//!
//! A measurement along angle `θ` in the x–z plane is the observable
//! `σ(θ) = [[cos θ, sin θ], [sin θ, -cos θ]]`; the probability of the
//! outcome "one" becomes the projector `½(𝕀 + σ(θ))`. Marginals act on one
//! qubit, joint probabilities are tensor products of two projectors.
//!
//! Operators are built in the computational basis `|00⟩, |01⟩, |10⟩, |11⟩`
//! (left particle first) and moved to the Bell basis with
//! [`crate::linalg::conjugate_by`] and [`bell_basis`].

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::linalg::{kron, ComplexMatrix};
use crate::{Error, Result};

/// Which particle a single-party projector acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Measurement angles (radians) for the left and right particle.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSetup {
    pub left: Vec<f64>,
    pub right: Vec<f64>,
}

impl AngleSetup {
    pub fn new(left: Vec<f64>, right: Vec<f64>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::DimMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { left, right })
    }
}

/// Angles `{0, θ, 2θ, …, (m-1)θ}` on both sides.
pub fn symmetric_setup(m: usize, theta: f64) -> AngleSetup {
    let angles: Vec<f64> = (0..m).map(|k| k as f64 * theta).collect();
    AngleSetup {
        left: angles.clone(),
        right: angles,
    }
}

/// Integer coefficients of a two-party Bell-type expression
///
/// ```text
/// Σ joint[i][j]·P(A_i B_j) + Σ marg_left[i]·P(A_i) + Σ marg_right[j]·P(B_j)
/// ```
///
/// with 0-based indices, together with its classical bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCoeffs {
    pub m: usize,
    pub joint: Vec<Vec<i64>>,
    pub marg_left: Vec<i64>,
    pub marg_right: Vec<i64>,
    pub upper: i64,
    pub lower: Option<i64>,
}

impl InequalityCoeffs {
    /// Checks that every coefficient table has `m` entries per side.
    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        let mismatch = |found: usize| Error::DimMismatch { expected: m, found };
        if self.joint.len() != m {
            return Err(mismatch(self.joint.len()));
        }
        if let Some(row) = self.joint.iter().find(|row| row.len() != m) {
            return Err(mismatch(row.len()));
        }
        if self.marg_left.len() != m {
            return Err(mismatch(self.marg_left.len()));
        }
        if self.marg_right.len() != m {
            return Err(mismatch(self.marg_right.len()));
        }
        Ok(())
    }

    pub fn positive_joint_sum(&self) -> i64 {
        self.joint.iter().flatten().filter(|&&c| c > 0).sum()
    }

    pub fn negative_joint_count(&self) -> usize {
        self.joint.iter().flatten().filter(|&&c| c < 0).count()
    }
}

/// Coefficients of the `I_mm ≤ 0` family:
///
/// ```text
/// Σ_{j=1..m} Σ_{i=1..m-j+1} P(A_i B_j) - Σ_{i=1..m-1} P(A_{i+1} B_{m-i+1})
///     - Σ_{i=1..m} (m-i) P(B_i) - P(A_1)
/// ```
///
/// `m = 2` is the CH inequality, which also carries the lower bound `-1`.
pub fn imm_coeffs(m: usize) -> Result<InequalityCoeffs> {
    if m < 2 {
        return Err(Error::InvalidM(m));
    }
    let mut joint = vec![vec![0_i64; m]; m];
    // 1-based (i, j) from the summation bounds, stored 0-based.
    for j in 1..=m {
        for i in 1..=m - j + 1 {
            joint[i - 1][j - 1] += 1;
        }
    }
    for i in 1..m {
        joint[i][m - i] -= 1;
    }
    let marg_right = (1..=m).map(|i| -((m - i) as i64)).collect();
    let mut marg_left = vec![0; m];
    marg_left[0] = -1;
    Ok(InequalityCoeffs {
        m,
        joint,
        marg_left,
        marg_right,
        upper: 0,
        lower: (m == 2).then_some(-1),
    })
}

/// `σ(θ) = [[cos θ, sin θ], [sin θ, -cos θ]]`.
pub fn sigma(theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_real_rows([[c, s], [s, -c]])
}

/// `½(𝕀₂ + σ(θ))`, the projector onto the "one" outcome along `θ`.
pub fn projector(theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_real_rows([[0.5 * (1.0 + c), 0.5 * s], [0.5 * s, 0.5 * (1.0 - c)]])
}

/// `d/dθ ½(𝕀₂ + σ(θ))`.
pub(crate) fn projector_derivative(theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    ComplexMatrix::from_real_rows([[-0.5 * s, 0.5 * c], [0.5 * c, 0.5 * s]])
}

/// Single-party projector on the two-qubit space.
pub fn q_single(side: Side, theta: f64) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    match side {
        Side::Left => kron(&projector(theta), &id),
        Side::Right => kron(&id, &projector(theta)),
    }
}

/// Joint projector `½(𝕀+σ(θ_L)) ⊗ ½(𝕀+σ(θ_R))`.
pub fn q_joint(theta_left: f64, theta_right: f64) -> ComplexMatrix {
    kron(&projector(theta_left), &projector(theta_right))
}

/// CH operator
/// `q(α,γ) + q(α,δ) + q(β,γ) - q(β,δ) - q_L(α) - q_R(γ)`.
pub fn build_o22(alpha: f64, beta: f64, gamma: f64, delta: f64) -> ComplexMatrix {
    let mut o = q_joint(alpha, gamma);
    o += &q_joint(alpha, delta);
    o += &q_joint(beta, gamma);
    o -= &q_joint(beta, delta);
    o -= &q_single(Side::Left, alpha);
    o -= &q_single(Side::Right, gamma);
    o
}

/// Operator of an arbitrary inequality: every probability is replaced by
/// the projector for its measurement angle(s).
pub fn build_omm(coeffs: &InequalityCoeffs, setup: &AngleSetup) -> Result<ComplexMatrix> {
    coeffs.validate()?;
    for side in [&setup.left, &setup.right] {
        if side.len() != coeffs.m {
            return Err(Error::DimMismatch {
                expected: coeffs.m,
                found: side.len(),
            });
        }
    }
    let left: Vec<ComplexMatrix> = setup.left.iter().map(|&t| projector(t)).collect();
    let right: Vec<ComplexMatrix> = setup.right.iter().map(|&t| projector(t)).collect();
    Ok(assemble(coeffs, &left, &right))
}

/// `d/dθ` of the symmetric-setup operator, where angle `k` equals `kθ`.
pub(crate) fn build_omm_symmetric_derivative(
    coeffs: &InequalityCoeffs,
    theta: f64,
) -> ComplexMatrix {
    let m = coeffs.m;
    let proj: Vec<ComplexMatrix> = (0..m).map(|k| projector(k as f64 * theta)).collect();
    let dproj: Vec<ComplexMatrix> = (0..m)
        .map(|k| &projector_derivative(k as f64 * theta) * k as f64)
        .collect();
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4);
    for i in 0..m {
        for j in 0..m {
            let c = coeffs.joint[i][j];
            if c != 0 {
                let mut term = kron(&dproj[i], &proj[j]);
                term += &kron(&proj[i], &dproj[j]);
                out += &(&term * c as f64);
            }
        }
        if coeffs.marg_left[i] != 0 {
            out += &(&kron(&dproj[i], &id) * coeffs.marg_left[i] as f64);
        }
        if coeffs.marg_right[i] != 0 {
            out += &(&kron(&id, &dproj[i]) * coeffs.marg_right[i] as f64);
        }
    }
    out
}

fn assemble(
    coeffs: &InequalityCoeffs,
    left: &[ComplexMatrix],
    right: &[ComplexMatrix],
) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4);
    for (i, pl) in left.iter().enumerate() {
        for (j, pr) in right.iter().enumerate() {
            let c = coeffs.joint[i][j];
            if c != 0 {
                out += &(&kron(pl, pr) * c as f64);
            }
        }
    }
    for (pl, &c) in left.iter().zip(&coeffs.marg_left) {
        if c != 0 {
            out += &(&kron(pl, &id) * c as f64);
        }
    }
    for (pr, &c) in right.iter().zip(&coeffs.marg_right) {
        if c != 0 {
            out += &(&kron(&id, pr) * c as f64);
        }
    }
    out
}

/// Columns `|φ⁺⟩, |ψ⁺⟩, |ψ⁻⟩, |φ⁻⟩` over `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn bell_basis() -> ComplexMatrix {
    let s = FRAC_1_SQRT_2;
    ComplexMatrix::from_real_rows([
        [s, 0.0, 0.0, s],
        [0.0, s, s, 0.0],
        [0.0, s, -s, 0.0],
        [s, 0.0, 0.0, -s],
    ])
}

/// Closed-form Bell-basis matrix of the `I_33` operator for the symmetric
/// setup `(0, θ, 2θ)` on both sides.
///
/// Row/column order is `φ⁺, ψ⁺, ψ⁻, φ⁻`. The `φ⁺` row decouples with
/// eigenvalue `-sin²θ`; the remaining 3×3 block carries the other three
/// eigenvalues.
pub fn o33_explicit(theta: f64) -> ComplexMatrix {
    let t = theta;
    let (s1, c1) = t.sin_cos();
    let (s2, c2) = (2.0 * t).sin_cos();
    let (s3, c3) = (3.0 * t).sin_cos();
    let (sh, ch) = (0.5 * t).sin_cos();

    let a11 = -4.0 * s1 * s1;
    let a22 = -5.0 - 2.0 * c1 - 3.0 * c2 + 2.0 * c3;
    let a23 = 4.0 * ch * ch;
    let a24 = 2.0 * s1 + 3.0 * s2 - 2.0 * s3;
    let a33 = -2.0 * (3.0 + c2);
    let a34 = -2.0 * s1;
    // 8 sin²(θ/2) cos²(θ/2) = 2 sin²θ
    let a44 = 8.0 * sh * sh * ch * ch * (4.0 * c1 - 3.0);

    let m = ComplexMatrix::from_real_rows([
        [a11, 0.0, 0.0, 0.0],
        [0.0, a22, a23, a24],
        [0.0, a23, a33, a34],
        [0.0, a24, a34, a44],
    ]);
    m.scale(Complex64::new(0.25, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{conjugate_by, hermitian_eigen};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diag(values: [f64; 4]) -> ComplexMatrix {
        ComplexMatrix::from_fn(4, |i, j| {
            Complex64::new(if i == j { values[i] } else { 0.0 }, 0.0)
        })
    }

    #[test]
    fn sigma_special_angles() {
        assert_eq!(sigma(0.0), ComplexMatrix::from_real_rows([[1.0, 0.0], [0.0, -1.0]]));
        let x = ComplexMatrix::from_real_rows([[0.0, 1.0], [1.0, 0.0]]);
        assert!(sigma(FRAC_PI_2).max_abs_diff(&x) < 1e-16);
    }

    #[test]
    fn sigma_squares_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let s = sigma(rng.gen_range(-10.0..10.0));
            assert!((&s * &s).max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-14);
            assert!(s.is_hermitian(0.0));
        }
    }

    #[test]
    fn single_projectors() {
        assert_eq!(q_single(Side::Left, 0.0), diag([1.0, 1.0, 0.0, 0.0]));
        assert_eq!(q_single(Side::Right, 0.0), diag([1.0, 0.0, 1.0, 0.0]));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let t = rng.gen_range(-PI..PI);
            for side in [Side::Left, Side::Right] {
                let q = q_single(side, t);
                assert!((q.trace().re - 2.0).abs() <= 1e-12);
                assert!((&q * &q).max_abs_diff(&q) <= 1e-12);
            }
        }
    }

    #[test]
    fn joint_projectors() {
        assert_eq!(q_joint(0.0, 0.0), diag([1.0, 0.0, 0.0, 0.0]));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let (a, b) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
            let q = q_joint(a, b);
            let product = &q_single(Side::Left, a) * &q_single(Side::Right, b);
            assert!(q.max_abs_diff(&product) <= 1e-12);
            assert!((q.trace().re - 1.0).abs() <= 1e-12);
            let spectrum = hermitian_eigen(&q).unwrap();
            assert!(spectrum.values().iter().all(|&l| (-1e-12..=1.0 + 1e-12).contains(&l)));
        }
    }

    #[test]
    fn o22_at_zero_angles() {
        let spectrum = hermitian_eigen(&build_o22(0.0, 0.0, 0.0, 0.0)).unwrap();
        let want = [0.0, 0.0, -1.0, -1.0];
        for (l, w) in spectrum.values().iter().zip(want) {
            assert!((l - w).abs() < 1e-14);
        }
    }

    #[test]
    fn o22_cabello_point() {
        let o = build_o22(0.0, FRAC_PI_2, FRAC_PI_4, 3.0 * FRAC_PI_4);
        let top = hermitian_eigen(&o).unwrap().max();
        assert!((top - 0.5 * (2.0_f64.sqrt() - 1.0)).abs() < 1e-12);
        assert!((top - 0.207_106_8).abs() < 1e-7);
    }

    #[test]
    fn imm_coefficients_for_ch() {
        let ch = imm_coeffs(2).unwrap();
        // p13 + p14 + p23 - p24 - p1 - p3
        assert_eq!(ch.joint, vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(ch.marg_left, vec![-1, 0]);
        assert_eq!(ch.marg_right, vec![-1, 0]);
        assert_eq!((ch.upper, ch.lower), (0, Some(-1)));
    }

    #[test]
    fn imm_coefficients_for_i33() {
        let c = imm_coeffs(3).unwrap();
        // p14 + p15 + p16 + p24 + p25 - p26 + p34 - p35 - p1 - 2p4 - p5
        assert_eq!(c.joint, vec![vec![1, 1, 1], vec![1, 1, -1], vec![1, -1, 0]]);
        assert_eq!(c.marg_left, vec![-1, 0, 0]);
        assert_eq!(c.marg_right, vec![-2, -1, 0]);
        assert_eq!(c.upper, 0);
        assert_eq!(c.lower, None);
    }

    #[test]
    fn imm_coefficients_for_m4_and_counts() {
        let c = imm_coeffs(4).unwrap();
        assert_eq!(c.joint.iter().flatten().filter(|&&x| x == 1).count(), 10);
        assert_eq!(c.negative_joint_count(), 3);
        assert_eq!(c.marg_right, vec![-3, -2, -1, 0]);
        assert_eq!(c.marg_left, vec![-1, 0, 0, 0]);
        for m in 2..=8 {
            let c = imm_coeffs(m).unwrap();
            assert_eq!(c.positive_joint_sum(), (m * (m + 1) / 2) as i64);
            assert_eq!(c.negative_joint_count(), m - 1);
        }
        assert_eq!(imm_coeffs(1), Err(Error::InvalidM(1)));
    }

    #[test]
    fn omm_for_m2_is_o22() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let ch = imm_coeffs(2).unwrap();
        for _ in 0..100 {
            let [a, b, g, d] = std::array::from_fn(|_| rng.gen_range(-PI..PI));
            let setup = AngleSetup::new(vec![a, b], vec![g, d]).unwrap();
            let omm = build_omm(&ch, &setup).unwrap();
            assert!(omm.max_abs_diff(&build_o22(a, b, g, d)) <= 1e-14);
        }
    }

    #[test]
    fn omm_rejects_wrong_setup_length() {
        let c = imm_coeffs(3).unwrap();
        let setup = AngleSetup::new(vec![0.0, 1.0], vec![0.0, 1.0, 2.0]).unwrap();
        assert!(matches!(build_omm(&c, &setup), Err(Error::DimMismatch { .. })));
        assert!(AngleSetup::new(vec![], vec![1.0]).is_err());
    }

    #[test]
    fn omm_m3_at_zero() {
        let o = build_omm(&imm_coeffs(3).unwrap(), &symmetric_setup(3, 0.0)).unwrap();
        let spectrum = hermitian_eigen(&o).unwrap();
        for (l, w) in spectrum.values().iter().zip([0.0, 0.0, -1.0, -3.0]) {
            assert!((l - w).abs() < 1e-12, "{:?}", spectrum.values());
        }
    }

    #[test]
    fn omm_m3_matches_explicit_bell_matrix() {
        let c = imm_coeffs(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let t = rng.gen_range(-PI..PI);
            let o = build_omm(&c, &symmetric_setup(3, t)).unwrap();
            let bell = conjugate_by(&o, &bell_basis()).unwrap();
            assert!(bell.max_abs_diff(&o33_explicit(t)) <= 1e-12);
        }
    }

    #[test]
    fn explicit_o33_properties() {
        let top = hermitian_eigen(&o33_explicit(FRAC_PI_3)).unwrap().max();
        assert!((top - 0.25).abs() < 1e-12);
        let at_zero = o33_explicit(0.0);
        assert_eq!(at_zero[(1, 3)].norm(), 0.0);
        assert_eq!(at_zero[(2, 3)].norm(), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let t = rng.gen_range(-PI..PI);
            let o = o33_explicit(t);
            assert!(o.is_hermitian(0.0));
            let s2 = t.sin().powi(2);
            assert!((o[(0, 0)].re + s2).abs() <= 1e-12);
            let spectrum = hermitian_eigen(&o).unwrap();
            assert!(spectrum.values().iter().any(|l| (l + s2).abs() <= 1e-12));
        }
    }

    #[test]
    fn bell_basis_is_unitary() {
        assert!(bell_basis().unitary_deviation() <= 1e-14);
    }

    #[test]
    fn symmetric_operators_split_in_bell_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 2..=6 {
            let c = imm_coeffs(m).unwrap();
            for _ in 0..20 {
                let t = rng.gen_range(0.0..PI);
                let o = build_omm(&c, &symmetric_setup(m, t)).unwrap();
                assert!(o.hermitian_deviation() <= 1e-12);
                let bell = conjugate_by(&o, &bell_basis()).unwrap();
                for k in 1..4 {
                    assert!(bell[(0, k)].norm() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn symmetric_derivative_matches_finite_difference() {
        let h = 1e-6;
        for m in 2..=5 {
            let c = imm_coeffs(m).unwrap();
            for &t in &[0.3, 1.1, 2.5] {
                let plus = build_omm(&c, &symmetric_setup(m, t + h)).unwrap();
                let minus = build_omm(&c, &symmetric_setup(m, t - h)).unwrap();
                let fd = &(&plus - &minus) * (0.5 / h);
                let d = build_omm_symmetric_derivative(&c, t);
                assert!(d.max_abs_diff(&fd) <= 1e-7);
            }
        }
    }
}
