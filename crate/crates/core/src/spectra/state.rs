use num_complex::Complex64;

use crate::linalg::{inner, vec_norm};
use crate::operators::bell_basis;
use crate::{Error, Result};

/// Allowed deviation of `‖ψ‖` from one.
pub const NORM_TOL: f64 = 1e-12;

/// Basis in which a [`TwoQubitState`] stores its amplitudes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// `|00⟩, |01⟩, |10⟩, |11⟩`.
    Computational,
    /// `|φ⁺⟩, |ψ⁺⟩, |ψ⁻⟩, |φ⁻⟩`.
    Bell,
}

/// Normalized pure state of two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    amplitudes: [Complex64; 4],
    basis: Basis,
}

impl TwoQubitState {
    pub fn new(amplitudes: [Complex64; 4], basis: Basis) -> Result<Self> {
        let norm = vec_norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes, basis })
    }

    /// Rescales `amplitudes` to unit norm. Fails only for the zero vector.
    pub fn normalized(amplitudes: [Complex64; 4], basis: Basis) -> Result<Self> {
        let norm = vec_norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self {
            amplitudes: amplitudes.map(|z| z / norm),
            basis,
        })
    }

    pub fn from_real(amplitudes: [f64; 4], basis: Basis) -> Result<Self> {
        Self::new(amplitudes.map(|x| Complex64::new(x, 0.0)), basis)
    }

    /// `|φ⁺⟩, |ψ⁺⟩, |ψ⁻⟩, |φ⁻⟩` for `k = 0..4`, stored in the Bell basis.
    pub fn bell(k: usize) -> Self {
        let mut amplitudes = [Complex64::new(0.0, 0.0); 4];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self {
            amplitudes,
            basis: Basis::Bell,
        }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn in_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let b = bell_basis();
        let converted = match basis {
            Basis::Computational => b.mul_vec(&self.amplitudes),
            Basis::Bell => b.adjoint().mul_vec(&self.amplitudes),
        }
        .expect("4-dimensional basis change");
        Self {
            amplitudes: [converted[0], converted[1], converted[2], converted[3]],
            basis,
        }
    }

    pub fn to_computational(&self) -> Self {
        self.in_basis(Basis::Computational)
    }

    pub fn to_bell(&self) -> Self {
        self.in_basis(Basis::Bell)
    }

    /// `|⟨self|other⟩|`, independent of the bases the states are stored in.
    pub fn overlap(&self, other: &Self) -> f64 {
        let other = other.in_basis(self.basis);
        inner(&self.amplitudes, &other.amplitudes).norm()
    }
}

/// Concurrence `2|x₀₀x₁₁ - x₀₁x₁₀|` of a pure two-qubit state: 1 for
/// maximally entangled states, 0 for product states.
pub fn concurrence(s: &TwoQubitState) -> f64 {
    let [x00, x01, x10, x11] = *s.to_computational().amplitudes();
    (2.0 * (x00 * x11 - x01 * x10).norm()).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_states_are_maximally_entangled() {
        for k in 0..4 {
            assert!((concurrence(&TwoQubitState::bell(k)) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn product_state_has_zero_concurrence() {
        let s = TwoQubitState::from_real([1.0, 0.0, 0.0, 0.0], Basis::Computational).unwrap();
        assert_eq!(concurrence(&s), 0.0);
    }

    #[test]
    fn approximate_half_pi_state_is_not_maximally_entangled() {
        // ψ⁺, ψ⁻, φ⁻ components; φ⁺ vanishes.
        let s = TwoQubitState::normalized(
            [0.0, 0.86, 0.17, 0.47].map(|x| Complex64::new(x, 0.0)),
            Basis::Bell,
        )
        .unwrap();
        let c = concurrence(&s);
        assert!(c < 1.0 - 1e-3);
        assert!((c - 0.94).abs() < 0.01, "{c}");
        // The two-decimal Bell and computational forms agree to about 1e-2.
        let comp = s.to_computational();
        for (z, want) in comp.amplitudes().iter().zip([0.34, 0.73, 0.49, -0.34]) {
            assert!((z.re - want).abs() < 1e-2);
        }
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(matches!(
            TwoQubitState::from_real([1.0, 1.0, 0.0, 0.0], Basis::Bell),
            Err(Error::NotNormalized { .. })
        ));
        assert!(TwoQubitState::normalized([Complex64::new(0.0, 0.0); 4], Basis::Bell).is_err());
    }

    #[test]
    fn basis_round_trip_and_overlap() {
        let s = TwoQubitState::normalized(
            [
                Complex64::new(0.1, 0.2),
                Complex64::new(-0.3, 0.0),
                Complex64::new(0.5, -0.4),
                Complex64::new(0.0, 0.7),
            ],
            Basis::Computational,
        )
        .unwrap();
        let back = s.to_bell().to_computational();
        for (a, b) in s.amplitudes().iter().zip(back.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
        assert!((s.overlap(&s.to_bell()) - 1.0).abs() < 1e-15);
        let phased = TwoQubitState::new(s.amplitudes().map(|z| z * Complex64::new(0.0, 1.0)), Basis::Computational).unwrap();
        assert!((s.overlap(&phased) - 1.0).abs() < 1e-15);
    }
}
