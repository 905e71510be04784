use std::f64::consts::{FRAC_PI_2, PI, TAU};

use proptest::prelude::*;
use qbound_core::linalg::vec_norm;
use qbound_core::spectra::{cabello_bound, max_violation};
use qbound_core::{
    apply_local, build_o22, cardano_roots, concurrence, hermitian_eigen, kron, multiport_forward,
    multiport_solve, o22_eigenvalues, su2, Basis, Complex64, ComplexMatrix, CubicCoeffs,
    Su2Params, TwoQubitState,
};

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(complex(), dim * dim)
        .prop_map(move |e| ComplexMatrix::new(dim, e).unwrap())
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|m| &(&m + &m.adjoint()) * 0.5)
}

fn su2_params() -> impl Strategy<Value = Su2Params> {
    (-TAU..TAU, 0.0..PI, 0.0..TAU).prop_map(|(w, t, p)| Su2Params::new(w, t, p))
}

fn state() -> impl Strategy<Value = TwoQubitState> {
    proptest::array::uniform4(complex())
        .prop_filter("nonzero", |a| vec_norm(a) > 1e-3)
        .prop_map(|a| TwoQubitState::normalized(a, Basis::Computational).unwrap())
}

proptest! {
    #[test]
    fn kron_is_bilinear(a in matrix(2), b in matrix(2), c in matrix(2), s in complex()) {
        let lhs = kron(&(&a + &b.scale(s)), &c);
        let rhs = &kron(&a, &c) + &kron(&b, &c).scale(s);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
        let lhs = kron(&c, &(&a + &b.scale(s)));
        let rhs = &kron(&c, &a) + &kron(&c, &b).scale(s);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn kron_is_associative(a in matrix(2), b in matrix(2), c in matrix(2)) {
        let lhs = kron(&kron(&a, &b), &c);
        let rhs = kron(&a, &kron(&b, &c));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn eigenvalues_sum_to_trace_and_multiply_to_determinant(m in hermitian(4)) {
        let spectrum = hermitian_eigen(&m).unwrap();
        let sum: f64 = spectrum.values().iter().sum();
        prop_assert!((sum - m.trace().re).abs() <= 1e-10);
        let prod: f64 = spectrum.values().iter().product();
        let det = m.determinant().re;
        prop_assert!((prod - det).abs() <= 1e-9 * det.abs().max(1.0));
    }

    #[test]
    fn cardano_agrees_with_jacobi(m in hermitian(3)) {
        let cc = CubicCoeffs::from_hermitian_block(&m).unwrap();
        let roots = cardano_roots(cc).unwrap();
        let spectrum = hermitian_eigen(&m).unwrap();
        for (r, e) in roots.iter().zip(spectrum.values()) {
            prop_assert!((r - e).abs() <= 1e-9);
        }
    }

    #[test]
    fn o22_closed_form_matches_numeric(
        a in -PI..PI, b in -PI..PI, g in -PI..PI, d in -PI..PI,
    ) {
        let numeric = hermitian_eigen(&build_o22(a, b, g, d)).unwrap();
        for (x, y) in o22_eigenvalues(a, b, g, d).iter().zip(numeric.values()) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn local_unitaries_preserve_concurrence(s in state(), p1 in su2_params(), p2 in su2_params()) {
        let out = apply_local(&su2(p1), &su2(p2), &s).unwrap();
        prop_assert!((vec_norm(out.amplitudes()) - 1.0).abs() <= 1e-12);
        prop_assert!((concurrence(&out) - concurrence(&s)).abs() <= 1e-10);
    }

    #[test]
    fn bell_state_orbit_stays_maximally_entangled(p1 in su2_params(), p2 in su2_params(), k in 0usize..4) {
        let out = apply_local(&su2(p1), &su2(p2), &TwoQubitState::bell(k)).unwrap();
        prop_assert!((concurrence(&out) - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn multiport_inverts_forward(t in proptest::array::uniform4(-1.0f64..1.0)) {
        let norm = t.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        let target = t.map(|x| x / norm);
        // Sine prefactors are the norms of the trailing components.
        let r1 = (target[1].powi(2) + target[2].powi(2) + target[3].powi(2)).sqrt();
        let r2 = (target[2].powi(2) + target[3].powi(2)).sqrt();
        prop_assume!(r1 >= 1e-6 && r2 >= 1e-6);
        let p = multiport_solve(target).unwrap();
        for (z, want) in multiport_forward(p).iter().zip(target) {
            prop_assert!((z.re - want).abs() <= 1e-9);
        }
    }
}

#[test]
fn cabello_family_matches_spectrum() {
    for k in 0..1000 {
        let t = -PI + TAU * k as f64 / 999.0;
        let top = o22_eigenvalues(0.0, 2.0 * t, t, 3.0 * t)[0];
        assert!((top - cabello_bound(t)).abs() <= 1e-10, "θ = {t}");
    }
}

#[test]
fn half_pi_state_is_out_of_reach_of_local_unitaries() {
    let o = qbound_core::spectra::symmetric_operator(3, FRAC_PI_2).unwrap();
    let spectrum = hermitian_eigen(&o).unwrap();
    let v = spectrum.vector(0);
    let psi = TwoQubitState::new([v[0], v[1], v[2], v[3]], Basis::Computational).unwrap();
    let c = concurrence(&psi);
    assert!(c < 1.0 - 1e-3, "{c}");

    // Coarse SU(2)² grid. A maximally entangled state overlaps a state of
    // concurrence C by at most √((1 + C)/2).
    let steps = [0.0, PI / 3.0, 2.0 * PI / 3.0, PI, 4.0 * PI / 3.0, 5.0 * PI / 3.0];
    let axes = [(0.0, 0.0), (FRAC_PI_2, 0.0), (FRAC_PI_2, FRAC_PI_2)];
    let mut best: f64 = 0.0;
    for &w1 in &steps {
        for &(t1, p1) in &axes {
            for &w2 in &steps {
                for &(t2, p2) in &axes {
                    let out = apply_local(
                        &su2(Su2Params::new(w1, t1, p1)),
                        &su2(Su2Params::new(w2, t2, p2)),
                        &TwoQubitState::bell(1),
                    )
                    .unwrap();
                    assert!((concurrence(&out) - 1.0).abs() <= 1e-10);
                    best = best.max(out.overlap(&psi));
                }
            }
        }
    }
    assert!(best <= ((1.0 + c) / 2.0).sqrt() + 1e-12, "{best}");
    assert!(best < 1.0 - 1e-3);
}

#[test]
fn m3_optimum_is_reachable_from_psi_plus() {
    let opt = max_violation(3, (0.0, PI)).unwrap();
    assert!((opt.concurrence - 1.0).abs() <= 1e-8);
    let out = apply_local(
        &su2(Su2Params::new(2.0 * PI / 3.0, FRAC_PI_2, FRAC_PI_2)),
        &su2(Su2Params::new(0.0, 0.0, 0.0)),
        &TwoQubitState::bell(1),
    )
    .unwrap();
    assert!(out.overlap(&opt.state) >= 1.0 - 1e-8);
}
