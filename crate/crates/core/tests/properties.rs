mod common;

use nalgebra::DVector;
use num_complex::Complex64 as C64;
use oscfield::emission::{first_order_emission, AtomParams};
use oscfield::field::polarization::{conj, cross, dot, real_vec};
use oscfield::field::PolarizationBasis;
use oscfield::{AtomLevel, BasisIndex, FieldConfig, HilbertLayout, ModeLabel, OpMatrix, StateVector};
use proptest::prelude::*;

fn omegas(m: usize) -> Vec<ModeLabel> {
    (0..m).map(|k| ModeLabel::abstract_mode(1.0 + 0.37 * k as f64, 0).unwrap()).collect()
}

fn complex() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn kappa() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-3.0..3.0f64).prop_filter("nonzero", |k| k.iter().map(|x| x * x).sum::<f64>() > 1e-6)
}

proptest! {
    #[test]
    fn flat_index_is_a_bijection(m in 1usize..5, nmax in 1usize..6, atom in any::<bool>()) {
        let layout = HilbertLayout::new(omegas(m), nmax, atom).unwrap();
        prop_assert_eq!(layout.dim(), m * (nmax + 1) * if atom { 2 } else { 1 });
        for i in 0..layout.dim() {
            let b = layout.unflatten(i).unwrap();
            prop_assert_eq!(layout.flatten(b).unwrap(), i);
            let expected = b.atom.map_or(0, |a| a.index()) * m * (nmax + 1) + b.mode * (nmax + 1) + b.n;
            prop_assert_eq!(expected, i);
        }
    }

    #[test]
    fn dense_and_sparse_apply_agree(entries in prop::collection::vec((0usize..12, 0usize..12, complex()), 0..40), x in prop::collection::vec(complex(), 12)) {
        let sparse = OpMatrix::from_triplets(12, entries.iter().copied());
        let dense = OpMatrix::from_dense(sparse.to_dense());
        let x = DVector::from_vec(x);
        let diff = (sparse.apply(&x) - dense.apply(&x)).iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(diff < 1e-13);
        prop_assert!(sparse.adjoint().max_abs_diff(&OpMatrix::from_dense(sparse.to_dense().adjoint())) == 0.0);
    }

    #[test]
    fn normalize_is_idempotent(amps in prop::collection::vec(complex(), 8)) {
        let layout = HilbertLayout::new(omegas(2), 3, false).unwrap();
        prop_assume!(amps.iter().any(|a| a.norm() > 1e-3));
        let once = StateVector::from_amplitudes(&layout, DVector::from_vec(amps)).unwrap().normalized().unwrap();
        let twice = once.clone().normalized().unwrap();
        prop_assert!((once.norm() - 1.0).abs() < 1e-14);
        prop_assert!(once.distance(&twice).unwrap() < 1e-15);
    }

    #[test]
    fn helicity_basis_invariants(k in kappa()) {
        let basis = PolarizationBasis::new(k).unwrap();
        let n = real_vec(basis.direction);
        for s in [1i8, -1] {
            let e = basis.get(s).unwrap();
            prop_assert!((dot(&e, &conj(&e)) - 1.0).norm() < 1e-14);
            prop_assert!(dot(&e, &n).norm() < 1e-14);
            let lhs = cross(&n, &e);
            for i in 0..3 {
                prop_assert!((lhs[i] - C64::new(0.0, -(s as f64)) * e[i]).norm() < 1e-14);
            }
        }
        prop_assert!(dot(&basis.plus, &conj(&basis.minus)).norm() < 1e-14);
    }

    #[test]
    fn emission_is_linear_in_dipole_and_weights(d in 1e-4..1e-1f64, scale in 0.1..3.0f64, w in complex()) {
        prop_assume!(w.norm() > 1e-3);
        let cfg = FieldConfig::default();
        let modes = vec![ModeLabel::field(1, [0.0, 0.0, 1.0], 0, 1.0).unwrap(), ModeLabel::field(1, [0.5, 0.0, 0.9], 0, 1.0).unwrap()];
        let layout = HilbertLayout::new(modes, 2, true).unwrap();
        let atom = AtomParams::new(1.1, d, common::z_dipole()).unwrap();
        let amps = |a: &AtomParams, psi: &StateVector| first_order_emission(psi, a, &cfg, 1.7).unwrap();
        let raw = |w0: C64| {
            let mut v = DVector::zeros(layout.dim());
            v[layout.flatten(BasisIndex::with_atom(0, 0, AtomLevel::Excited)).unwrap()] = w0;
            v[layout.flatten(BasisIndex::with_atom(1, 1, AtomLevel::Excited)).unwrap()] = C64::new(0.3, -0.2);
            StateVector::from_amplitudes(&layout, v).unwrap()
        };
        let base = amps(&atom, &raw(w));
        let doubled = amps(&atom.with_dipole(scale * d), &raw(w));
        let reweighted = amps(&atom, &raw(w * scale));
        for (i, e) in base.entries.iter().enumerate() {
            prop_assert!((doubled.entries[i].amplitude - e.amplitude * scale).norm() <= 1e-15 * (1.0 + e.amplitude.norm()));
            if e.mode == 0 && e.n_initial == 0 {
                prop_assert!((reweighted.entries[i].amplitude - e.amplitude * scale).norm() <= 1e-15);
            } else {
                prop_assert_eq!(reweighted.entries[i].amplitude, e.amplitude);
            }
        }
    }

    #[test]
    fn operator_algebra_matches_kronecker_oracle(m in 1usize..4, nmax in 1usize..5) {
        let layout = HilbertLayout::new(omegas(m), nmax, false).unwrap();
        for k in 0..m {
            let ours = common::dense(&oscfield::algebra::mode_annihilator(&layout, k).unwrap());
            prop_assert!(common::max_abs(&(ours - common::mode_lowering(m, nmax, k))) == 0.0);
        }
        let h = common::dense(&oscfield::algebra::hamiltonian(&layout, &FieldConfig::default()));
        prop_assert!(common::max_abs(&(h - common::field_hamiltonian(&layout, 1.0))) < 1e-14);
    }
}
