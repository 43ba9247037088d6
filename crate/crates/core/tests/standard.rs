mod common;

use common::{max_abs, z_dipole};
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use oscfield::algebra::{hamiltonian, mode_creator};
use oscfield::emission::{first_order_emission, AtomParams};
use oscfield::standard::{
    compare_report, spectrum, standard_atom_field_hamiltonian, standard_evolve, standard_field_hamiltonian,
    standard_first_order_emission, standard_mode_annihilator, standard_vacuum, standard_vacuum_energy, StandardLayout,
};
use oscfield::{AtomLevel, BasisIndex, Error, FieldConfig, HilbertLayout, ModeLabel, StateVector};

fn modes(m: usize) -> Vec<ModeLabel> {
    let kappas = [[0.0, 0.0, 1.0], [0.0, 0.2, 1.4], [1.7, 0.0, 0.3], [0.0, -2.1, 0.5]];
    kappas[..m].iter().map(|&k| ModeLabel::field(1, k, 0, 1.0).unwrap()).collect()
}

#[test]
fn size_caps_are_enforced() {
    let five: Vec<ModeLabel> = (0..5).map(|k| ModeLabel::abstract_mode(1.0 + k as f64, 0).unwrap()).collect();
    assert!(matches!(StandardLayout::new(five, 1, false), Err(Error::OracleBounds(_))));
    assert!(matches!(StandardLayout::new(modes(2), 4, false), Err(Error::OracleBounds(_))));
    assert!(StandardLayout::new(modes(4), 3, true).is_ok());
}

#[test]
fn two_photon_creation_across_modes() {
    let layout = StandardLayout::new(modes(2), 2, false).unwrap();
    let a1 = standard_mode_annihilator(&layout, 0).unwrap();
    let a2 = standard_mode_annihilator(&layout, 1).unwrap();
    let out = a1.adjoint().matmul(&a2.adjoint()).apply(&standard_vacuum(&layout));
    let target = layout.index(&[1, 1], None).unwrap();
    for (i, z) in out.iter().enumerate() {
        assert_eq!(*z, C64::new(if i == target { 1.0 } else { 0.0 }, 0.0));
    }
    let ours = HilbertLayout::new(modes(2), 2, false).unwrap();
    let cross = &mode_creator(&ours, 0).unwrap() * &mode_creator(&ours, 1).unwrap();
    assert_eq!(cross.max_abs(), 0.0);
}

#[test]
fn interior_commutators_are_canonical() {
    let layout = StandardLayout::new(modes(3), 3, false).unwrap();
    let interior: Vec<usize> =
        (0..layout.field_dim()).filter(|&i| layout.occupations(i).iter().all(|&n| n < layout.nmax())).collect();
    // Kronecker oracle: a in slot k of (N+1)^M
    let kron = |k: usize| {
        let mut m = DMatrix::<C64>::identity(1, 1);
        for slot in 0..3 {
            let f = if slot == k { common::fock_lowering(3) } else { DMatrix::identity(4, 4) };
            m = m.kronecker(&f);
        }
        m
    };
    for k in 0..3 {
        let a = standard_mode_annihilator(&layout, k).unwrap();
        assert_eq!(max_abs(&(a.to_dense() - kron(k))), 0.0);
        for l in 0..3 {
            let al = standard_mode_annihilator(&layout, l).unwrap();
            let c = a.matmul(&al.adjoint()).sub(&al.adjoint().matmul(&a)).to_dense();
            for &i in &interior {
                for &j in &interior {
                    let want = if k == l && i == j { 1.0 } else { 0.0 };
                    assert!((c[(i, j)] - C64::new(want, 0.0)).norm() < 1e-13);
                }
            }
        }
    }
}

#[test]
fn vacuum_energies() {
    let cfg = FieldConfig::new(0.9, 1.0, 1.0).unwrap();
    let layout = StandardLayout::new(modes(3), 2, false).unwrap();
    let e = standard_vacuum_energy(&layout, &cfg);
    let expected: f64 = modes(3).iter().map(|m| 0.5 * cfg.hbar * m.omega()).sum();
    assert!((e - expected).abs() < 1e-15);
    let h = standard_field_hamiltonian(&layout, &cfg);
    let vac = standard_vacuum(&layout);
    assert!((vac.dotc(&h.apply(&vac)).re - e).abs() < 1e-14);
    assert!((spectrum(&h)[0] - e).abs() < 1e-14);
}

#[test]
fn single_mode_schemes_coincide() {
    let cfg = FieldConfig::default();
    let atom = AtomParams::new(1.1, 0.04, z_dipole()).unwrap();
    for mode in modes(2) {
        let ours = HilbertLayout::new(vec![mode], 3, true).unwrap();
        let theirs = StandardLayout::new(vec![mode], 3, true).unwrap();
        let h = oscfield::emission::atom_field_hamiltonian(&ours, &atom, &cfg).unwrap();
        let hs = standard_atom_field_hamiltonian(&theirs, &atom, &cfg).unwrap();
        let (a, b) = (spectrum(h.matrix()), spectrum(&hs));
        assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-12));
        assert_eq!(spectrum(hamiltonian(&ours.without_atom(), &cfg).matrix()).len(), theirs.field_dim());

        let psi = StateVector::basis_state(&ours, BasisIndex::with_atom(0, 0, AtomLevel::Excited)).unwrap();
        let paper = first_order_emission(&psi, &atom, &cfg, 2.3).unwrap().amplitude(0, 0).unwrap();
        let standard = standard_first_order_emission(&atom, &theirs, &cfg, 2.3).unwrap()[0];
        assert!((paper - standard).norm() < 1e-12);
    }
}

#[test]
fn standard_emission_agrees_with_exact_oracle_dynamics() {
    let cfg = FieldConfig::default();
    let layout = StandardLayout::new(modes(3), 2, true).unwrap();
    let t = 1.5;
    let base = AtomParams::new(1.05, 1.0, z_dipole()).unwrap();
    let mut previous = None;
    for d in [1e-3, 2e-3] {
        let atom = base.with_dipole(d);
        let amps = standard_first_order_emission(&atom, &layout, &cfg, t).unwrap();
        let h = standard_atom_field_hamiltonian(&layout, &atom, &cfg).unwrap();
        let out = standard_evolve(&h, &standard_vacuum(&layout), t, cfg.hbar);
        let mut worst: f64 = 0.0;
        for (k, amp) in amps.iter().enumerate() {
            let mut occ = vec![0; 3];
            occ[k] = 1;
            let i = layout.index(&occ, Some(AtomLevel::Ground)).unwrap();
            // back to the interaction picture
            let e_final = cfg.hbar * (modes(3)[k].omega() + modes(3).iter().map(|m| 0.5 * m.omega()).sum::<f64>() - 0.5 * atom.omega0);
            let exact = out[i] * C64::from_polar(1.0, e_final * t / cfg.hbar);
            worst = worst.max((exact - amp).norm());
        }
        if let Some(p) = previous {
            // error is third order in d for the one-photon amplitudes
            let ratio = worst / p;
            assert!((7.5..8.5).contains(&ratio), "{worst:e} vs {p:e}");
        }
        assert!(worst < 1e-5 * amps.iter().map(|a| a.norm()).fold(0.0, f64::max));
        previous = Some(worst);
    }
}

#[test]
fn comparison_report_for_four_modes() {
    let cfg = FieldConfig::default();
    let layout = HilbertLayout::new(modes(4), 3, false).unwrap();
    let vacua: Vec<StateVector> = (0..4).map(|k| StateVector::basis_state(&layout, BasisIndex::new(k, 0)).unwrap()).collect();
    let atom = AtomParams::new(1.2, 0.01, z_dipole()).unwrap();
    let weights = [C64::new(0.5, 0.0), C64::new(0.0, 0.5), C64::new(0.5, 0.0), C64::new(-0.5, 0.0)];
    let report = compare_report(&layout, &cfg, &vacua, Some(&atom), Some((&weights, 1.5))).unwrap();
    assert_eq!((report.dimensions.single_oscillator, report.dimensions.standard), (16, 256));
    let omegas: Vec<f64> = modes(4).iter().map(|m| m.omega()).collect();
    let half_min = 0.5 * omegas.iter().copied().fold(f64::INFINITY, f64::min);
    let half_max = 0.5 * omegas.iter().copied().fold(0.0, f64::max);
    assert_eq!(report.vacuum_energy.single_oscillator_min, half_min);
    assert_eq!(report.vacuum_energy.single_oscillator_max, half_max);
    assert!((report.vacuum_energy.standard - 0.5 * omegas.iter().sum::<f64>()).abs() < 1e-15);
    for (e, w) in report.vacuum_energy.states.iter().zip(&omegas) {
        assert!((e - 0.5 * w).abs() < 1e-15);
    }
    assert_eq!(report.algebra.cross_creation_single_oscillator, 0.0);
    assert!((report.algebra.cross_creation_standard - 1.0).abs() < 1e-15);
    assert!(report.algebra.standard_interior_commutator_deviation < 1e-13);
    for e in &report.emission {
        assert!((e.single_oscillator - e.weight * e.standard).norm() < 1e-15);
        assert!(e.standard.norm() > 0.0);
    }
    let json = serde_json::to_string(&report).unwrap();
    assert!(json.contains("\"standard\":256"));
}
