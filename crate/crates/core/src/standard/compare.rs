use serde::Serialize;

use super::{
    standard_field_hamiltonian, standard_first_order_emission, standard_mode_annihilator, standard_vacuum,
    standard_vacuum_energy, StandardLayout,
};
use crate::algebra::mode_annihilator;
use crate::emission::{first_order_emission, AtomParams};
use crate::error::{Error, Result};
use crate::hilbert::{AtomLevel, BasisIndex, HilbertLayout, StateVector, C64};
use crate::units::FieldConfig;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dimensions {
    /// `M (N + 1)`
    pub single_oscillator: usize,
    /// `(N + 1)^M`
    pub standard: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VacuumComparison {
    /// `sum_k hbar omega_k / 2`, the same for every state.
    pub standard: f64,
    /// Range of `<H>` over the zero-photon subspace: `[hbar omega_min / 2, hbar omega_max / 2]`.
    pub single_oscillator_min: f64,
    pub single_oscillator_max: f64,
    /// `<H>` of each supplied zero-photon state.
    pub states: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraComparison {
    /// `max_{k != l} |a_k^dagger a_l^dagger|` in the single-oscillator scheme (exactly 0).
    pub cross_creation_single_oscillator: f64,
    /// `max_{k != l} ||a_k^dagger a_l^dagger |vac>||` in the standard scheme.
    pub cross_creation_standard: f64,
    /// `max |[a_k, a_l^dagger] - delta_kl| ` on occupations `<= N - 1`, standard scheme.
    pub standard_interior_commutator_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmissionComparison {
    pub mode: usize,
    pub omega: f64,
    /// Vacuum-sector weight `Psi_{k,0}` of the single-oscillator initial state.
    pub weight: C64,
    pub single_oscillator: C64,
    pub standard: C64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub modes: usize,
    pub nmax: usize,
    pub dimensions: Dimensions,
    pub vacuum_energy: VacuumComparison,
    pub algebra: AlgebraComparison,
    pub emission_time: Option<f64>,
    pub emission: Vec<EmissionComparison>,
}

/// Side-by-side run of both schemes on the same mode set.
///
/// `vacuum_states` are zero-photon states of the single-oscillator field layout.
/// With `atom` and `emission` = `(weights, t)`, the single-oscillator atom starts
/// in `sum_k Psi_k |k, 0, +>` and the standard atom in `|vac> (x) |+>`.
pub fn compare_report(
    layout: &HilbertLayout,
    config: &FieldConfig,
    vacuum_states: &[StateVector],
    atom: Option<&AtomParams>,
    emission: Option<(&[C64], f64)>,
) -> Result<ComparisonReport> {
    let field_layout = layout.without_atom();
    let std_layout = StandardLayout::new(layout.modes().to_vec(), layout.nmax(), false)?;
    let m = layout.mode_count();

    let omegas = layout.modes().iter().map(|md| md.omega());
    let half = |w: f64| 0.5 * config.hbar * w;
    let h = crate::algebra::hamiltonian(&field_layout, config);
    let states = vacuum_states.iter().map(|s| Ok(h.expect(s)?.re)).collect::<Result<Vec<_>>>()?;
    let vacuum_energy = VacuumComparison {
        standard: standard_vacuum_energy(&std_layout, config),
        single_oscillator_min: half(omegas.clone().fold(f64::INFINITY, f64::min)),
        single_oscillator_max: half(omegas.fold(0.0, f64::max)),
        states,
    };

    let lower: Vec<_> = (0..m).map(|k| mode_annihilator(&field_layout, k)).collect::<Result<_>>()?;
    let std_lower: Vec<_> = (0..m).map(|k| standard_mode_annihilator(&std_layout, k)).collect::<Result<_>>()?;
    let vac = standard_vacuum(&std_layout);
    let interior: Vec<usize> = (0..std_layout.field_dim())
        .filter(|&i| std_layout.occupations(i).iter().all(|&n| n < std_layout.nmax()))
        .collect();
    let mut cross_single: f64 = 0.0;
    let mut cross_std: f64 = 0.0;
    let mut comm_dev: f64 = 0.0;
    for k in 0..m {
        for l in 0..m {
            let c = std_lower[k].commutator(&std_lower[l].adjoint()).restrict(&interior);
            let expected = if k == l {
                crate::hilbert::OpMatrix::identity(interior.len())
            } else {
                crate::hilbert::OpMatrix::zeros(interior.len())
            };
            comm_dev = comm_dev.max(c.max_abs_diff(&expected));
            if k != l {
                cross_single = cross_single.max((lower[k].adjoint() * lower[l].adjoint()).max_abs());
                cross_std = cross_std.max(std_lower[k].adjoint().matmul(&std_lower[l].adjoint()).apply(&vac).norm());
            }
        }
    }
    let algebra = AlgebraComparison {
        cross_creation_single_oscillator: cross_single,
        cross_creation_standard: cross_std,
        standard_interior_commutator_deviation: comm_dev,
    };

    let (emission_time, emission) = match (atom, emission) {
        (Some(atom), Some((weights, t))) => {
            if weights.len() != m {
                return Err(Error::InvalidParameter(format!("{} emission weights for {m} modes", weights.len())));
            }
            let atom_layout = layout.with_atom();
            let init = StateVector::superposition(
                &atom_layout,
                weights.iter().enumerate().map(|(k, &w)| (BasisIndex::with_atom(k, 0, AtomLevel::Excited), w)),
            )?;
            let single = first_order_emission(&init, atom, config, t)?;
            let standard = standard_first_order_emission(atom, &std_layout, config, t)?;
            let rows = (0..m)
                .map(|k| {
                    Ok(EmissionComparison {
                        mode: k,
                        omega: layout.modes()[k].omega(),
                        weight: init.amplitude(BasisIndex::with_atom(k, 0, AtomLevel::Excited))?,
                        single_oscillator: single.amplitude(k, 0).expect("entry per mode"),
                        standard: standard[k],
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (Some(t), rows)
        }
        _ => (None, Vec::new()),
    };

    // keep the standard Hamiltonian honest: its vacuum expectation is the reported sum
    debug_assert!({
        let hs = standard_field_hamiltonian(&std_layout, config);
        (vac.dotc(&hs.apply(&vac)).re - vacuum_energy.standard).abs() < 1e-12
    });

    Ok(ComparisonReport {
        modes: m,
        nmax: layout.nmax(),
        dimensions: Dimensions { single_oscillator: field_layout.dim(), standard: std_layout.field_dim() },
        vacuum_energy,
        algebra,
        emission_time,
        emission,
    })
}
