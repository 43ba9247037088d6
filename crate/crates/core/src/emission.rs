//! Two-level atom coupled to the field in the dipole and rotating-wave
//! approximations, and first-order spontaneous/stimulated emission.
//!
//! Atom at the origin. Couplings follow
//! `g_k = i sqrt(1 / (2 hbar omega_k V)) e_k . u` and the interaction carries
//! the prefactor `hbar omega_0 d`.

use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::algebra::{diagonal_operator, hamiltonian};
use crate::dynamics::{dyson_first_order, Propagator, Quadrature};
use crate::error::{Error, Result};
use crate::field::polarization::{dot, PolarizationBasis};
use crate::hilbert::{AtomLevel, BasisIndex, HilbertLayout, ModeLabel, OpMatrix, Operator, StateVector, C64};
use crate::units::FieldConfig;

/// Below this `|Delta t|` the emission kernel switches to its Taylor series.
pub const KERNEL_SERIES_THRESHOLD: f64 = 1e-6;

/// Amplitudes smaller than this count as absent.
pub const NEGLIGIBLE_AMPLITUDE: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomParams {
    /// Transition frequency.
    pub omega0: f64,
    /// Dipole magnitude, `d u = <+|d|->`.
    pub d: f64,
    /// Complex unit dipole direction.
    pub u: [C64; 3],
}

impl AtomParams {
    pub fn new(omega0: f64, d: f64, u: [C64; 3]) -> Result<Self> {
        let p = Self { omega0, d, u };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega0.is_finite() && self.omega0 > 0.0) {
            return Err(Error::InvalidParameter(format!("omega0 must be > 0, got {}", self.omega0)));
        }
        if !(self.d.is_finite() && self.d >= 0.0) {
            return Err(Error::InvalidParameter(format!("dipole magnitude must be >= 0, got {}", self.d)));
        }
        let norm: f64 = self.u.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("dipole direction must satisfy u.u* = 1, got {norm}")));
        }
        Ok(())
    }

    pub fn with_dipole(&self, d: f64) -> Self {
        Self { d, ..*self }
    }
}

/// `g = i sqrt(1 / (2 hbar omega V)) e_{s,kappa} . u`.
pub fn coupling(mode: &ModeLabel, atom: &AtomParams, config: &FieldConfig) -> Result<C64> {
    mode.require_field()?;
    let e = PolarizationBasis::new(mode.kappa())?.get(mode.s())?;
    let scale = (1.0 / (2.0 * config.hbar * mode.omega() * config.volume)).sqrt();
    Ok(C64::new(0.0, scale) * dot(&e, &atom.u))
}

fn require_atom(layout: &HilbertLayout) -> Result<()> {
    if layout.has_atom() {
        Ok(())
    } else {
        Err(Error::NoAtomFactor)
    }
}

/// Uncoupled part `hbar omega_0 sigma_3 / 2 + H_field`, diagonal.
pub fn free_hamiltonian(layout: &HilbertLayout, atom: &AtomParams, config: &FieldConfig) -> Result<Operator> {
    require_atom(layout)?;
    let field = hamiltonian(layout, config);
    let fd = layout.field_dim();
    let d = DVector::from_iterator(
        layout.dim(),
        (0..layout.dim()).map(|i| {
            let level = if i < fd { AtomLevel::Ground } else { AtomLevel::Excited };
            field.get(i, i) + 0.5 * config.hbar * atom.omega0 * level.sign()
        }),
    );
    Ok(Operator::from_parts(Arc::new(layout.clone()), OpMatrix::from_diagonal(d)))
}

/// `hbar omega_0 d sum_k (g_k phase_k a_k sigma_+ + h.c.)`.
fn coupling_term(layout: &HilbertLayout, atom: &AtomParams, config: &FieldConfig, phase: impl Fn(&ModeLabel) -> C64) -> Result<Operator> {
    require_atom(layout)?;
    let pre = config.hbar * atom.omega0 * atom.d;
    let mut entries = Vec::new();
    for (k, mode) in layout.modes().iter().enumerate() {
        let g = coupling(mode, atom, config)? * phase(mode) * pre;
        for n in 1..=layout.nmax() {
            // a_k sigma_+ |k, n, -> = sqrt(n) |k, n-1, +>
            let row = layout.flat_unchecked(k, n - 1, AtomLevel::Excited.index());
            let col = layout.flat_unchecked(k, n, AtomLevel::Ground.index());
            let v = g * (n as f64).sqrt();
            entries.push((row, col, v));
            entries.push((col, row, v.conj()));
        }
    }
    Ok(Operator::from_parts(Arc::new(layout.clone()), OpMatrix::from_triplets(layout.dim(), entries)))
}

/// Dipole/RWA Hamiltonian of a two-level atom at the origin coupled to the field modes.
pub fn atom_field_hamiltonian(layout: &HilbertLayout, atom: &AtomParams, config: &FieldConfig) -> Result<Operator> {
    Ok(free_hamiltonian(layout, atom, config)? + coupling_term(layout, atom, config, |_| C64::new(1.0, 0.0))?)
}

/// Interaction-picture coupling with phases `exp(+-i (omega_0 - omega_k) t)`.
pub fn interaction_hamiltonian(layout: &HilbertLayout, atom: &AtomParams, config: &FieldConfig, t: f64) -> Result<Operator> {
    coupling_term(layout, atom, config, |m| C64::from_polar(1.0, (atom.omega0 - m.omega()) * t))
}

/// `sum_k a_k^dagger a_k + |+><+|`, conserved by the RWA Hamiltonian.
pub fn excitation_number(layout: &HilbertLayout) -> Result<Operator> {
    require_atom(layout)?;
    let fd = layout.field_dim();
    let base = diagonal_operator(layout, |_, n| n as f64);
    let d = DVector::from_iterator(layout.dim(), (0..layout.dim()).map(|i| base.get(i, i) + if i >= fd { 1.0 } else { 0.0 }));
    Ok(Operator::from_parts(Arc::new(layout.clone()), OpMatrix::from_diagonal(d)))
}

/// `(exp(-i Delta t) - 1) / Delta`, with the series `t (-i + ...)` near resonance.
pub fn emission_kernel(delta: f64, t: f64) -> C64 {
    let x = delta * t;
    if x.abs() < KERNEL_SERIES_THRESHOLD {
        // t sum_{m=1..4} (-i x)^{m-1} / m!
        let z = C64::new(0.0, -x);
        let mut term = C64::new(0.0, -1.0);
        let mut sum = term;
        for m in 2..=4 {
            term = term * z / m as f64;
            sum += term;
        }
        sum * t
    } else {
        (C64::from_polar(1.0, -x) - 1.0) / delta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    /// From the zero-photon (vacuum) sector.
    Spont,
    /// From sectors with `n >= 1` photons.
    Stim,
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Spont => "spont",
            Channel::Stim => "stim",
        })
    }
}

/// First-order amplitude into `|k, n+1, ->` from `|k, n, +>`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmissionEntry {
    pub mode: usize,
    pub label: ModeLabel,
    pub n_initial: usize,
    pub initial: C64,
    pub amplitude: C64,
    pub channel: Channel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmissionAmplitudes {
    pub t: f64,
    pub entries: Vec<EmissionEntry>,
}

impl EmissionAmplitudes {
    pub fn amplitude(&self, mode: usize, n_initial: usize) -> Option<C64> {
        self.entries.iter().find(|e| e.mode == mode && e.n_initial == n_initial).map(|e| e.amplitude)
    }

    pub fn channel(&self, channel: Channel) -> impl Iterator<Item = &EmissionEntry> {
        self.entries.iter().filter(move |e| e.channel == channel)
    }
}

fn check_excited(initial: &StateVector) -> Result<()> {
    require_atom(initial.layout())?;
    let fd = initial.layout().field_dim();
    if let Some((i, a)) = initial.amplitudes().iter().take(fd).enumerate().find(|(_, a)| a.norm() > NEGLIGIBLE_AMPLITUDE) {
        let b = initial.layout().unflatten(i)?;
        return Err(Error::NotExcited(format!(
            "ground-state component |{}, {}, -> has amplitude {a}",
            b.mode, b.n
        )));
    }
    Ok(())
}

/// First-order transition amplitudes for an initial state `sum Psi_{k,n} |k, n, +>`:
/// `omega_0 d K(omega_0 - omega_k, t) Psi_{k,n} sqrt(n+1) g_k^*` into `|k, n+1, ->`.
///
/// One entry per `(mode, n)` of the layout; modes absent from the initial state get exactly zero.
pub fn first_order_emission(initial: &StateVector, atom: &AtomParams, config: &FieldConfig, t: f64) -> Result<EmissionAmplitudes> {
    check_excited(initial)?;
    let layout = initial.layout();
    let mut entries = Vec::with_capacity(layout.field_dim());
    for (k, mode) in layout.modes().iter().enumerate() {
        let g = coupling(mode, atom, config)?;
        let kernel = emission_kernel(atom.omega0 - mode.omega(), t);
        for n in 0..=layout.nmax() {
            let psi = initial.amplitude(BasisIndex::with_atom(k, n, AtomLevel::Excited))?;
            let amplitude = kernel * psi * (n as f64 + 1.0).sqrt() * g.conj() * (atom.omega0 * atom.d);
            entries.push(EmissionEntry {
                mode: k,
                label: *mode,
                n_initial: n,
                initial: psi,
                amplitude,
                channel: if n == 0 { Channel::Spont } else { Channel::Stim },
            });
        }
    }
    Ok(EmissionAmplitudes { t, entries })
}

/// Interaction-picture state `|Psi(0)> + first-order correction`, from the closed form.
pub fn first_order_state(initial: &StateVector, atom: &AtomParams, config: &FieldConfig, t: f64) -> Result<StateVector> {
    let amps = first_order_emission(initial, atom, config, t)?;
    let layout = initial.layout();
    let mut out = initial.amplitudes().clone();
    for e in amps.entries.iter().filter(|e| e.initial.norm() > 0.0) {
        if e.n_initial == layout.nmax() {
            return Err(Error::IndexOutOfRange(format!(
                "mode {} is populated at n = nmax = {}; emission needs nmax >= {}",
                e.mode,
                e.n_initial,
                e.n_initial + 1
            )));
        }
        out[layout.flatten(BasisIndex::with_atom(e.mode, e.n_initial + 1, AtomLevel::Ground))?] += e.amplitude;
    }
    StateVector::from_amplitudes(layout, out)
}

/// First-order state with the Dyson integral evaluated by adaptive quadrature.
pub fn first_order_state_quadrature(
    initial: &StateVector,
    atom: &AtomParams,
    config: &FieldConfig,
    t: f64,
    quad: &Quadrature,
) -> Result<StateVector> {
    check_excited(initial)?;
    let layout = initial.layout();
    dyson_first_order(|s| interaction_hamiltonian(layout, atom, config, s), initial, t, config.hbar, quad)
}

/// Exact interaction-picture state `exp(i H_0 t) exp(-i H t) |Psi(0)>` on the truncated space.
pub fn exact_interaction_state(initial: &StateVector, atom: &AtomParams, config: &FieldConfig, t: f64) -> Result<StateVector> {
    let layout = initial.layout();
    let h = atom_field_hamiltonian(layout, atom, config)?;
    let h0 = free_hamiltonian(layout, atom, config)?;
    let schrodinger = Propagator::new(&h, t, config.hbar)?.apply(initial)?;
    Propagator::new(&h0, -t, config.hbar)?.apply(&schrodinger)
}

/// Deviation of the first-order state from exact evolution for a sweep of dipole strengths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceStudy {
    /// `(omega_0 d max_k |g_k| t, ||psi_exact - psi_first||)` per dipole value.
    pub points: Vec<(f64, f64)>,
    /// Least-squares slope of `log deviation` against `log coupling`.
    pub slope: f64,
}

pub fn convergence_study(initial: &StateVector, atom: &AtomParams, config: &FieldConfig, t: f64, dipoles: &[f64]) -> Result<ConvergenceStudy> {
    let gmax = initial
        .layout()
        .modes()
        .iter()
        .map(|m| coupling(m, atom, config).map(|g| g.norm()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let mut points = Vec::with_capacity(dipoles.len());
    for &d in dipoles {
        let a = atom.with_dipole(d);
        let exact = exact_interaction_state(initial, &a, config, t)?;
        let approx = first_order_state(initial, &a, config, t)?;
        points.push((atom.omega0 * d * gmax * t, exact.distance(&approx)?));
    }
    Ok(ConvergenceStudy { slope: loglog_slope(&points), points })
}

pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Membership in the zero-photon subspace and the (finite, state-dependent) field energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VacuumReport {
    pub in_vacuum: bool,
    /// `<H_field>`; equals `sum |psi_k|^2 hbar omega_k / 2` inside the vacuum subspace.
    pub energy: f64,
}

pub fn vacuum_subspace_check(state: &StateVector, config: &FieldConfig) -> Result<VacuumReport> {
    let in_vacuum = state.components().all(|(b, a)| b.n == 0 || a.norm() < NEGLIGIBLE_AMPLITUDE);
    let energy = hamiltonian(state.layout(), config).expect(state)?.re;
    Ok(VacuumReport { in_vacuum, energy })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_atom(omega0: f64, d: f64) -> AtomParams {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        // u = e_+(z)*, so that e_+(z) . u = 1
        AtomParams::new(omega0, d, [C64::new(r, 0.0), C64::new(0.0, -r), C64::new(0.0, 0.0)]).unwrap()
    }

    #[test]
    fn coupling_plug_in() {
        let cfg = FieldConfig::default();
        let m = ModeLabel::field(1, [0.0, 0.0, 2.0], 0, 1.0).unwrap();
        let g = coupling(&m, &z_atom(1.0, 1.0), &cfg).unwrap();
        assert!((g - C64::new(0.0, 0.5)).norm() < 1e-15);
        let along = AtomParams::new(1.0, 1.0, [C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]).unwrap();
        for s in [1, -1] {
            let m = ModeLabel::field(s, [0.0, 0.0, 2.0], 0, 1.0).unwrap();
            assert_eq!(coupling(&m, &along, &cfg).unwrap().norm(), 0.0);
        }
        assert!(coupling(&ModeLabel::abstract_mode(1.0, 0).unwrap(), &along, &cfg).is_err());
    }

    #[test]
    fn atom_params_validation() {
        let u = [C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        assert!(AtomParams::new(0.0, 1.0, u).is_err());
        assert!(AtomParams::new(1.0, -1.0, u).is_err());
        assert!(AtomParams::new(1.0, 1.0, [C64::new(2.0, 0.0); 3]).is_err());
    }

    #[test]
    fn kernel_branches() {
        assert_eq!(emission_kernel(0.0, 1.0), C64::new(0.0, -1.0));
        // the series and the closed form agree across the switch
        let (d, t) = (0.999e-6, 1.0);
        let series = emission_kernel(d, t);
        let direct = (C64::from_polar(1.0, -d * t) - 1.0) / d;
        assert!((series - direct).norm() < 1e-9);
        let far = emission_kernel(2.0, 0.3);
        assert!((far - (C64::from_polar(1.0, -0.6) - 1.0) / 2.0).norm() < 1e-15);
    }

    #[test]
    fn rejects_ground_components_and_fieldless_layouts() {
        let cfg = FieldConfig::default();
        let m = ModeLabel::field(1, [0.0, 0.0, 1.0], 0, 1.0).unwrap();
        let l = HilbertLayout::new(vec![m], 2, true).unwrap();
        let s = StateVector::basis_state(&l, BasisIndex::with_atom(0, 0, AtomLevel::Ground)).unwrap();
        assert!(matches!(first_order_emission(&s, &z_atom(1.0, 0.1), &cfg, 1.0), Err(Error::NotExcited(_))));
        let bare = l.without_atom();
        assert_eq!(atom_field_hamiltonian(&bare, &z_atom(1.0, 0.1), &cfg), Err(Error::NoAtomFactor));
    }

    #[test]
    fn decoupled_spectrum() {
        let cfg = FieldConfig::default();
        let m = ModeLabel::field(1, [0.0, 0.0, 1.3], 0, 1.0).unwrap();
        let l = HilbertLayout::new(vec![m], 3, true).unwrap();
        let h = atom_field_hamiltonian(&l, &z_atom(0.9, 0.0), &cfg).unwrap();
        for b in l.basis() {
            let i = l.flatten(b).unwrap();
            let want = 1.3 * (b.n as f64 + 0.5) + 0.45 * b.atom.unwrap().sign();
            assert!((h.get(i, i).re - want).abs() < 1e-15);
        }
        assert_eq!(h.max_abs_diff(&free_hamiltonian(&l, &z_atom(0.9, 0.0), &cfg).unwrap()), 0.0);
    }
}
