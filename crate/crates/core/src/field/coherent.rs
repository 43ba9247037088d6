//! Coherent-superposition states `sum_k Phi_k |k>|alpha_k>` on a truncated Fock space.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use super::operators::{field_operator, FieldKind};
use super::polarization::{cross, real_vec, PolarizationBasis};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertLayout, StateVector, C64};
use crate::units::FieldConfig;

/// Largest Poisson mass allowed above the truncation level.
pub const COHERENT_TAIL_TOL: f64 = 1e-10;

/// Weight and coherent amplitude for one mode of a layout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoherentMode {
    pub mode: usize,
    pub phi: C64,
    pub alpha: C64,
}

/// Modes not listed carry zero weight.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoherentSpec {
    pub modes: Vec<CoherentMode>,
}

impl CoherentSpec {
    pub fn new(modes: Vec<CoherentMode>) -> Self {
        Self { modes }
    }

    /// Entries with `sum |Phi|^2 = 1`.
    pub fn normalized(&self) -> Result<Vec<CoherentMode>> {
        for (i, m) in self.modes.iter().enumerate() {
            if self.modes[..i].iter().any(|o| o.mode == m.mode) {
                return Err(Error::InvalidParameter(format!("mode {} listed twice in coherent spec", m.mode)));
            }
        }
        let total: f64 = self.modes.iter().map(|m| m.phi.norm_sqr()).sum();
        if total == 0.0 {
            return Err(Error::ZeroState);
        }
        let scale = total.sqrt();
        Ok(self.modes.iter().map(|m| CoherentMode { phi: m.phi / scale, ..*m }).collect())
    }
}

/// Poisson mass `sum_{n > nmax} e^{-|alpha|^2} |alpha|^{2n} / n!`.
pub fn poisson_tail(alpha_abs: f64, nmax: usize) -> f64 {
    let mean = alpha_abs * alpha_abs;
    if mean == 0.0 {
        return 0.0;
    }
    // log of the first neglected term, n = nmax + 1
    let n0 = nmax + 1;
    let log_first = -mean + n0 as f64 * mean.ln() - ln_factorial(n0);
    let mut term = log_first.exp();
    let mut sum = 0.0;
    let mut n = n0;
    while term > 0.0 {
        sum += term;
        if n as f64 > mean && term < sum * 1e-17 {
            break;
        }
        n += 1;
        term *= mean / n as f64;
    }
    sum
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Smallest truncation whose Poisson tail is below [`COHERENT_TAIL_TOL`].
pub fn required_nmax(alpha_abs: f64) -> usize {
    let mut n = 1;
    while poisson_tail(alpha_abs, n) >= COHERENT_TAIL_TOL {
        n += 1;
    }
    n
}

/// Renormalized truncated Poisson amplitudes `e^{-|a|^2/2} a^n / sqrt(n!)`, `n = 0..=nmax`.
pub fn coherent_amplitudes(alpha: C64, nmax: usize) -> Result<DVector<C64>> {
    let tail = poisson_tail(alpha.norm(), nmax);
    if tail >= COHERENT_TAIL_TOL {
        return Err(Error::CoherentTruncation {
            alpha: alpha.norm(),
            nmax,
            required: required_nmax(alpha.norm()),
            tail,
        });
    }
    let mut c = DVector::from_element(nmax + 1, C64::new(0.0, 0.0));
    c[0] = C64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    for n in 1..=nmax {
        c[n] = c[n - 1] * alpha / (n as f64).sqrt();
    }
    let norm = c.norm();
    Ok(c.unscale(norm))
}

/// `sum_k Phi_k |k> |alpha_k>` with renormalized truncated coherent blocks.
pub fn coherent_state(layout: &HilbertLayout, spec: &CoherentSpec) -> Result<StateVector> {
    if layout.has_atom() {
        return Err(Error::LayoutMismatch("coherent states are defined on field layouts without an atom".into()));
    }
    let mut amps = DVector::from_element(layout.dim(), C64::new(0.0, 0.0));
    for m in spec.normalized()? {
        layout.mode(m.mode)?;
        if m.phi == C64::new(0.0, 0.0) {
            continue;
        }
        let block = coherent_amplitudes(m.alpha, layout.nmax())?;
        for (n, c) in block.iter().enumerate() {
            amps[layout.flat_unchecked(m.mode, n, 0)] = m.phi * c;
        }
    }
    StateVector::from_amplitudes(layout, amps)?.normalized()
}

/// Expectation value of a field at `(t, x)`; real because the operators are Hermitian.
pub fn field_average(state: &StateVector, config: &FieldConfig, kind: FieldKind, t: f64, x: [f64; 3]) -> Result<[f64; 3]> {
    let ops = field_operator(state.layout(), config, kind, t, x)?;
    let mut out = [0.0; 3];
    for (o, op) in out.iter_mut().zip(ops.iter()) {
        *o = op.expect(state)?.re;
    }
    Ok(out)
}

/// Averages of `A`, `E`, `B` at one spacetime point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldTriple {
    pub a: [f64; 3],
    pub e: [f64; 3],
    pub b: [f64; 3],
}

impl FieldTriple {
    pub fn get(&self, kind: FieldKind) -> [f64; 3] {
        match kind {
            FieldKind::VectorPotential => self.a,
            FieldKind::Electric => self.e,
            FieldKind::Magnetic => self.b,
        }
    }

    pub fn max_abs_diff(&self, other: &FieldTriple) -> f64 {
        FieldKind::ALL
            .iter()
            .flat_map(|&k| {
                let (x, y) = (self.get(k), other.get(k));
                (0..3).map(move |i| (x[i] - y[i]).abs())
            })
            .fold(0.0, f64::max)
    }
}

pub fn field_averages(state: &StateVector, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<FieldTriple> {
    Ok(FieldTriple {
        a: field_average(state, config, FieldKind::VectorPotential, t, x)?,
        e: field_average(state, config, FieldKind::Electric, t, x)?,
        b: field_average(state, config, FieldKind::Magnetic, t, x)?,
    })
}

/// Classical fields of a coherent superposition: the mode sums of monochromatic
/// plane waves weighted by `|Phi_k|^2`, with `alpha_k e^{-i(omega t - kappa.x)}`.
///
/// Evaluated directly from the mode data, without building any operator.
pub fn classical_formula(layout: &HilbertLayout, spec: &CoherentSpec, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<FieldTriple> {
    let mut out = FieldTriple { a: [0.0; 3], e: [0.0; 3], b: [0.0; 3] };
    for m in spec.normalized()? {
        let mode = layout.mode(m.mode)?;
        mode.require_field()?;
        let basis = PolarizationBasis::new(mode.kappa())?;
        let e = basis.get(mode.s())?;
        let ne = cross(&real_vec(basis.direction), &e);
        let w = mode.omega();
        let k = mode.kappa();
        let phase_arg = w * t - (k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
        let z = m.alpha * C64::from_polar(1.0, -phase_arg);
        let weight = m.phi.norm_sqr();
        let amp_a = (config.hbar / (2.0 * w * config.volume)).sqrt();
        let amp_e = (config.hbar * w / (2.0 * config.volume)).sqrt();
        for i in 0..3 {
            // z v + c.c. = 2 Re(z v);  i (z v - c.c.) = -2 Im(z v)
            out.a[i] += weight * amp_a * 2.0 * (z * e[i]).re;
            out.e[i] += weight * amp_e * -2.0 * (z * e[i]).im;
            out.b[i] += weight * amp_e * -2.0 * (z * ne[i]).im;
        }
    }
    Ok(out)
}
