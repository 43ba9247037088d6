//! Energy and momentum of the field as local operator identities.
//!
//! Because cross-mode products of mode operators vanish and `e_s . e_s = 0`,
//! `E(t,x).E(t,x)` and `B(t,x).B(t,x)` are each independent of `(t, x)`, so
//! the volume integral only contributes a factor `V`.

use serde::Serialize;

use super::operators::{energy_density, field_square, momentum_density, FieldKind, PoyntingOrdering};
use crate::algebra::{hamiltonian, momentum};
use crate::error::Result;
use crate::hilbert::{HilbertLayout, Operator};
use crate::units::FieldConfig;

/// One spacetime sample `(t, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplePoint {
    pub t: f64,
    pub x: [f64; 3],
}

impl SamplePoint {
    pub fn new(t: f64, x: [f64; 3]) -> Self {
        Self { t, x }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyIdentityReport {
    pub samples: Vec<SamplePoint>,
    /// `max |V (E.E + B.B)/2 - H|` at each sample.
    pub hamiltonian_deviation: Vec<f64>,
    /// Largest pairwise deviation of `E.E + B.B` between samples.
    pub density_variation: f64,
    /// Largest pairwise deviation of `E.E` between samples.
    pub electric_variation: f64,
    /// Largest pairwise deviation of `B.B` between samples.
    pub magnetic_variation: f64,
    /// `max_i |V (E x B)_i - c P_i|` at each sample, literal ordering.
    pub momentum_literal_deviation: Vec<f64>,
    /// Same with the symmetrized ordering.
    pub momentum_symmetrized_deviation: Vec<f64>,
}

impl EnergyIdentityReport {
    pub fn max_hamiltonian_deviation(&self) -> f64 {
        self.hamiltonian_deviation.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_momentum_deviation(&self, ordering: PoyntingOrdering) -> f64 {
        let v = match ordering {
            PoyntingOrdering::Literal => &self.momentum_literal_deviation,
            PoyntingOrdering::Symmetrized => &self.momentum_symmetrized_deviation,
        };
        v.iter().copied().fold(0.0, f64::max)
    }

    /// Orderings that reproduce the spectral momentum within `tol`.
    pub fn matching_orderings(&self, tol: f64) -> Vec<PoyntingOrdering> {
        [PoyntingOrdering::Literal, PoyntingOrdering::Symmetrized]
            .into_iter()
            .filter(|&o| self.max_momentum_deviation(o) < tol)
            .collect()
    }
}

/// Checks the energy and momentum identities at each sample point.
///
/// The field operators carry the plane-wave normalization in which `B` has the
/// units of `E`; the momentum identity then reads `V (E x B) = c P`.
pub fn energy_identity(layout: &HilbertLayout, config: &FieldConfig, samples: &[SamplePoint]) -> Result<EnergyIdentityReport> {
    let h = hamiltonian(layout, config);
    let p = momentum(layout, config)?;
    let mut densities = Vec::with_capacity(samples.len());
    let mut e_squares = Vec::with_capacity(samples.len());
    let mut b_squares = Vec::with_capacity(samples.len());
    let mut hamiltonian_deviation = Vec::with_capacity(samples.len());
    let mut literal = Vec::with_capacity(samples.len());
    let mut symmetrized = Vec::with_capacity(samples.len());

    for s in samples {
        let density = energy_density(layout, config, s.t, s.x)?;
        hamiltonian_deviation.push(density.scale_re(0.5 * config.volume).max_abs_diff(&h));
        densities.push(density);
        e_squares.push(field_square(layout, config, FieldKind::Electric, s.t, s.x)?);
        b_squares.push(field_square(layout, config, FieldKind::Magnetic, s.t, s.x)?);
        for (ordering, out) in [(PoyntingOrdering::Literal, &mut literal), (PoyntingOrdering::Symmetrized, &mut symmetrized)] {
            let flux = momentum_density(layout, config, ordering, s.t, s.x)?;
            let dev = (0..3)
                .map(|i| flux[i].scale_re(config.volume).max_abs_diff(&p[i].scale_re(config.c)))
                .fold(0.0, f64::max);
            out.push(dev);
        }
    }

    Ok(EnergyIdentityReport {
        samples: samples.to_vec(),
        hamiltonian_deviation,
        density_variation: pairwise_variation(&densities),
        electric_variation: pairwise_variation(&e_squares),
        magnetic_variation: pairwise_variation(&b_squares),
        momentum_literal_deviation: literal,
        momentum_symmetrized_deviation: symmetrized,
    })
}

fn pairwise_variation(ops: &[Operator]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            worst = worst.max(ops[i].max_abs_diff(&ops[j]));
        }
    }
    worst
}
