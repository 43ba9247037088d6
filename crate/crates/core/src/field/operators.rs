use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::polarization::{cross, real_vec, CVec3, PolarizationBasis};
use crate::algebra::{compress, compressed, hamiltonian, momentum};
use crate::dynamics::heisenberg;
use crate::error::Result;
use crate::hilbert::{HilbertLayout, ModeLabel, OpMatrix, Operator, C64};
use crate::units::FieldConfig;

/// Three Cartesian components of a vector-valued operator.
pub type VectorOperator = [Operator; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    VectorPotential,
    Electric,
    Magnetic,
}

impl FieldKind {
    pub const ALL: [FieldKind; 3] = [FieldKind::VectorPotential, FieldKind::Electric, FieldKind::Magnetic];
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::VectorPotential => "A",
            FieldKind::Electric => "E",
            FieldKind::Magnetic => "B",
        })
    }
}

/// Positive-frequency coefficient of mode `mode` in the field `kind`:
/// the field is `sum_k (c_k a_k + h.c.)` with `c_k` returned here
/// (a complex 3-vector including the plane-wave phase).
pub(crate) fn mode_coefficient(mode: &ModeLabel, config: &FieldConfig, kind: FieldKind, t: f64, x: [f64; 3]) -> Result<CVec3> {
    mode.require_field()?;
    let basis = PolarizationBasis::new(mode.kappa())?;
    let e = basis.get(mode.s())?;
    let omega = mode.omega();
    let kappa = mode.kappa();
    let kx = kappa[0] * x[0] + kappa[1] * x[1] + kappa[2] * x[2];
    let wave = C64::from_polar(1.0, kx - omega * t);
    let (prefactor, vector) = match kind {
        FieldKind::VectorPotential => (C64::new((config.hbar / (2.0 * omega * config.volume)).sqrt(), 0.0), e),
        FieldKind::Electric => (C64::new(0.0, (config.hbar * omega / (2.0 * config.volume)).sqrt()), e),
        FieldKind::Magnetic => (
            C64::new(0.0, (config.hbar * omega / (2.0 * config.volume)).sqrt()),
            cross(&real_vec(basis.direction), &e),
        ),
    };
    Ok(vector.map(|v| prefactor * wave * v))
}

/// Field operator `F(t, x)` of the given kind, one Hermitian operator per component.
pub fn field_operator(layout: &HilbertLayout, config: &FieldConfig, kind: FieldKind, t: f64, x: [f64; 3]) -> Result<VectorOperator> {
    let coeffs: Vec<CVec3> = layout
        .modes()
        .iter()
        .map(|m| mode_coefficient(m, config, kind, t, x))
        .collect::<Result<_>>()?;
    let shared = Arc::new(layout.clone());
    let component = |i: usize| {
        let mut entries = Vec::new();
        for atom in 0..layout.atom_levels().max(1) {
            for (k, c) in coeffs.iter().enumerate() {
                for n in 1..=layout.nmax() {
                    let row = layout.flat_unchecked(k, n - 1, atom);
                    let col = layout.flat_unchecked(k, n, atom);
                    let v = c[i] * (n as f64).sqrt();
                    entries.push((row, col, v));
                    entries.push((col, row, v.conj()));
                }
            }
        }
        Operator::from_parts(shared.clone(), OpMatrix::from_triplets(layout.dim(), entries))
    };
    Ok(std::array::from_fn(component))
}

pub fn vector_potential(layout: &HilbertLayout, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<VectorOperator> {
    field_operator(layout, config, FieldKind::VectorPotential, t, x)
}

pub fn electric(layout: &HilbertLayout, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<VectorOperator> {
    field_operator(layout, config, FieldKind::Electric, t, x)
}

pub fn magnetic(layout: &HilbertLayout, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<VectorOperator> {
    field_operator(layout, config, FieldKind::Magnetic, t, x)
}

/// `F . G = sum_i F_i G_i`.
pub fn dot_op(f: &VectorOperator, g: &VectorOperator) -> Operator {
    &(&f[0] * &g[0] + &f[1] * &g[1]) + &(&f[2] * &g[2])
}

/// Literal operator cross product, `(F x G)_i = F_j G_k - F_k G_j`.
pub fn cross_op(f: &VectorOperator, g: &VectorOperator) -> VectorOperator {
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &f[j] * &g[k] - &f[k] * &g[j]
    })
}

/// Ordering used for the operator Poynting vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PoyntingOrdering {
    /// `E x B` as written.
    Literal,
    /// `(E x B - B x E) / 2`, Hermitian by construction.
    Symmetrized,
}

pub fn poynting(e: &VectorOperator, b: &VectorOperator, ordering: PoyntingOrdering) -> VectorOperator {
    let eb = cross_op(e, b);
    match ordering {
        PoyntingOrdering::Literal => eb,
        PoyntingOrdering::Symmetrized => {
            let be = cross_op(b, e);
            std::array::from_fn(|i| (&eb[i] - &be[i]).scale_re(0.5))
        }
    }
}

/// `E(t,x) . E(t,x) + B(t,x) . B(t,x)` as the compression of the untruncated product.
pub fn energy_density(layout: &HilbertLayout, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<Operator> {
    compressed(layout, |big| {
        let e = electric(big, config, t, x)?;
        let b = magnetic(big, config, t, x)?;
        Ok(dot_op(&e, &e) + dot_op(&b, &b))
    })
}

/// Compressed `F(t,x) . F(t,x)` for a single field kind.
pub fn field_square(layout: &HilbertLayout, config: &FieldConfig, kind: FieldKind, t: f64, x: [f64; 3]) -> Result<Operator> {
    compressed(layout, |big| {
        let f = field_operator(big, config, kind, t, x)?;
        Ok(dot_op(&f, &f))
    })
}

/// Compressed Poynting operator at `(t, x)`.
pub fn momentum_density(
    layout: &HilbertLayout,
    config: &FieldConfig,
    ordering: PoyntingOrdering,
    t: f64,
    x: [f64; 3],
) -> Result<VectorOperator> {
    let big = layout.with_nmax(layout.nmax() + 1)?;
    let e = electric(&big, config, t, x)?;
    let b = magnetic(&big, config, t, x)?;
    let [sx, sy, sz] = poynting(&e, &b, ordering);
    Ok([compress(&sx, layout)?, compress(&sy, layout)?, compress(&sz, layout)?])
}

/// `exp(i P.x / hbar) F exp(-i P.x / hbar)` with `P.x = H t - P_vec . x_vec`.
pub fn spacetime_translate(op: &Operator, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<Operator> {
    let generator = translation_generator(op.layout(), config, t, x)?;
    heisenberg(&generator, op, 1.0, config.hbar)
}

/// Diagonal generator `H t - P_vec . x_vec`.
pub fn translation_generator(layout: &HilbertLayout, config: &FieldConfig, t: f64, x: [f64; 3]) -> Result<Operator> {
    let h = hamiltonian(layout, config);
    let p = momentum(layout, config)?;
    Ok(h.scale_re(t) - p[0].scale_re(x[0]) - p[1].scale_re(x[1]) - p[2].scale_re(x[2]))
}
