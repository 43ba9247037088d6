//! Conventional multimode quantization on a tensor product of Fock spaces,
//! kept at desk scale as a reference for the single-oscillator scheme.
//!
//! Basis ordering: atom level slowest (ground, excited), then mode 0 down to
//! mode `M - 1` fastest, each occupation ascending.

mod compare;
mod jc;

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

pub use compare::{compare_report, AlgebraComparison, ComparisonReport, Dimensions, EmissionComparison, VacuumComparison};
pub use jc::JaynesCummings;

use crate::emission::{coupling, emission_kernel, AtomParams};
use crate::error::{Error, Result};
use crate::hilbert::{AtomLevel, ModeLabel, OpMatrix, C64};
use crate::units::FieldConfig;

pub const MAX_MODES: usize = 4;
pub const MAX_NMAX: usize = 3;
pub const MAX_DIM: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct StandardLayout {
    modes: Arc<Vec<ModeLabel>>,
    nmax: usize,
    atom: bool,
}

impl StandardLayout {
    pub fn new(modes: Vec<ModeLabel>, nmax: usize, with_atom: bool) -> Result<Self> {
        if modes.is_empty() {
            return Err(Error::EmptyModeSet);
        }
        if nmax < 1 {
            return Err(Error::TruncationTooSmall(nmax));
        }
        if modes.len() > MAX_MODES {
            return Err(Error::OracleBounds(format!("{} modes > {MAX_MODES}", modes.len())));
        }
        if nmax > MAX_NMAX {
            return Err(Error::OracleBounds(format!("nmax {nmax} > {MAX_NMAX}")));
        }
        for (i, m) in modes.iter().enumerate() {
            if modes[..i].contains(m) {
                return Err(Error::DuplicateMode(m.to_string()));
            }
        }
        let layout = Self { modes: Arc::new(modes), nmax, atom: with_atom };
        if layout.dim() > MAX_DIM {
            return Err(Error::OracleBounds(format!("dimension {} > {MAX_DIM}", layout.dim())));
        }
        Ok(layout)
    }

    pub fn modes(&self) -> &[ModeLabel] {
        &self.modes
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn has_atom(&self) -> bool {
        self.atom
    }

    /// `(N + 1)^M`.
    pub fn field_dim(&self) -> usize {
        (self.nmax + 1).pow(self.modes.len() as u32)
    }

    pub fn dim(&self) -> usize {
        self.field_dim() * if self.atom { 2 } else { 1 }
    }

    /// Occupation numbers of a field-sector index.
    pub fn occupations(&self, field_index: usize) -> Vec<usize> {
        let base = self.nmax + 1;
        let m = self.modes.len();
        let mut occ = vec![0; m];
        let mut rest = field_index;
        for k in (0..m).rev() {
            occ[k] = rest % base;
            rest /= base;
        }
        occ
    }

    pub fn field_index(&self, occupations: &[usize]) -> Result<usize> {
        if occupations.len() != self.modes.len() || occupations.iter().any(|&n| n > self.nmax) {
            return Err(Error::IndexOutOfRange(format!("occupations {occupations:?}")));
        }
        Ok(occupations.iter().fold(0, |acc, &n| acc * (self.nmax + 1) + n))
    }

    pub fn index(&self, occupations: &[usize], atom: Option<AtomLevel>) -> Result<usize> {
        let f = self.field_index(occupations)?;
        match (atom, self.atom) {
            (None, false) => Ok(f),
            (Some(level), true) => Ok(level.index() * self.field_dim() + f),
            (Some(_), false) => Err(Error::NoAtomFactor),
            (None, true) => Err(Error::IndexOutOfRange("atom level required".into())),
        }
    }

    fn sectors(&self) -> usize {
        if self.atom {
            2
        } else {
            1
        }
    }
}

/// `1 (x) ... (x) a (x) ... (x) 1` with `a` in slot `k`.
pub fn standard_mode_annihilator(layout: &StandardLayout, k: usize) -> Result<OpMatrix> {
    if k >= layout.modes.len() {
        return Err(Error::IndexOutOfRange(format!("mode {k} >= {}", layout.modes.len())));
    }
    let fd = layout.field_dim();
    let mut entries = Vec::new();
    for sector in 0..layout.sectors() {
        for col in 0..fd {
            let mut occ = layout.occupations(col);
            let n = occ[k];
            if n == 0 {
                continue;
            }
            occ[k] -= 1;
            let row = layout.field_index(&occ)?;
            entries.push((sector * fd + row, sector * fd + col, C64::new((n as f64).sqrt(), 0.0)));
        }
    }
    Ok(OpMatrix::from_triplets(layout.dim(), entries))
}

/// `sum_k hbar omega_k (n_k + 1/2)` (no normal ordering), diagonal.
pub fn standard_field_hamiltonian(layout: &StandardLayout, config: &FieldConfig) -> OpMatrix {
    let fd = layout.field_dim();
    let d = DVector::from_iterator(
        layout.dim(),
        (0..layout.dim()).map(|i| {
            let occ = layout.occupations(i % fd);
            let e: f64 = layout.modes.iter().zip(&occ).map(|(m, &n)| config.hbar * m.omega() * (n as f64 + 0.5)).sum();
            C64::new(e, 0.0)
        }),
    );
    OpMatrix::from_diagonal(d)
}

/// Dipole/RWA Hamiltonian on the tensor-product space.
pub fn standard_atom_field_hamiltonian(layout: &StandardLayout, atom: &AtomParams, config: &FieldConfig) -> Result<OpMatrix> {
    if !layout.atom {
        return Err(Error::NoAtomFactor);
    }
    let fd = layout.field_dim();
    let sigma3 = OpMatrix::from_diagonal(DVector::from_iterator(
        layout.dim(),
        (0..layout.dim()).map(|i| C64::new(if i < fd { -1.0 } else { 1.0 }, 0.0)),
    ));
    // sigma_+ = |+><-|
    let sigma_plus = OpMatrix::from_triplets(layout.dim(), (0..fd).map(|i| (fd + i, i, C64::new(1.0, 0.0))));
    let mut h = standard_field_hamiltonian(layout, config).add(&sigma3.scale(C64::new(0.5 * config.hbar * atom.omega0, 0.0)));
    for (k, mode) in layout.modes.iter().enumerate() {
        let g = coupling(mode, atom, config)? * (config.hbar * atom.omega0 * atom.d);
        let term = standard_mode_annihilator(layout, k)?.matmul(&sigma_plus).scale(g);
        h = h.add(&term).add(&term.adjoint());
    }
    Ok(h)
}

/// Unique vacuum `|0, ..., 0>` (times `|+>` with an atom).
pub fn standard_vacuum(layout: &StandardLayout) -> DVector<C64> {
    let mut v = DVector::from_element(layout.dim(), C64::new(0.0, 0.0));
    let i = if layout.atom { layout.field_dim() } else { 0 };
    v[i] = C64::new(1.0, 0.0);
    v
}

/// `sum_k hbar omega_k / 2`, independent of any state.
pub fn standard_vacuum_energy(layout: &StandardLayout, config: &FieldConfig) -> f64 {
    layout.modes.iter().map(|m| 0.5 * config.hbar * m.omega()).sum()
}

/// First-order amplitude into `|1_k> (x) |->` from `|vac> (x) |+>`:
/// `omega_0 d g_k^* (exp(-i Delta_k t) - 1) / Delta_k`.
pub fn standard_first_order_emission(atom: &AtomParams, layout: &StandardLayout, config: &FieldConfig, t: f64) -> Result<Vec<C64>> {
    layout
        .modes
        .iter()
        .map(|m| Ok(emission_kernel(atom.omega0 - m.omega(), t) * coupling(m, atom, config)?.conj() * (atom.omega0 * atom.d)))
        .collect()
}

/// Hermitian eigendecomposition `(eigenvalues, eigenvectors)`.
pub fn hermitian_eigen(h: &OpMatrix) -> (DVector<f64>, DMatrix<C64>) {
    let eig = h.to_dense().symmetric_eigen();
    (eig.eigenvalues, eig.eigenvectors)
}

/// Sorted spectrum of a Hermitian matrix.
pub fn spectrum(h: &OpMatrix) -> Vec<f64> {
    let mut e: Vec<f64> = hermitian_eigen(h).0.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

/// `exp(-i H t / hbar) psi` through the eigendecomposition of `H`.
pub fn standard_evolve(h: &OpMatrix, psi: &DVector<C64>, t: f64, hbar: f64) -> DVector<C64> {
    let (e, v) = hermitian_eigen(h);
    let coeffs = v.adjoint() * psi;
    let phased = DVector::from_iterator(coeffs.len(), coeffs.iter().zip(e.iter()).map(|(c, &ev)| c * C64::from_polar(1.0, -ev * t / hbar)));
    v * phased
}
