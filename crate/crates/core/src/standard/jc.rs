use nalgebra::DVector;

use crate::emission::{coupling, AtomParams};
use crate::error::Result;
use crate::hilbert::{ModeLabel, C64};
use crate::units::FieldConfig;

/// Closed-form Jaynes-Cummings model for one mode and a two-level atom.
///
/// States are indexed `atom * (nmax + 1) + n` with ground = 0, excited = 1.
/// The RWA coupling splits the space into 2x2 blocks `{|n,+>, |n+1,->}` plus
/// the uncoupled `|0,->` and, on a truncated space, `|nmax,+>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JaynesCummings {
    pub omega: f64,
    pub omega0: f64,
    /// `omega_0 d g`, the coefficient of `a sigma_+` divided by `hbar`.
    pub lambda: C64,
    pub nmax: usize,
}

impl JaynesCummings {
    pub fn new(mode: &ModeLabel, atom: &AtomParams, config: &FieldConfig, nmax: usize) -> Result<Self> {
        let g = coupling(mode, atom, config)?;
        Ok(Self { omega: mode.omega(), omega0: atom.omega0, lambda: g * (atom.omega0 * atom.d), nmax })
    }

    pub fn dim(&self) -> usize {
        2 * (self.nmax + 1)
    }

    fn excited(&self, n: usize) -> usize {
        self.nmax + 1 + n
    }

    /// `(E_{n,+}, E_{n+1,-}, off-diagonal)` of block `n`, all divided by `hbar`.
    fn block(&self, n: usize) -> (f64, f64, C64) {
        let upper = self.omega * (n as f64 + 0.5) + 0.5 * self.omega0;
        let lower = self.omega * (n as f64 + 1.5) - 0.5 * self.omega0;
        (upper, lower, self.lambda * (n as f64 + 1.0).sqrt())
    }

    /// Half the dressed-state splitting of block `n` (angular frequency).
    pub fn block_frequency(&self, n: usize) -> f64 {
        let (a, b, c) = self.block(n);
        (0.25 * (a - b).powi(2) + c.norm_sqr()).sqrt()
    }

    /// Energy gap between the two dressed states of block `n`.
    pub fn rabi_splitting(&self, n: usize, hbar: f64) -> f64 {
        2.0 * hbar * self.block_frequency(n)
    }

    /// Sorted eigenvalues.
    pub fn spectrum(&self, hbar: f64) -> Vec<f64> {
        let mut e = vec![hbar * (0.5 * self.omega - 0.5 * self.omega0)];
        e.push(hbar * (self.omega * (self.nmax as f64 + 0.5) + 0.5 * self.omega0));
        for n in 0..self.nmax {
            let (a, b, _) = self.block(n);
            let mean = 0.5 * (a + b);
            let w = self.block_frequency(n);
            e.push(hbar * (mean - w));
            e.push(hbar * (mean + w));
        }
        e.sort_by(f64::total_cmp);
        e
    }

    /// Schrödinger-picture evolution of `psi` over time `t`.
    pub fn evolve(&self, psi: &DVector<C64>, t: f64) -> DVector<C64> {
        assert_eq!(psi.len(), self.dim());
        let mut out = psi.clone();
        out[0] = psi[0] * C64::from_polar(1.0, -(0.5 * self.omega - 0.5 * self.omega0) * t);
        let top = self.excited(self.nmax);
        out[top] = psi[top] * C64::from_polar(1.0, -(self.omega * (self.nmax as f64 + 0.5) + 0.5 * self.omega0) * t);
        for n in 0..self.nmax {
            let (a, b, c) = self.block(n);
            let mean = 0.5 * (a + b);
            let half = 0.5 * (a - b);
            let w = self.block_frequency(n);
            let (cos, sinc) = if w == 0.0 { (1.0, t) } else { ((w * t).cos(), (w * t).sin() / w) };
            let i = C64::new(0.0, 1.0);
            let phase = C64::from_polar(1.0, -mean * t);
            // exp(-i K t) = cos(w t) - i sin(w t)/w K, K = [[half, c], [c*, -half]]
            let (ia, ib) = (self.excited(n), n + 1);
            let (pa, pb) = (psi[ia], psi[ib]);
            out[ia] = phase * ((cos - i * sinc * half) * pa - i * sinc * c * pb);
            out[ib] = phase * (-i * sinc * c.conj() * pa + (cos + i * sinc * half) * pb);
        }
        out
    }

    /// Excited-state population starting from `|0, +>`.
    pub fn excited_population_from_vacuum(&self, t: f64) -> f64 {
        let w = self.block_frequency(0);
        if w == 0.0 {
            return 1.0;
        }
        1.0 - (self.lambda.norm_sqr() / (w * w)) * (w * t).sin().powi(2)
    }
}
