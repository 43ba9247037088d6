//! Frequency operator, projector-valued mode operators and the modified
//! oscillator algebra.
//!
//! Mode operators have the form `a_k = |k><k| (x) a`, so products of
//! operators belonging to different modes vanish identically. On a Fock
//! space truncated at `n <= N` the commutator `[a, a^dagger]` picks up the
//! boundary term `-(N + 1)|N><N|`; the algebra is therefore verified on the
//! interior subspace `n <= N - 1` and the boundary term is checked exactly.

use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{HilbertLayout, OpMatrix, Operator, C64};
use crate::units::FieldConfig;

/// Default absolute tolerance for algebra checks.
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Single-factor lowering operator `1 (x) a [(x) 1_atom]`.
pub fn ladder(layout: &HilbertLayout) -> Operator {
    ladder_on_modes(layout, |_| true)
}

/// `a_k = |k><k| (x) a`, zero outside the mode-`k` Fock block.
pub fn mode_annihilator(layout: &HilbertLayout, k: usize) -> Result<Operator> {
    layout.mode(k)?;
    Ok(ladder_on_modes(layout, |m| m == k))
}

pub fn mode_creator(layout: &HilbertLayout, k: usize) -> Result<Operator> {
    Ok(mode_annihilator(layout, k)?.adjoint())
}

fn ladder_on_modes(layout: &HilbertLayout, select: impl Fn(usize) -> bool) -> Operator {
    let mut entries = Vec::new();
    for atom in 0..layout.atom_levels().max(1) {
        for k in (0..layout.mode_count()).filter(|&k| select(k)) {
            for n in 1..=layout.nmax() {
                let row = layout.flat_unchecked(k, n - 1, atom);
                let col = layout.flat_unchecked(k, n, atom);
                entries.push((row, col, C64::new((n as f64).sqrt(), 0.0)));
            }
        }
    }
    Operator::from_parts(Arc::new(layout.clone()), OpMatrix::from_triplets(layout.dim(), entries))
}

/// Diagonal operator built from a per-basis-vector function.
pub(crate) fn diagonal_operator(layout: &HilbertLayout, f: impl Fn(usize, usize) -> f64) -> Operator {
    let d = DVector::from_iterator(layout.dim(), layout.basis().map(|b| C64::new(f(b.mode, b.n), 0.0)));
    Operator::from_parts(Arc::new(layout.clone()), OpMatrix::from_diagonal(d))
}

/// Frequency operator: eigenvalue `omega_k` on every `|k, n>`.
pub fn frequency_operator(layout: &HilbertLayout) -> Operator {
    let omegas: Vec<f64> = layout.modes().iter().map(|m| m.omega()).collect();
    diagonal_operator(layout, |k, _| omegas[k])
}

/// Projector `|k><k| (x) 1` onto the mode-`k` block.
pub fn mode_projector(layout: &HilbertLayout, k: usize) -> Result<Operator> {
    layout.mode(k)?;
    Ok(diagonal_operator(layout, |m, _| if m == k { 1.0 } else { 0.0 }))
}

/// `a_k^dagger a_k`: eigenvalues `0..=N` on the mode-`k` block.
pub fn number_operator(layout: &HilbertLayout, k: usize) -> Result<Operator> {
    layout.mode(k)?;
    Ok(diagonal_operator(layout, |m, n| if m == k { n as f64 } else { 0.0 }))
}

/// Free Hamiltonian, diagonal with entries `hbar omega_k (n + 1/2)`.
pub fn hamiltonian(layout: &HilbertLayout, config: &FieldConfig) -> Operator {
    let omegas: Vec<f64> = layout.modes().iter().map(|m| m.omega()).collect();
    diagonal_operator(layout, |k, n| config.hbar * omegas[k] * (n as f64 + 0.5))
}

/// Builds an operator that is quadratic in ladder operators on a layout
/// with one extra Fock level, then keeps the `n <= N` block.
///
/// This is the compression of the untruncated operator: every product
/// `a a^dagger` sees the level `N + 1` it needs, so no boundary term appears.
pub fn compressed(layout: &HilbertLayout, build: impl FnOnce(&HilbertLayout) -> Result<Operator>) -> Result<Operator> {
    let larger = layout.with_nmax(layout.nmax() + 1)?;
    let big = build(&larger)?;
    compress(&big, layout)
}

/// Restricts an operator on a higher-truncation layout to the `n <= N` block of `layout`.
pub fn compress(op: &Operator, layout: &HilbertLayout) -> Result<Operator> {
    let keep = layout.embedding_in(op.layout())?;
    Ok(Operator::from_parts(Arc::new(layout.clone()), op.matrix().restrict(&keep)))
}

/// `hbar Omega (x) (a^dagger a + a a^dagger) / 2`, the Kronecker-product form.
pub fn hamiltonian_frequency_form(layout: &HilbertLayout, config: &FieldConfig) -> Result<Operator> {
    compressed(layout, |big| {
        let a = ladder(big);
        let ad = a.adjoint();
        let sym = (&ad * &a + &a * &ad).scale_re(0.5);
        Ok((&frequency_operator(big) * &sym).scale_re(config.hbar))
    })
}

/// `(1/2) sum_k hbar omega_k (a_k^dagger a_k + a_k a_k^dagger)`, the mode-sum form.
pub fn hamiltonian_mode_sum(layout: &HilbertLayout, config: &FieldConfig) -> Result<Operator> {
    compressed(layout, |big| {
        let mut h = Operator::zeros(big);
        for (k, mode) in big.modes().iter().enumerate() {
            let a = mode_annihilator(big, k)?;
            let ad = a.adjoint();
            h = h + (&ad * &a + &a * &ad).scale_re(0.5 * config.hbar * mode.omega());
        }
        Ok(h)
    })
}

/// Field momentum, three diagonal components `hbar kappa_i (n + 1/2)`.
pub fn momentum(layout: &HilbertLayout, config: &FieldConfig) -> Result<[Operator; 3]> {
    for m in layout.modes() {
        m.require_field()?;
    }
    let kappas: Vec<[f64; 3]> = layout.modes().iter().map(|m| m.kappa()).collect();
    Ok(std::array::from_fn(|i| diagonal_operator(layout, |k, n| config.hbar * kappas[k][i] * (n as f64 + 0.5))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `[a_k, a_l^dagger] = delta_kl P_k (x) 1`
    Commutator,
    /// `a_k a_l = delta_kl a_k^2`
    AnnihilatorProduct,
    /// `a_k^dagger a_l^dagger = delta_kl (a_k^dagger)^2`
    CreatorProduct,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Commutator => "commutator",
            Relation::AnnihilatorProduct => "annihilator_product",
            Relation::CreatorProduct => "creator_product",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Subspace {
    Full,
    Interior,
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subspace::Full => "full",
            Subspace::Interior => "interior",
        })
    }
}

/// Outcome of one relation check for a mode pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraReport {
    pub relation: Relation,
    pub k: usize,
    pub l: usize,
    pub subspace: Subspace,
    pub deviation: f64,
    pub pass: bool,
}

/// Full-space boundary term of `[a_k, a_k^dagger]` for one mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryReport {
    pub k: usize,
    /// `-<k,N|[a_k, a_k^dagger] - P_k|k,N>`, expected `N + 1`.
    pub boundary_entry: f64,
    /// Max deviation of `[a_k, a_k^dagger] - P_k` from `-(N + 1)|k,N><k,N|`.
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraSuite {
    pub relations: Vec<AlgebraReport>,
    pub boundary: Vec<BoundaryReport>,
}

impl AlgebraSuite {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass) && self.boundary.iter().all(|b| b.pass)
    }
}

/// Checks the three relations for all mode pairs plus the boundary term of
/// each diagonal commutator. Yields `3 M^2` relation reports and `M` boundary reports.
pub fn verify_algebra(layout: &HilbertLayout, tol: f64) -> Result<AlgebraSuite> {
    verify_algebra_with(layout, tol, |k| mode_annihilator(layout, k))
}

/// [`verify_algebra`] with a caller-supplied annihilator factory.
pub fn verify_algebra_with<F>(layout: &HilbertLayout, tol: f64, annihilator: F) -> Result<AlgebraSuite>
where
    F: Fn(usize) -> Result<Operator>,
{
    let m = layout.mode_count();
    let lower: Vec<Operator> = (0..m).map(&annihilator).collect::<Result<_>>()?;
    for a in &lower {
        if a.layout() != layout {
            return Err(Error::LayoutMismatch("annihilator built on a different layout".into()));
        }
    }
    let upper: Vec<Operator> = lower.iter().map(Operator::adjoint).collect();
    let interior = layout.interior_indices();
    let zero = Operator::zeros(layout);
    let mut relations = Vec::with_capacity(3 * m * m);
    let mut boundary = Vec::with_capacity(m);
    let report = |relation, k, l, subspace, deviation: f64| AlgebraReport {
        relation,
        k,
        l,
        subspace,
        deviation,
        pass: deviation < tol,
    };

    for k in 0..m {
        let proj = mode_projector(layout, k)?;
        for l in 0..m {
            let comm = lower[k].commutator(&upper[l]);
            let expected = if k == l { proj.clone() } else { zero.clone() };
            let dev = comm.matrix().restrict(&interior).max_abs_diff(&expected.matrix().restrict(&interior));
            relations.push(report(Relation::Commutator, k, l, Subspace::Interior, dev));

            let prod = &lower[k] * &lower[l];
            let expected = if k == l { lower[k].pow(2) } else { zero.clone() };
            relations.push(report(Relation::AnnihilatorProduct, k, l, Subspace::Full, prod.max_abs_diff(&expected)));

            let prod = &upper[k] * &upper[l];
            let expected = if k == l { upper[k].pow(2) } else { zero.clone() };
            relations.push(report(Relation::CreatorProduct, k, l, Subspace::Full, prod.max_abs_diff(&expected)));

            if k == l {
                let nmax = layout.nmax();
                let edge = comm - &proj;
                let corner = layout.flat_unchecked(k, nmax, 0);
                let expected_edge = diagonal_operator(layout, |mm, n| {
                    if mm == k && n == nmax {
                        -((nmax + 1) as f64)
                    } else {
                        0.0
                    }
                });
                let deviation = edge.max_abs_diff(&expected_edge);
                boundary.push(BoundaryReport {
                    k,
                    boundary_entry: -edge.get(corner, corner).re,
                    deviation,
                    pass: deviation < tol,
                });
            }
        }
    }
    Ok(AlgebraSuite { relations, boundary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{BasisIndex, ModeLabel, StateVector};

    fn layout(omegas: &[f64], nmax: usize) -> HilbertLayout {
        let modes = omegas.iter().map(|&w| ModeLabel::abstract_mode(w, 0).unwrap()).collect();
        HilbertLayout::new(modes, nmax, false).unwrap()
    }

    fn dense_commutator(a: &Operator, b: &Operator) -> nalgebra::DMatrix<C64> {
        let (a, b) = (a.matrix().to_dense(), b.matrix().to_dense());
        &a * &b - &b * &a
    }

    #[test]
    fn ladder_elements() {
        let l = layout(&[1.0], 2);
        let a = ladder(&l);
        let s1 = StateVector::basis_state(&l, BasisIndex::new(0, 1)).unwrap();
        let s2 = StateVector::basis_state(&l, BasisIndex::new(0, 2)).unwrap();
        let s0 = StateVector::basis_state(&l, BasisIndex::new(0, 0)).unwrap();
        assert_eq!(a.apply(&s1).unwrap(), s0);
        assert_eq!(a.apply(&s2).unwrap().amplitudes()[1], C64::new(2f64.sqrt(), 0.0));
    }

    #[test]
    fn truncated_commutator_boundary() {
        let n = 4;
        let l = layout(&[1.0], n);
        let a = ladder(&l);
        let c = dense_commutator(&a, &a.adjoint());
        for i in 0..=n {
            for j in 0..=n {
                let want = match (i == j, i == n) {
                    (true, false) => 1.0,
                    (true, true) => -(n as f64),
                    _ => 0.0,
                };
                assert!((c[(i, j)] - C64::new(want, 0.0)).norm() < 1e-13, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn frequency_operator_structure() {
        let l = layout(&[1.0, 2.0], 2);
        let w = frequency_operator(&l);
        let d: Vec<f64> = w.matrix().diagonal().unwrap().iter().map(|v| v.re).collect();
        assert_eq!(d, vec![1.0, 1.0, 1.0, 2.0, 2.0, 2.0]);
        let h = hamiltonian(&l, &FieldConfig::default());
        assert!(dense_commutator(&w, &h).iter().all(|v| v.norm() < 1e-13));
    }

    #[test]
    fn mode_operators_are_block_local() {
        let l = layout(&[1.0, 2.0], 3);
        let a0 = mode_annihilator(&l, 0).unwrap();
        let a1 = mode_annihilator(&l, 1).unwrap();
        let k1 = StateVector::basis_state(&l, BasisIndex::new(0, 1)).unwrap();
        assert_eq!(a0.apply(&k1).unwrap(), StateVector::basis_state(&l, BasisIndex::new(0, 0)).unwrap());
        assert_eq!(a1.apply(&k1).unwrap().norm(), 0.0);
        assert_eq!((&a0 * &a1).max_abs(), 0.0);
        assert_eq!((a0.adjoint() * a1.adjoint()).max_abs(), 0.0);
        assert!(mode_annihilator(&l, 2).is_err());
    }

    #[test]
    fn hamiltonian_forms() {
        let cfg = FieldConfig::default();
        let l = layout(&[1.5], 3);
        let h = hamiltonian(&l, &cfg);
        assert_eq!(h.get(2, 2).re, 3.75);
        let l = layout(&[1.0, 2.5, 0.7], 4);
        let h = hamiltonian(&l, &cfg);
        let f = hamiltonian_frequency_form(&l, &cfg).unwrap();
        let s = hamiltonian_mode_sum(&l, &cfg).unwrap();
        assert!(h.max_abs_diff(&f) < 1e-12);
        assert!(h.max_abs_diff(&s) < 1e-12);
    }

    #[test]
    fn naive_truncated_mode_sum_differs_only_at_boundary() {
        let cfg = FieldConfig::default();
        let n = 3;
        let l = layout(&[2.0], n);
        let a = mode_annihilator(&l, 0).unwrap();
        let ad = a.adjoint();
        let naive = (&ad * &a + &a * &ad).scale_re(0.5 * 2.0);
        let diff = &naive - &hamiltonian(&l, &cfg);
        // a a^dagger lacks the (N+1) contribution at n = N
        assert!((diff.get(n, n).re + (n as f64 + 1.0)).abs() < 1e-13);
        assert!(diff.matrix().restrict(&l.interior_indices()).max_abs() < 1e-13);
    }

    #[test]
    fn momentum_components() {
        let cfg = FieldConfig::default();
        let m = ModeLabel::field(1, [0.0, 0.0, 2.0], 0, 1.0).unwrap();
        let l = HilbertLayout::new(vec![m], 2, false).unwrap();
        let p = momentum(&l, &cfg).unwrap();
        assert_eq!(p[2].get(0, 0).re, 1.0);
        assert_eq!(p[0].max_abs(), 0.0);
        assert!(matches!(momentum(&layout(&[1.0], 2), &cfg), Err(Error::AbstractMode(_))));
    }

    #[test]
    fn verify_algebra_default_size() {
        let l = layout(&[1.0, 2.0, 3.0, 4.0], 5);
        let suite = verify_algebra(&l, ALGEBRA_TOL).unwrap();
        assert_eq!(suite.relations.len(), 48);
        assert_eq!(suite.boundary.len(), 4);
        assert!(suite.all_pass());
        for r in suite.relations.iter().filter(|r| r.k != r.l) {
            assert_eq!(r.deviation, 0.0, "{r:?}");
        }
        for b in &suite.boundary {
            assert!((b.boundary_entry - 6.0).abs() < 1e-13);
            assert!(b.deviation < 1e-13);
        }
    }

    #[test]
    fn corrupted_annihilator_fails() {
        let l = layout(&[1.0, 2.0], 3);
        let suite = verify_algebra_with(&l, ALGEBRA_TOL, |k| {
            let a = mode_annihilator(&l, k)?;
            Ok(if k == 0 { &a + &mode_annihilator(&l, 1)?.scale_re(1e-3) } else { a })
        })
        .unwrap();
        assert!(!suite.all_pass());
    }
}
