//! Dense reference implementations used as oracles.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use oscfield::{HilbertLayout, Operator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn dense(op: &Operator) -> DMatrix<C64> {
    op.matrix().to_dense()
}

pub fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn commutator(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
    a * b - b * a
}

/// `exp(-i H t / hbar)` from the eigendecomposition of a Hermitian `H`.
pub fn eig_propagator(h: &DMatrix<C64>, t: f64, hbar: f64) -> DMatrix<C64> {
    let herm = (h + h.adjoint()) * C64::new(0.5, 0.0);
    let eig = herm.symmetric_eigen();
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|e| C64::from_polar(1.0, -e * t / hbar)));
    &eig.eigenvectors * phases * eig.eigenvectors.adjoint()
}

/// `exp(i H t) A exp(-i H t)` by brute force.
pub fn eig_heisenberg(h: &DMatrix<C64>, a: &DMatrix<C64>, t: f64, hbar: f64) -> DMatrix<C64> {
    let u = eig_propagator(h, t, hbar);
    u.adjoint() * a * u
}

/// Fock lowering operator on `0..=nmax`.
pub fn fock_lowering(nmax: usize) -> DMatrix<C64> {
    DMatrix::from_fn(nmax + 1, nmax + 1, |i, j| if j == i + 1 { C64::new((j as f64).sqrt(), 0.0) } else { C64::new(0.0, 0.0) })
}

/// `a_k = |k><k| (x) a` on the field part of a layout, built by Kronecker product.
pub fn mode_lowering(m: usize, nmax: usize, k: usize) -> DMatrix<C64> {
    let proj = DMatrix::from_fn(m, m, |i, j| if i == k && j == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) });
    proj.kronecker(&fock_lowering(nmax))
}

/// `1_atom (x) field` for layouts carrying an atom (ground first).
pub fn with_atom(field: &DMatrix<C64>) -> DMatrix<C64> {
    DMatrix::<C64>::identity(2, 2).kronecker(field)
}

/// `sigma_+ = |+><-|` (x) 1_field.
pub fn sigma_plus(field_dim: usize) -> DMatrix<C64> {
    let mut s = DMatrix::zeros(2, 2);
    s[(1, 0)] = C64::new(1.0, 0.0);
    s.kronecker(&DMatrix::identity(field_dim, field_dim))
}

pub fn sigma_z(field_dim: usize) -> DMatrix<C64> {
    let s = DMatrix::from_diagonal(&DVector::from_vec(vec![C64::new(-1.0, 0.0), C64::new(1.0, 0.0)]));
    s.kronecker(&DMatrix::identity(field_dim, field_dim))
}

/// Field Hamiltonian `sum_k hbar w_k (a_k^dagger a_k + P_k / 2)` from Kronecker blocks.
pub fn field_hamiltonian(layout: &HilbertLayout, hbar: f64) -> DMatrix<C64> {
    let (m, n) = (layout.mode_count(), layout.nmax());
    let mut h = DMatrix::zeros(m * (n + 1), m * (n + 1));
    for (k, mode) in layout.modes().iter().enumerate() {
        let a = mode_lowering(m, n, k);
        let num = a.adjoint() * &a;
        let proj = DMatrix::from_fn(m, m, |i, j| if i == k && j == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
            .kronecker(&DMatrix::<C64>::identity(n + 1, n + 1));
        h += (num + proj * C64::new(0.5, 0.0)) * C64::new(hbar * mode.omega(), 0.0);
    }
    h
}

/// Random Hermitian matrix with entries of order one.
pub fn random_hermitian(dim: usize, seed: u64) -> DMatrix<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DMatrix::from_fn(dim, dim, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    (&a + a.adjoint()) * C64::new(0.5, 0.0)
}

pub fn random_state(dim: usize, seed: u64) -> DVector<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = DVector::from_fn(dim, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let n = v.norm();
    v / C64::new(n, 0.0)
}

/// Composite Simpson rule for a complex integrand.
pub fn simpson(f: impl Fn(f64) -> C64, a: f64, b: f64, intervals: usize) -> C64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        sum += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * (h / 3.0)
}

/// Unit dipole direction `e_+(z)^*`, which couples fully to `s = +1` modes along `z`.
pub fn z_dipole() -> [C64; 3] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [C64::new(r, 0.0), C64::new(0.0, -r), C64::new(0.0, 0.0)]
}
