//! Time evolution: propagators, Heisenberg picture and the first-order Dyson term.
//!
//! Diagonal generators take an exact phase path keyed on the storage flag of
//! the operator; everything else goes through [`expm`].

mod expm;
pub mod quadrature;

use nalgebra::DVector;

pub use expm::{expm_dense, expm_matrix};
pub use quadrature::Quadrature;

use crate::error::{Error, Result};
use crate::hilbert::{OpMatrix, Operator, StateVector, C64};

/// Hermiticity threshold for generators.
pub const GENERATOR_HERMITIAN_TOL: f64 = 1e-10;

pub fn expm(a: &Operator) -> Result<Operator> {
    Ok(a.with_matrix(expm_matrix(a.matrix())?))
}

fn check_generator(h: &Operator) -> Result<()> {
    let dev = h.hermiticity_deviation();
    if dev > GENERATOR_HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    Ok(())
}

/// `U(t) = exp(-i H t / hbar)` for a time-independent Hermitian `H`.
#[derive(Debug, Clone)]
pub struct Propagator {
    u: Operator,
    t: f64,
}

impl Propagator {
    pub fn new(h: &Operator, t: f64, hbar: f64) -> Result<Self> {
        check_generator(h)?;
        let u = match h.matrix().diagonal() {
            Some(d) => h.with_matrix(OpMatrix::from_diagonal(d.map(|e| phase(-e.re * t / hbar)))),
            None => expm(&h.scale(C64::new(0.0, -t / hbar)))?,
        };
        Ok(Self { u, t })
    }

    pub fn operator(&self) -> &Operator {
        &self.u
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    /// `max |U^dagger U - 1|`.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.u.adjoint() * &self.u).max_abs_diff(&Operator::identity(self.u.layout()))
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        self.u.apply(psi)
    }
}

fn phase(theta: f64) -> C64 {
    C64::new(theta.cos(), theta.sin())
}

/// `exp(-i H t / hbar) |psi0>`.
pub fn evolve(h: &Operator, psi0: &StateVector, t: f64, hbar: f64) -> Result<StateVector> {
    Propagator::new(h, t, hbar)?.apply(psi0)
}

/// `exp(i H t / hbar) A exp(-i H t / hbar)`.
///
/// For diagonal `H` the entries are rotated by `exp(i (E_i - E_j) t / hbar)`,
/// which keeps the sparsity pattern of `A` exactly.
pub fn heisenberg(h: &Operator, a: &Operator, t: f64, hbar: f64) -> Result<Operator> {
    check_generator(h)?;
    if h.layout() != a.layout() {
        return Err(Error::LayoutMismatch("generator and observable act on different layouts".into()));
    }
    if let Some(e) = h.matrix().diagonal() {
        let rotated = a
            .matrix()
            .nonzeros()
            .into_iter()
            .map(|(i, j, v)| (i, j, v * phase((e[i].re - e[j].re) * t / hbar)));
        let m = OpMatrix::from_triplets(a.dim(), rotated);
        return Ok(a.with_matrix(if a.is_diagonal() { OpMatrix::from_diagonal(diag_of(&m)) } else { m }));
    }
    let u = Propagator::new(h, t, hbar)?;
    Ok(u.operator().adjoint() * a * u.operator())
}

fn diag_of(m: &OpMatrix) -> DVector<C64> {
    DVector::from_iterator(m.dim(), (0..m.dim()).map(|i| m.get(i, i)))
}

/// `|psi0> + (i hbar)^{-1} int_0^t H_I(t') |psi0> dt'` by adaptive quadrature.
pub fn dyson_first_order<F>(h_interaction: F, psi0: &StateVector, t: f64, hbar: f64, quad: &Quadrature) -> Result<StateVector>
where
    F: Fn(f64) -> Result<Operator>,
{
    let integral = quad.integrate(|s| Ok(h_interaction(s)?.apply(psi0)?.into_amplitudes()), 0.0, t)?;
    let amps = psi0.amplitudes() + integral * C64::new(0.0, -1.0 / hbar);
    StateVector::from_amplitudes(psi0.layout(), amps)
}
