use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::DVector;

use super::matrix::{OpMatrix, C64, ONE};
use super::{HilbertLayout, StateVector};
use crate::error::{Error, Result};

/// Default threshold for [`Operator::is_hermitian`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// A linear operator on a [`HilbertLayout`].
///
/// Arithmetic through `+`, `-`, `*` panics if the layouts differ, in the same
/// way shape mismatches panic for matrix types. Fallible entry points
/// (`apply`, `expect`) return an error instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    layout: Arc<HilbertLayout>,
    matrix: OpMatrix,
}

impl Operator {
    pub fn new(layout: Arc<HilbertLayout>, matrix: OpMatrix) -> Result<Self> {
        if matrix.dim() != layout.dim() {
            return Err(Error::LayoutMismatch(format!(
                "matrix dimension {} != layout dimension {}",
                matrix.dim(),
                layout.dim()
            )));
        }
        Ok(Self { layout, matrix })
    }

    pub(crate) fn from_parts(layout: Arc<HilbertLayout>, matrix: OpMatrix) -> Self {
        debug_assert_eq!(matrix.dim(), layout.dim());
        Self { layout, matrix }
    }

    pub fn identity(layout: &HilbertLayout) -> Self {
        Self::from_parts(Arc::new(layout.clone()), OpMatrix::identity(layout.dim()))
    }

    pub fn zeros(layout: &HilbertLayout) -> Self {
        Self::from_parts(Arc::new(layout.clone()), OpMatrix::zeros(layout.dim()))
    }

    pub fn layout(&self) -> &HilbertLayout {
        &self.layout
    }

    pub fn matrix(&self) -> &OpMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> OpMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix.is_diagonal()
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.matrix.get(i, j)
    }

    pub fn adjoint(&self) -> Self {
        self.with_matrix(self.matrix.adjoint())
    }

    pub fn scale(&self, c: C64) -> Self {
        self.with_matrix(self.matrix.scale(c))
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(C64::new(c, 0.0))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.check_layout(other);
        self.with_matrix(self.matrix.commutator(&other.matrix))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self * other + other * self
    }

    /// `A^p` by repeated multiplication, `A^0 = 1`.
    pub fn pow(&self, p: u32) -> Self {
        let mut out = Operator::identity(&self.layout);
        for _ in 0..p {
            out = &out * self;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.max_abs()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.check_layout(other);
        self.matrix.max_abs_diff(&other.matrix)
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        self.matrix.hermiticity_deviation()
    }

    /// `max |A - A^dagger| < 1e-12`.
    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() < HERMITIAN_TOL
    }

    pub fn to_dense(&self) -> Self {
        self.with_matrix(self.matrix.clone().into_dense())
    }

    pub fn to_sparse(&self) -> Self {
        self.with_matrix(self.matrix.clone().into_sparse())
    }

    pub fn apply(&self, x: &StateVector) -> Result<StateVector> {
        self.check_state(x)?;
        Ok(StateVector::from_parts(self.layout.clone(), self.matrix.apply(x.amplitudes())))
    }

    /// `<x|A|x>`.
    pub fn expect(&self, x: &StateVector) -> Result<C64> {
        let ax = self.apply(x)?;
        x.inner(&ax)
    }

    /// Action on a raw amplitude vector.
    pub fn apply_raw(&self, x: &DVector<C64>) -> DVector<C64> {
        self.matrix.apply(x)
    }

    pub(crate) fn with_matrix(&self, matrix: OpMatrix) -> Self {
        Self { layout: self.layout.clone(), matrix }
    }

    fn check_state(&self, x: &StateVector) -> Result<()> {
        if *self.layout != *x.layout() {
            return Err(Error::LayoutMismatch("operator and state act on different layouts".into()));
        }
        Ok(())
    }

    fn check_layout(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.layout, &other.layout) || *self.layout == *other.layout,
            "operators act on different layouts"
        );
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        self.check_layout(rhs);
        self.with_matrix(self.matrix.add(&rhs.matrix))
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        self.check_layout(rhs);
        self.with_matrix(self.matrix.sub(&rhs.matrix))
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.check_layout(rhs);
        self.with_matrix(self.matrix.matmul(&rhs.matrix))
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale(-ONE)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Operator {
            type Output = Operator;
            fn $f(self, rhs: Operator) -> Operator {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Operator> for Operator {
            type Output = Operator;
            fn $f(self, rhs: &Operator) -> Operator {
                (&self).$f(rhs)
            }
        }
        impl $tr<Operator> for &Operator {
            type Output = Operator;
            fn $f(self, rhs: Operator) -> Operator {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sum of operators on a common layout; `None` for an empty iterator.
pub fn sum<'a, I: IntoIterator<Item = &'a Operator>>(ops: I) -> Option<Operator> {
    let mut it = ops.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, op| &acc + op))
}
