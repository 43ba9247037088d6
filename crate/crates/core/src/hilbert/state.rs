use std::sync::Arc;

use nalgebra::DVector;

use super::matrix::{C64, ZERO};
use super::{BasisIndex, HilbertLayout};
use crate::error::{Error, Result};

/// Complex amplitudes over a [`HilbertLayout`].
///
/// Constructors that build physical states normalize; intermediate results
/// such as first-order corrected states are allowed to carry any norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    layout: Arc<HilbertLayout>,
    amplitudes: DVector<C64>,
}

impl StateVector {
    pub(crate) fn from_parts(layout: Arc<HilbertLayout>, amplitudes: DVector<C64>) -> Self {
        debug_assert_eq!(layout.dim(), amplitudes.len());
        Self { layout, amplitudes }
    }

    /// Wraps raw amplitudes without normalizing.
    pub fn from_amplitudes(layout: &HilbertLayout, amplitudes: DVector<C64>) -> Result<Self> {
        if amplitudes.len() != layout.dim() {
            return Err(Error::LayoutMismatch(format!(
                "{} amplitudes for a layout of dimension {}",
                amplitudes.len(),
                layout.dim()
            )));
        }
        Ok(Self { layout: Arc::new(layout.clone()), amplitudes })
    }

    pub fn zeros(layout: &HilbertLayout) -> Self {
        Self { layout: Arc::new(layout.clone()), amplitudes: DVector::from_element(layout.dim(), ZERO) }
    }

    /// Unit vector `|mode, n[, atom]>`.
    pub fn basis_state(layout: &HilbertLayout, idx: BasisIndex) -> Result<Self> {
        let flat = layout.flatten(idx)?;
        let mut s = Self::zeros(layout);
        s.amplitudes[flat] = C64::new(1.0, 0.0);
        Ok(s)
    }

    /// Normalized superposition of the listed basis vectors. Repeated labels add up.
    pub fn superposition<I>(layout: &HilbertLayout, amplitudes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisIndex, C64)>,
    {
        let mut s = Self::zeros(layout);
        for (idx, c) in amplitudes {
            let flat = layout.flatten(idx)?;
            s.amplitudes[flat] += c;
        }
        s.normalize()?;
        Ok(s)
    }

    pub fn layout(&self) -> &HilbertLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> DVector<C64> {
        self.amplitudes
    }

    pub fn amplitude(&self, idx: BasisIndex) -> Result<C64> {
        Ok(self.amplitudes[self.layout.flatten(idx)?])
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroState);
        }
        self.amplitudes.unscale_mut(n);
        Ok(())
    }

    pub fn normalized(mut self) -> Result<Self> {
        self.normalize()?;
        Ok(self)
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if *self.layout != *other.layout {
            return Err(Error::LayoutMismatch("states live on different layouts".into()));
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Euclidean distance `||self - other||`.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        if *self.layout != *other.layout {
            return Err(Error::LayoutMismatch("states live on different layouts".into()));
        }
        Ok((&self.amplitudes - &other.amplitudes).norm())
    }

    /// Iterator over `(label, amplitude)` in flat-index order.
    pub fn components(&self) -> impl Iterator<Item = (BasisIndex, C64)> + '_ {
        self.layout.basis().zip(self.amplitudes.iter().copied())
    }
}
