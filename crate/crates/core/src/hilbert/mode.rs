use std::fmt;

use crate::error::{Error, Result};

/// Relative tolerance on `omega = c |kappa|`.
const DISPERSION_RTOL: f64 = 1e-12;

/// One field mode: polarization, wavevector, frequency and degeneracy tag.
///
/// Field modes carry a nonzero wavevector and satisfy `omega = c |kappa|`.
/// Abstract modes (single-oscillator layouts that only know `omega` and `j`)
/// have `kappa = 0` and a free `omega >= 0`.
#[derive(Debug, Clone, Copy)]
pub struct ModeLabel {
    s: i8,
    kappa: [f64; 3],
    omega: f64,
    j: u32,
    is_abstract: bool,
}

impl ModeLabel {
    /// Field mode with `omega` derived from the wavevector.
    pub fn field(s: i8, kappa: [f64; 3], j: u32, c: f64) -> Result<Self> {
        check_helicity(s)?;
        let k = norm3(&kappa);
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidMode(format!("field mode needs a finite nonzero wavevector, got {kappa:?}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter(format!("c must be > 0, got {c}")));
        }
        Ok(Self { s, kappa, omega: c * k, j, is_abstract: false })
    }

    /// Field mode with an explicitly supplied frequency, checked against `c |kappa|`.
    pub fn with_frequency(s: i8, kappa: [f64; 3], omega: f64, j: u32, c: f64) -> Result<Self> {
        let mode = Self::field(s, kappa, j, c)?;
        if (mode.omega - omega).abs() > DISPERSION_RTOL * mode.omega {
            return Err(Error::InvalidMode(format!(
                "omega = {omega} violates omega = c|kappa| = {}",
                mode.omega
            )));
        }
        Ok(Self { omega, ..mode })
    }

    /// Mode known only by its frequency and degeneracy tag.
    pub fn abstract_mode(omega: f64, j: u32) -> Result<Self> {
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::InvalidMode(format!("frequency must be finite and >= 0, got {omega}")));
        }
        Ok(Self { s: 1, kappa: [0.0; 3], omega, j, is_abstract: true })
    }

    pub fn s(&self) -> i8 {
        self.s
    }

    pub fn kappa(&self) -> [f64; 3] {
        self.kappa
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn is_abstract(&self) -> bool {
        self.is_abstract
    }

    /// Unit vector along the wavevector; `None` for abstract modes.
    pub fn direction(&self) -> Option<[f64; 3]> {
        if self.is_abstract {
            return None;
        }
        let k = norm3(&self.kappa);
        Some([self.kappa[0] / k, self.kappa[1] / k, self.kappa[2] / k])
    }

    pub(crate) fn require_field(&self) -> Result<()> {
        if self.is_abstract {
            Err(Error::AbstractMode(self.to_string()))
        } else {
            Ok(())
        }
    }
}

impl PartialEq for ModeLabel {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.kappa == other.kappa && self.omega == other.omega && self.j == other.j
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_abstract {
            write!(f, "(omega={}, j={})", self.omega, self.j)
        } else {
            write!(
                f,
                "(s={:+}, kappa=[{}, {}, {}], omega={}, j={})",
                self.s, self.kappa[0], self.kappa[1], self.kappa[2], self.omega, self.j
            )
        }
    }
}

fn check_helicity(s: i8) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::InvalidMode(format!("polarization index must be +1 or -1, got {s}")))
    }
}

pub(crate) fn norm3(v: &[f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_mode_derives_frequency() {
        let m = ModeLabel::field(1, [0.0, 3.0, 4.0], 0, 2.0).unwrap();
        assert_eq!(m.omega(), 10.0);
        assert_eq!(m.direction().unwrap(), [0.0, 0.6, 0.8]);
    }

    #[test]
    fn rejects_bad_modes() {
        assert!(ModeLabel::field(0, [1.0, 0.0, 0.0], 0, 1.0).is_err());
        assert!(ModeLabel::field(1, [0.0; 3], 0, 1.0).is_err());
        assert!(ModeLabel::abstract_mode(-1.0, 0).is_err());
        assert!(ModeLabel::with_frequency(1, [1.0, 0.0, 0.0], 1.1, 0, 1.0).is_err());
        assert!(ModeLabel::with_frequency(1, [1.0, 0.0, 0.0], 1.0, 0, 1.0).is_ok());
    }

    #[test]
    fn equality_uses_all_four_fields() {
        let a = ModeLabel::field(1, [0.0, 0.0, 1.0], 0, 1.0).unwrap();
        let b = ModeLabel::field(-1, [0.0, 0.0, 1.0], 0, 1.0).unwrap();
        let c = ModeLabel::field(1, [0.0, 0.0, 1.0], 1, 1.0).unwrap();
        assert_eq!(a, a);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert!(ModeLabel::abstract_mode(1.0, 0).unwrap().direction().is_none());
    }
}
