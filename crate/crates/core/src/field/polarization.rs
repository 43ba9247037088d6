use crate::error::{Error, Result};
use crate::hilbert::{norm3, C64};

pub type CVec3 = [C64; 3];

/// Helicity basis `e_s = (theta_hat + i s phi_hat) / sqrt(2)` for a wavevector.
///
/// `theta_hat`, `phi_hat` are the spherical unit vectors of `kappa_hat`. On the
/// poles `kappa_hat = +-z` the convention `theta_hat = x`, `phi_hat = +-y` is used.
/// The vectors satisfy `n x e_s = -i s e_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationBasis {
    pub direction: [f64; 3],
    pub plus: CVec3,
    pub minus: CVec3,
}

impl PolarizationBasis {
    pub fn new(kappa: [f64; 3]) -> Result<Self> {
        let k = norm3(&kappa);
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidParameter(format!("polarization needs a nonzero wavevector, got {kappa:?}")));
        }
        let n = [kappa[0] / k, kappa[1] / k, kappa[2] / k];
        let (theta_hat, phi_hat) = if kappa[0] == 0.0 && kappa[1] == 0.0 {
            let sign = kappa[2].signum();
            ([1.0, 0.0, 0.0], [0.0, sign, 0.0])
        } else {
            let rho = (n[0] * n[0] + n[1] * n[1]).sqrt();
            let (cos_phi, sin_phi) = (n[0] / rho, n[1] / rho);
            let cos_theta = n[2];
            ([cos_theta * cos_phi, cos_theta * sin_phi, -rho], [-sin_phi, cos_phi, 0.0])
        };
        let make = |s: f64| -> CVec3 {
            std::array::from_fn(|i| C64::new(theta_hat[i], s * phi_hat[i]) * std::f64::consts::FRAC_1_SQRT_2)
        };
        Ok(Self { direction: n, plus: make(1.0), minus: make(-1.0) })
    }

    pub fn get(&self, s: i8) -> Result<CVec3> {
        match s {
            1 => Ok(self.plus),
            -1 => Ok(self.minus),
            _ => Err(Error::InvalidParameter(format!("polarization index must be +1 or -1, got {s}"))),
        }
    }
}

/// Polarization vector `e_{s, kappa}`.
pub fn polarization(kappa: [f64; 3], s: i8) -> Result<CVec3> {
    PolarizationBasis::new(kappa)?.get(s)
}

/// Bilinear product `a . b` (no conjugation).
pub fn dot(a: &CVec3, b: &CVec3) -> C64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn conj(a: &CVec3) -> CVec3 {
    [a[0].conj(), a[1].conj(), a[2].conj()]
}

pub fn cross(a: &CVec3, b: &CVec3) -> CVec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn real_vec(v: [f64; 3]) -> CVec3 {
    v.map(|x| C64::new(x, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_axis_convention() {
        let e = polarization([0.0, 0.0, 1.0], 1).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(e, [C64::new(r, 0.0), C64::new(0.0, r), C64::new(0.0, 0.0)]);
        let e = polarization([0.0, 0.0, -3.0], -1).unwrap();
        assert_eq!(e, [C64::new(r, 0.0), C64::new(0.0, r), C64::new(0.0, 0.0)]);
    }

    #[test]
    fn rejects_zero_wavevector() {
        assert!(polarization([0.0; 3], 1).is_err());
        assert!(polarization([1.0, 0.0, 0.0], 2).is_err());
    }

    #[test]
    fn helicity_on_axes() {
        for kappa in [[0.0, 0.0, 1.0], [0.0, 0.0, -2.0], [1.0, 0.0, 0.0], [0.0, -1.0, 0.0]] {
            let b = PolarizationBasis::new(kappa).unwrap();
            let n = real_vec(b.direction);
            for s in [1i8, -1] {
                let e = b.get(s).unwrap();
                let lhs = cross(&n, &e);
                for i in 0..3 {
                    assert!((lhs[i] + C64::new(0.0, s as f64) * e[i]).norm() < 1e-15);
                }
                assert!(dot(&e, &e).norm() < 1e-15);
                assert!((dot(&e, &conj(&e)) - 1.0).norm() < 1e-15);
            }
        }
    }
}
