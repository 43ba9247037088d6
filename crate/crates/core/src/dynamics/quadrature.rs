//! Globally adaptive Gauss-Kronrod (7, 15) quadrature for vector integrands.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::hilbert::C64;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    /// Target for the summed error estimate (Euclidean norm).
    pub abs_tol: f64,
    pub max_segments: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self { abs_tol: 1e-12, max_segments: 4000 }
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: DVector<C64>,
    error: f64,
}

impl Quadrature {
    /// `int_a^b f(t) dt` for a vector-valued integrand.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64) -> Result<DVector<C64>>
    where
        F: Fn(f64) -> Result<DVector<C64>>,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Quadrature(format!("non-finite interval [{a}, {b}]")));
        }
        if a == b {
            return Ok(f(a)?.scale(0.0));
        }
        let mut segments = vec![gk15(&f, a, b)?];
        loop {
            let total_err: f64 = segments.iter().map(|s| s.error).sum();
            if total_err <= self.abs_tol {
                break;
            }
            if segments.len() >= self.max_segments {
                return Err(Error::Quadrature(format!(
                    "error estimate {total_err:e} above {:e} after {} segments",
                    self.abs_tol,
                    segments.len()
                )));
            }
            let worst = segments
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
                .map(|(i, _)| i)
                .expect("nonempty");
            let seg = segments.swap_remove(worst);
            let mid = 0.5 * (seg.a + seg.b);
            segments.push(gk15(&f, seg.a, mid)?);
            segments.push(gk15(&f, mid, seg.b)?);
        }
        segments.sort_by(|x, y| x.a.total_cmp(&y.a));
        let mut it = segments.into_iter();
        let first = it.next().expect("nonempty").value;
        Ok(it.fold(first, |acc, s| acc + s.value))
    }
}

fn gk15<F>(f: &F, a: f64, b: f64) -> Result<Segment>
where
    F: Fn(f64) -> Result<DVector<C64>>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = &fc * C64::new(WGK[7], 0.0);
    let mut gauss = &fc * C64::new(WG[3], 0.0);
    for i in 0..7 {
        let dx = half * XGK[i];
        let fsum = f(center - dx)? + f(center + dx)?;
        kronrod += &fsum * C64::new(WGK[i], 0.0);
        if i % 2 == 1 {
            gauss += &fsum * C64::new(WG[i / 2], 0.0);
        }
    }
    let value = kronrod * C64::new(half, 0.0);
    let error = (&value - gauss * C64::new(half, 0.0)).norm();
    Ok(Segment { a, b, value, error })
}
