//! Matrix exponential by scaling and squaring with a degree-13 Padé approximant.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::hilbert::{OpMatrix, C64};

// Padé(13) coefficients b_0..b_13.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

// 1-norm bound below which Padé(13) is accurate to double precision.
const THETA13: f64 = 5.371920351148152;

// Beyond this many squarings the result cannot be represented.
const MAX_SQUARINGS: u32 = 1000;

/// `exp(A)`. Diagonal storage is exponentiated entrywise.
pub fn expm_matrix(a: &OpMatrix) -> Result<OpMatrix> {
    if let Some(d) = a.diagonal() {
        let e = d.map(|v| v.exp());
        if e.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::ExpOverflow("diagonal entry too large to exponentiate".into()));
        }
        return Ok(OpMatrix::from_diagonal(e));
    }
    Ok(OpMatrix::from_dense(expm_dense(&a.to_dense())?))
}

pub fn expm_dense(a: &DMatrix<C64>) -> Result<DMatrix<C64>> {
    let n = a.nrows();
    if n == 0 {
        return Ok(a.clone());
    }
    let norm = one_norm(a);
    if !norm.is_finite() {
        return Err(Error::ExpOverflow(format!("input has non-finite 1-norm {norm}")));
    }
    let squarings = if norm > THETA13 { (norm / THETA13).log2().ceil() as u32 } else { 0 };
    if squarings > MAX_SQUARINGS {
        return Err(Error::ExpOverflow(format!(
            "1-norm {norm:e} would need {squarings} squarings (limit {MAX_SQUARINGS})"
        )));
    }
    let scaled = a.unscale(2f64.powi(squarings as i32));
    let mut r = pade13(&scaled)?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    if r.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::ExpOverflow(format!(
            "overflow after {squarings} squarings (1-norm {norm:e})"
        )));
    }
    Ok(r)
}

fn pade13(a: &DMatrix<C64>) -> Result<DMatrix<C64>> {
    let n = a.nrows();
    let b = |k: usize| C64::new(PADE13[k], 0.0);
    let id = DMatrix::<C64>::identity(n, n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9)) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &id * b(1);
    let u = a * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8)) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &id * b(0);

    let p = &v + &u;
    let q = &v - &u;
    q.lu()
        .solve(&p)
        .ok_or_else(|| Error::ExpOverflow("Padé denominator is singular".into()))
}

fn one_norm(a: &DMatrix<C64>) -> f64 {
    a.column_iter().map(|c| c.iter().map(|v| v.norm()).sum::<f64>()).fold(0.0, f64::max)
}
