//! Complex square matrix storage shared by every operator in the crate.
//!
//! Three storage forms are kept: diagonal, CSR sparse and dense. The
//! diagonal form doubles as the structural "is diagonal" flag used by the
//! propagators; it is set by constructors, never inferred from values.

use nalgebra::{DMatrix, DVector};
use nalgebra_sparse::{CooMatrix, CsrMatrix};
use num_complex::Complex64;

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub enum OpMatrix {
    Diagonal(DVector<C64>),
    Sparse(CsrMatrix<C64>),
    Dense(DMatrix<C64>),
}

impl OpMatrix {
    pub fn identity(dim: usize) -> Self {
        OpMatrix::Diagonal(DVector::from_element(dim, ONE))
    }

    pub fn zeros(dim: usize) -> Self {
        OpMatrix::Sparse(CsrMatrix::zeros(dim, dim))
    }

    /// Sparse matrix from `(row, col, value)` entries. Repeated positions are summed.
    pub fn from_triplets<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C64)>,
    {
        let mut coo = CooMatrix::new(dim, dim);
        for (i, j, v) in entries {
            coo.push(i, j, v);
        }
        OpMatrix::Sparse(CsrMatrix::from(&coo))
    }

    pub fn from_diagonal(diag: DVector<C64>) -> Self {
        OpMatrix::Diagonal(diag)
    }

    pub fn from_dense(m: DMatrix<C64>) -> Self {
        assert_eq!(m.nrows(), m.ncols(), "operator matrices are square");
        OpMatrix::Dense(m)
    }

    pub fn dim(&self) -> usize {
        match self {
            OpMatrix::Diagonal(d) => d.len(),
            OpMatrix::Sparse(s) => s.nrows(),
            OpMatrix::Dense(m) => m.nrows(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, OpMatrix::Diagonal(_))
    }

    pub fn diagonal(&self) -> Option<&DVector<C64>> {
        match self {
            OpMatrix::Diagonal(d) => Some(d),
            _ => None,
        }
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        match self {
            OpMatrix::Diagonal(d) => DMatrix::from_diagonal(d),
            OpMatrix::Sparse(s) => {
                let mut m = DMatrix::zeros(s.nrows(), s.ncols());
                for (i, j, v) in s.triplet_iter() {
                    m[(i, j)] += *v;
                }
                m
            }
            OpMatrix::Dense(m) => m.clone(),
        }
    }

    pub fn to_sparse(&self) -> CsrMatrix<C64> {
        match self {
            OpMatrix::Sparse(s) => s.clone(),
            _ => {
                let n = self.dim();
                let mut coo = CooMatrix::new(n, n);
                for (i, j, v) in self.nonzeros() {
                    coo.push(i, j, v);
                }
                CsrMatrix::from(&coo)
            }
        }
    }

    /// Same values in sparse storage (diagonal flag dropped).
    pub fn into_sparse(self) -> Self {
        OpMatrix::Sparse(self.to_sparse())
    }

    /// Same values in dense storage (diagonal flag dropped).
    pub fn into_dense(self) -> Self {
        match self {
            OpMatrix::Dense(_) => self,
            other => OpMatrix::Dense(other.to_dense()),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        match self {
            OpMatrix::Diagonal(d) => {
                if i == j {
                    d[i]
                } else {
                    ZERO
                }
            }
            OpMatrix::Sparse(s) => s.get_entry(i, j).map(|e| e.into_value()).unwrap_or(ZERO),
            OpMatrix::Dense(m) => m[(i, j)],
        }
    }

    /// Nonzero entries in row-major order.
    pub fn nonzeros(&self) -> Vec<(usize, usize, C64)> {
        let mut out: Vec<(usize, usize, C64)> = match self {
            OpMatrix::Diagonal(d) => d.iter().enumerate().map(|(i, v)| (i, i, *v)).collect(),
            OpMatrix::Sparse(s) => s.triplet_iter().map(|(i, j, v)| (i, j, *v)).collect(),
            OpMatrix::Dense(m) => {
                let n = m.nrows();
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, m[(i, j)])).collect()
            }
        };
        out.retain(|(_, _, v)| *v != ZERO);
        out.sort_by_key(|&(i, j, _)| (i, j));
        out
    }

    pub fn adjoint(&self) -> Self {
        match self {
            OpMatrix::Diagonal(d) => OpMatrix::Diagonal(d.map(|v| v.conj())),
            OpMatrix::Sparse(s) => {
                let mut t = s.transpose();
                t.values_mut().iter_mut().for_each(|v| *v = v.conj());
                OpMatrix::Sparse(t)
            }
            OpMatrix::Dense(m) => OpMatrix::Dense(m.adjoint()),
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        match self {
            OpMatrix::Diagonal(d) => OpMatrix::Diagonal(d * c),
            OpMatrix::Sparse(s) => {
                let mut s = s.clone();
                s.values_mut().iter_mut().for_each(|v| *v *= c);
                OpMatrix::Sparse(s)
            }
            OpMatrix::Dense(m) => OpMatrix::Dense(m * c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_dim(other);
        match (self, other) {
            (OpMatrix::Diagonal(a), OpMatrix::Diagonal(b)) => OpMatrix::Diagonal(a + b),
            (OpMatrix::Dense(a), b) | (b, OpMatrix::Dense(a)) => OpMatrix::Dense(a + b.to_dense()),
            (a, b) => OpMatrix::Sparse(&a.to_sparse() + &b.to_sparse()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Self) -> Self {
        self.check_dim(other);
        match (self, other) {
            (OpMatrix::Diagonal(a), OpMatrix::Diagonal(b)) => OpMatrix::Diagonal(a.component_mul(b)),
            (OpMatrix::Dense(a), OpMatrix::Dense(b)) => OpMatrix::Dense(a * b),
            (OpMatrix::Dense(a), b) => OpMatrix::Dense(a * b.to_dense()),
            (a, OpMatrix::Dense(b)) => OpMatrix::Dense(a.to_dense() * b),
            (OpMatrix::Diagonal(d), b) => {
                let mut s = b.to_sparse();
                scale_rows(&mut s, d);
                OpMatrix::Sparse(s)
            }
            (a, OpMatrix::Diagonal(d)) => {
                let mut s = a.to_sparse().transpose();
                scale_rows(&mut s, d);
                OpMatrix::Sparse(s.transpose())
            }
            (OpMatrix::Sparse(a), OpMatrix::Sparse(b)) => OpMatrix::Sparse(a * b),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn apply(&self, x: &DVector<C64>) -> DVector<C64> {
        assert_eq!(x.len(), self.dim(), "vector length does not match operator dimension");
        match self {
            OpMatrix::Diagonal(d) => d.component_mul(x),
            OpMatrix::Sparse(s) => {
                let mut y = DVector::from_element(x.len(), ZERO);
                for (i, row) in s.row_iter().enumerate() {
                    let mut acc = ZERO;
                    for (j, v) in row.col_indices().iter().zip(row.values()) {
                        acc += v * x[*j];
                    }
                    y[i] = acc;
                }
                y
            }
            OpMatrix::Dense(m) => m * x,
        }
    }

    /// Largest entry magnitude, `max |A_ij|`.
    pub fn max_abs(&self) -> f64 {
        let fold = |acc: f64, v: &C64| acc.max(v.norm());
        match self {
            OpMatrix::Diagonal(d) => d.iter().fold(0.0, fold),
            OpMatrix::Sparse(s) => s.values().iter().fold(0.0, fold),
            OpMatrix::Dense(m) => m.iter().fold(0.0, fold),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    /// `max |A - A^dagger|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Largest absolute row sum (induced infinity norm).
    pub fn norm_inf(&self) -> f64 {
        let d = self.to_dense();
        d.row_iter().map(|r| r.iter().map(|v| v.norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Keep only the rows and columns listed in `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let pos: std::collections::HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        match self {
            OpMatrix::Diagonal(d) => OpMatrix::Diagonal(DVector::from_iterator(keep.len(), keep.iter().map(|&i| d[i]))),
            OpMatrix::Dense(m) => OpMatrix::Dense(DMatrix::from_fn(keep.len(), keep.len(), |i, j| m[(keep[i], keep[j])])),
            OpMatrix::Sparse(s) => OpMatrix::from_triplets(
                keep.len(),
                s.triplet_iter().filter_map(|(i, j, v)| Some((*pos.get(&i)?, *pos.get(&j)?, *v))),
            ),
        }
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim(), other.dim(), "operator dimension mismatch");
    }
}

fn scale_rows(s: &mut CsrMatrix<C64>, d: &DVector<C64>) {
    let offsets: Vec<usize> = s.row_offsets().to_vec();
    let values = s.values_mut();
    for i in 0..offsets.len() - 1 {
        for v in &mut values[offsets[i]..offsets[i + 1]] {
            *v *= d[i];
        }
    }
}
