//! Dense matrix with row-major storage.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds from row-major data, checking length and finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(alloc::format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Row-major backing slice.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// `self * rhs`.
    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul: inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0.0 {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `selfᵀ * rhs` without forming the transpose.
    pub fn tr_matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "tr_matmul: row counts differ");
        let mut out = Matrix::zeros(self.cols, rhs.cols);
        for k in 0..self.rows {
            for i in 0..self.cols {
                let a = self.data[k * self.cols + i];
                if a == 0.0 {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `self * rhsᵀ` without forming the transpose.
    pub fn matmul_tr(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "matmul_tr: column counts differ");
        let mut out = Matrix::zeros(self.rows, rhs.rows);
        for i in 0..self.rows {
            let arow = &self.data[i * self.cols..(i + 1) * self.cols];
            for j in 0..rhs.rows {
                let brow = &rhs.data[j * rhs.cols..(j + 1) * rhs.cols];
                out.data[i * rhs.rows + j] = arow.iter().zip(brow).map(|(a, b)| a * b).sum();
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add: shapes differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub: shapes differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, a: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| a * v).collect(),
        }
    }

    /// `self += a * rhs`.
    pub fn axpy_mut(&mut self, a: f64, rhs: &Matrix) {
        assert_eq!(self.shape(), rhs.shape(), "axpy: shapes differ");
        for (s, r) in self.data.iter_mut().zip(&rhs.data) {
            *s += a * r;
        }
    }

    pub fn scale_mut(&mut self, a: f64) {
        for v in &mut self.data {
            *v *= a;
        }
    }

    /// Frobenius inner product.
    pub fn dot(&self, rhs: &Matrix) -> f64 {
        assert_eq!(self.shape(), rhs.shape(), "dot: shapes differ");
        self.data.iter().zip(&rhs.data).map(|(a, b)| a * b).sum()
    }

    pub fn frob_norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    /// Symmetric part `(A + Aᵀ)/2` of a square matrix.
    pub fn sym(&self) -> Matrix {
        assert_eq!(self.rows, self.cols, "sym: matrix not square");
        Matrix::from_fn(self.rows, self.rows, |i, j| {
            0.5 * (self[(i, j)] + self[(j, i)])
        })
    }

    /// Skew part `(A - Aᵀ)/2` of a square matrix.
    pub fn skw(&self) -> Matrix {
        assert_eq!(self.rows, self.cols, "skw: matrix not square");
        Matrix::from_fn(self.rows, self.rows, |i, j| {
            0.5 * (self[(i, j)] - self[(j, i)])
        })
    }

    pub fn trace(&self) -> f64 {
        assert_eq!(self.rows, self.cols, "trace: matrix not square");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Defect `‖selfᵀ·self − I‖_F`; zero for orthonormal columns.
    pub fn orthonormal_defect(&self) -> f64 {
        let gram = self.tr_matmul(self);
        gram.sub(&Matrix::identity(self.cols)).frob_norm()
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}
