//! Dense third-order tensor.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense third-order tensor.
///
/// Storage is column-major: entry `(i1, i2, i3)` (0-based) lives at linear
/// index `i1 + n1*(i2 + n2*i3)`, so the first index varies fastest. Mode-1
/// matricization is then a plain reshape of the backing buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor3 {
    dims: (usize, usize, usize),
    data: Vec<f64>,
}

impl DenseTensor3 {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        DenseTensor3 {
            dims,
            data: vec![0.0; dims.0 * dims.1 * dims.2],
        }
    }

    /// Builds from column-major data, checking length and finiteness.
    pub fn from_vec(dims: (usize, usize, usize), data: Vec<f64>) -> Result<Self> {
        if data.len() != dims.0 * dims.1 * dims.2 {
            return Err(Error::ShapeMismatch(alloc::format!(
                "tensor data length {} does not match dims ({}, {}, {})",


                data.len(),
                dims.0,
                dims.1,
                dims.2
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(DenseTensor3 { dims, data })
    }

    pub fn from_fn(
        dims: (usize, usize, usize),
        mut f: impl FnMut(usize, usize, usize) -> f64,
    ) -> Self {
        let mut t = DenseTensor3::zeros(dims);
        for i3 in 0..dims.2 {
            for i2 in 0..dims.1 {
                for i1 in 0..dims.0 {
                    t.set(i1, i2, i3, f(i1, i2, i3));
                }
            }
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Length of the given mode (1-based).
    pub fn dim(&self, mode: usize) -> usize {
        match mode {
            1 => self.dims.0,
            2 => self.dims.1,
            3 => self.dims.2,
            _ => panic!("invalid mode {mode}"),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Column-major backing slice.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    fn lin(&self, i1: usize, i2: usize, i3: usize) -> usize {
        debug_assert!(i1 < self.dims.0 && i2 < self.dims.1 && i3 < self.dims.2);
        i1 + self.dims.0 * (i2 + self.dims.1 * i3)
    }

    /// Entry at (i1, i2, i3), 0-based.
    #[inline]
    pub fn get(&self, i1: usize, i2: usize, i3: usize) -> f64 {
        self.data[self.lin(i1, i2, i3)]
    }

    #[inline]
    pub fn set(&mut self, i1: usize, i2: usize, i3: usize, v: f64) {
        let idx = self.lin(i1, i2, i3);
        self.data[idx] = v;
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn add(&self, rhs: &DenseTensor3) -> DenseTensor3 {
        assert_eq!(self.dims, rhs.dims, "add: dims differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        DenseTensor3 {
            dims: self.dims,
            data,
        }
    }

    pub fn sub(&self, rhs: &DenseTensor3) -> DenseTensor3 {
        assert_eq!(self.dims, rhs.dims, "sub: dims differ");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        DenseTensor3 {
            dims: self.dims,
            data,
        }
    }

    pub fn scale(&self, a: f64) -> DenseTensor3 {
        DenseTensor3 {
            dims: self.dims,
            data: self.data.iter().map(|v| a * v).collect(),
        }
    }

    /// `self += a * rhs`.
    pub fn axpy_mut(&mut self, a: f64, rhs: &DenseTensor3) {
        assert_eq!(self.dims, rhs.dims, "axpy: dims differ");
        for (s, r) in self.data.iter_mut().zip(&rhs.data) {
            *s += a * r;
        }
    }

    pub fn frob_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|v| v * v).sum())
    }
}
