use crate::error::{Error, Result};

use super::Scalar;

/// Dense row-major array. Shapes are lists of positive dimensions and
/// `product(shape) == data.len()` always holds.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        if shape.iter().any(|&d| d == 0) {
            return Err(Error::dim(format!("zero dimension in shape {shape:?}")));
        }
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::dim(format!(
                "shape {shape:?} implies {n} elements, got {}",
                data.len()
            )));
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let n: usize = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![T::zero(); n],
        }
    }

    pub fn full(shape: &[usize], v: T) -> Self {
        let n: usize = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![v; n],
        }
    }

    pub fn scalar(v: T) -> Self {
        Tensor {
            shape: vec![1],
            data: vec![v],
        }
    }

    pub fn from_fn(shape: &[usize], mut f: impl FnMut(usize) -> T) -> Self {
        let n: usize = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: (0..n).map(&mut f).collect(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    /// Size of the last dimension.
    pub fn last_dim(&self) -> usize {
        *self.shape.last().expect("tensor has no dimensions")
    }

    /// Product of all dimensions except the last.
    pub fn lead(&self) -> usize {
        self.len() / self.last_dim()
    }

    pub fn item(&self) -> T {
        debug_assert_eq!(self.len(), 1);
        self.data[0]
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn fill(&mut self, v: T) {
        self.data.iter_mut().for_each(|x| *x = v);
    }

    pub fn add_assign(&mut self, other: &Tensor<T>) {
        debug_assert_eq!(self.shape, other.shape);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += *b;
        }
    }

    /// Matrix product of two rank-2 tensors, `[m,k] x [k,n] -> [m,n]`.
    /// Inner accumulation runs in ascending `k`, so results are
    /// deterministic and reproducible across identical builds.
    pub fn matmul(&self, other: &Tensor<T>) -> Result<Tensor<T>> {
        if self.rank() != 2 || other.rank() != 2 {
            return Err(Error::dim(format!(
                "matmul expects rank-2 tensors, got {:?} x {:?}",
                self.shape, other.shape
            )));
        }
        let (m, k) = (self.shape[0], self.shape[1]);
        let (k2, n) = (other.shape[0], other.shape[1]);
        if k != k2 {
            return Err(Error::dim(format!(
                "matmul inner dimensions differ: {:?} x {:?}",
                self.shape, other.shape
            )));
        }
        let mut out = vec![T::zero(); m * n];
        for i in 0..m {
            let row = &self.data[i * k..(i + 1) * k];
            for j in 0..n {
                let mut acc = T::zero();
                for (kk, &a) in row.iter().enumerate() {
                    acc += a * other.data[kk * n + j];
                }
                out[i * n + j] = acc;
            }
        }
        Tensor::new(vec![m, n], out)
    }

    /// Gather rows of a rank-2 tensor, preserving column order.
    pub fn gather_rows(&self, rows: &[usize]) -> Result<Tensor<T>> {
        if self.rank() != 2 {
            return Err(Error::dim("gather_rows expects a rank-2 tensor".to_string()));
        }
        let cols = self.shape[1];
        let mut data = Vec::with_capacity(rows.len() * cols);
        for &r in rows {
            if r >= self.shape[0] {
                return Err(Error::input(format!(
                    "row index {r} out of range for {} rows",
                    self.shape[0]
                )));
            }
            data.extend_from_slice(&self.data[r * cols..(r + 1) * cols]);
        }
        Tensor::new(vec![rows.len(), cols], data)
    }

    /// Gather columns of a rank-2 tensor, preserving row order.
    pub fn gather_cols(&self, cols_idx: &[usize]) -> Result<Tensor<T>> {
        if self.rank() != 2 {
            return Err(Error::dim("gather_cols expects a rank-2 tensor".to_string()));
        }
        let (rows, cols) = (self.shape[0], self.shape[1]);
        let mut data = Vec::with_capacity(rows * cols_idx.len());
        for r in 0..rows {
            for &c in cols_idx {
                if c >= cols {
                    return Err(Error::input(format!(
                        "column index {c} out of range for {cols} columns"
                    )));
                }
                data.push(self.data[r * cols + c]);
            }
        }
        Tensor::new(vec![rows, cols_idx.len()], data)
    }

    /// Gather entries of a rank-1 tensor.
    pub fn gather(&self, idx: &[usize]) -> Result<Tensor<T>> {
        if self.rank() != 1 {
            return Err(Error::dim("gather expects a rank-1 tensor".to_string()));
        }
        let mut data = Vec::with_capacity(idx.len());
        for &i in idx {
            if i >= self.len() {
                return Err(Error::input(format!("index {i} out of range")));
            }
            data.push(self.data[i]);
        }
        Tensor::new(vec![idx.len()], data)
    }

    pub fn to_f64(&self) -> Tensor<f64> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| v.to_f64_()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_product_must_match() {
        assert!(Tensor::<f64>::new(vec![2, 3], vec![0.0; 5]).is_err());
        assert!(Tensor::<f64>::new(vec![2, 0], vec![]).is_err());
        assert!(Tensor::<f64>::new(vec![2, 3], vec![0.0; 6]).is_ok());
    }

    #[test]
    fn matmul_identity() {
        let i = Tensor::new(vec![2, 2], vec![1.0, 0.0, 0.0, 1.0]).unwrap();
        let b = Tensor::new(vec![2, 2], vec![5.0, 6.0, 7.0, 8.0]).unwrap();
        assert_eq!(i.matmul(&b).unwrap().data(), b.data());
    }

    #[test]
    fn matmul_dot() {
        let a = Tensor::new(vec![1, 2], vec![1.0, 2.0]).unwrap();
        let b = Tensor::new(vec![2, 1], vec![3.0, 4.0]).unwrap();
        assert_eq!(a.matmul(&b).unwrap().data(), &[11.0]);
    }

    #[test]
    fn matmul_shape_error_names_both() {
        let a = Tensor::<f64>::zeros(&[2, 3]);
        let b = Tensor::<f64>::zeros(&[4, 2]);
        let err = a.matmul(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("[2, 3]") && msg.contains("[4, 2]"), "{msg}");
    }

    #[test]
    fn gather_rows_and_cols() {
        let m = Tensor::new(vec![3, 2], vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let r = m.gather_rows(&[2, 0]).unwrap();
        assert_eq!(r.data(), &[5.0, 6.0, 1.0, 2.0]);
        let c = m.gather_cols(&[1]).unwrap();
        assert_eq!(c.data(), &[2.0, 4.0, 6.0]);
    }
}
