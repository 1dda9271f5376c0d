//! Dense row-major tensors and index contraction.

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: FieldSpec,
    shape: Vec<usize>,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: FieldSpec, shape: &[usize]) -> Tensor {
        let len = shape.iter().product();
        Tensor { field, shape: shape.to_vec(), data: vec![field.zero(); len] }
    }

    pub fn from_vec(field: FieldSpec, shape: &[usize], data: Vec<Scalar>) -> Result<Tensor> {
        if data.len() != shape.iter().product::<usize>() {
            return Err(Error::Shape(format!("{} entries for shape {shape:?}", data.len())));
        }
        Ok(Tensor { field, shape: shape.to_vec(), data })
    }

    pub fn from_matrix(m: &Matrix) -> Tensor {
        Tensor { field: m.field(), shape: vec![m.rows(), m.cols()], data: m.entries().to_vec() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter().zip(&self.shape).fold(0, |acc, (i, n)| acc * n + i)
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn reshape(&self, shape: &[usize]) -> Result<Tensor> {
        Tensor::from_vec(self.field, shape, self.data.clone())
    }

    /// Views a tensor as a matrix: the first `split` axes index rows.
    pub fn to_matrix(&self, split: usize) -> Matrix {
        let rows = self.shape[..split].iter().product();
        let cols = self.shape[split..].iter().product();
        Matrix::from_fn(self.field, rows, cols, |i, j| self.data[i * cols + j].clone())
    }

    /// Contracts the paired axes. The result keeps the free axes of `self`
    /// followed by the free axes of `other`, in order.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
        for &(a, b) in pairs {
            let (ea, eb) = (self.shape.get(a), other.shape.get(b));
            if ea.is_none() || ea != eb {
                return Err(Error::Shape(format!("cannot pair axis {a} with axis {b}")));
            }
        }
        let free_a: Vec<usize> =
            (0..self.shape.len()).filter(|x| !pairs.iter().any(|p| p.0 == *x)).collect();
        let free_b: Vec<usize> =
            (0..other.shape.len()).filter(|x| !pairs.iter().any(|p| p.1 == *x)).collect();
        let summed: Vec<usize> = pairs.iter().map(|p| self.shape[p.0]).collect();

        // Permute both operands into matrices: a as (free_a, summed), b as (summed, free_b).
        let mut perm_a = free_a.clone();
        perm_a.extend(pairs.iter().map(|p| p.0));
        let mut perm_b: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        perm_b.extend(free_b.iter().copied());
        let k: usize = summed.iter().product();
        let ma = self.permute(&perm_a).reshape_matrix(k, false);
        let mb = other.permute(&perm_b).reshape_matrix(k, true);
        let prod = ma.try_mul(&mb)?;

        let mut shape: Vec<usize> = free_a.iter().map(|&x| self.shape[x]).collect();
        shape.extend(free_b.iter().map(|&x| other.shape[x]));
        Tensor::from_vec(self.field, &shape, prod.entries().to_vec())
    }

    fn reshape_matrix(&self, k: usize, k_rows: bool) -> Matrix {
        let total = self.data.len();
        let (rows, cols) = if k_rows { (k, total / k.max(1)) } else { (total / k.max(1), k) };
        Matrix::from_fn(self.field, rows, cols, |i, j| self.data[i * cols + j].clone())
    }

    /// Reorders axes so that axis `perm[i]` of `self` becomes axis `i`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut out = Tensor::zeros(self.field, &shape);
        let mut idx = vec![0usize; shape.len()];
        let mut src = vec![0usize; shape.len()];
        for o in 0..out.data.len() {
            let mut rem = o;
            for ax in (0..shape.len()).rev() {
                idx[ax] = rem % shape[ax];
                rem /= shape[ax];
            }
            for (ax, &p) in perm.iter().enumerate() {
                src[p] = idx[ax];
            }
            out.data[o] = self.get(&src).clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn t(shape: &[usize], v: &[i64]) -> Tensor {
        Tensor::from_vec(Q, shape, v.iter().map(|&x| Q.int(x)).collect()).unwrap()
    }

    #[test]
    fn contraction_matches_matrix_product() {
        let a = t(&[2, 3], &[1, 2, 3, 4, 5, 6]);
        let v = t(&[3], &[1, 0, -1]);
        assert_eq!(a.contract(&v, &[(1, 0)]).unwrap(), t(&[2], &[-2, -2]));
        assert_eq!(v.contract(&a, &[(0, 1)]).unwrap(), t(&[2], &[-2, -2]));
    }

    #[test]
    fn empty_contraction_is_outer_product() {
        let a = t(&[2], &[1, 2]);
        let b = t(&[3], &[1, 10, 100]);
        let o = a.contract(&b, &[]).unwrap();
        assert_eq!(o.shape(), &[2, 3]);
        assert_eq!(o, t(&[2, 3], &[1, 10, 100, 2, 20, 200]));
    }

    #[test]
    fn two_step_contraction_equals_one_step() {
        let a = t(&[2, 2, 2], &[1, 2, 3, 4, 5, 6, 7, 8]);
        let u = t(&[2], &[1, -1]);
        let w = t(&[2], &[2, 3]);
        let one = a.contract(&u.contract(&w, &[]).unwrap(), &[(1, 0), (2, 1)]).unwrap();
        let two = a.contract(&w, &[(2, 0)]).unwrap().contract(&u, &[(1, 0)]).unwrap();
        assert_eq!(one, two);
        assert!(a.contract(&t(&[3], &[0, 0, 0]), &[(0, 0)]).is_err());
    }
}
