//! Dense matrices with exact Gaussian elimination.

use std::fmt;

use super::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// A dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from `f(i, j)`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// A matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Matrix {
        Matrix { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        if !v.is_zero() {
            let e = &mut self.data[i * self.cols + j];
            *e += v;
        }
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same_shape(&self, o: &Matrix) -> Result<()> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Matrix) -> Result<Matrix> {
        self.check_same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Ok(self.with_data(data))
    }

    pub fn try_sub(&self, o: &Matrix) -> Result<Matrix> {
        self.check_same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * o`, skipping zero entries.
    pub fn axpy(&mut self, c: &Scalar, o: &Matrix) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "axpy shape mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Kronecker product; index `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let first = blocks.first().ok_or_else(|| Error::Shape("empty hstack".into()))?;
        if blocks.iter().any(|b| b.rows != first.rows) {
            return Err(Error::Shape("hstack row mismatch".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(first.field, first.rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix]) -> Result<Matrix> {
        let first = blocks.first().ok_or_else(|| Error::Shape("empty vstack".into()))?;
        if blocks.iter().any(|b| b.cols != first.cols) {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * first.cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { field: first.field, rows, cols: first.cols, data })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) - &(&f * b);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminating the shorter side is cheaper and gives the same rank.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.rref().1.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (col, &f) in free.iter().enumerate() {
            k.set(f, col, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                k.set(p, col, -r.get(row, f));
            }
        }
        k
    }

    /// Solves `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {} rows vs right-hand side with {} rows",
                self.rows, b.rows
            )));
        }
        let aug = Matrix::hstack(&[self, b])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows)).ok()??;
        x.try_mul(self).ok()?.is_identity().then_some(x)
    }

    /// Selects a maximal independent subset of the columns.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        Matrix::from_fn(self.field, self.rows, pivots.len(), |i, j| self.get(i, pivots[j]).clone())
    }

    /// True when the column spans coincide.
    pub fn same_column_span(&self, o: &Matrix) -> bool {
        if self.rows != o.rows {
            return false;
        }
        let r = self.rank();
        r == o.rank() && Matrix::hstack(&[self, o]).map(|m| m.rank()) == Ok(r)
    }

    /// True when every column of `o` lies in the column span of `self`.
    pub fn spans(&self, o: &Matrix) -> bool {
        self.rows == o.rows
            && Matrix::hstack(&[self, o]).map(|m| m.rank()) == Ok(self.rank())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(Q, rows.iter().map(|r| r.iter().map(|&x| Q.int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_of_trivial_cases() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 3, 3).rank(), 0);
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(Q, 3, 3).kernel_basis(), Matrix::identity(Q, 3));
    }

    #[test]
    fn random_kernel_is_annihilated() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            // rank 3 by construction: 4x3 times 3x6
            let a = Matrix::from_fn(Q, 4, 3, |_, _| Q.int(rng.gen_range(-3..=3)));
            let b = Matrix::from_fn(Q, 3, 6, |_, _| Q.int(rng.gen_range(-3..=3)));
            let m = a.try_mul(&b).unwrap();
            let k = m.kernel_basis();
            assert_eq!(m.rank() + k.cols(), 6);
            assert!(m.try_mul(&k).unwrap().is_zero());
            // permuted rows give the same rank
            let perm = m.select_rows(&[3, 1, 0, 2]);
            assert_eq!(perm.rank(), m.rank());
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let b = m(&[&[1], &[0]]);
        assert_eq!(a.solve(&b).unwrap(), None);
        let b = m(&[&[1], &[2]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.try_mul(&x).unwrap(), b);
        assert!(a.solve(&m(&[&[1]])).is_err());
    }

    #[test]
    fn inverse_and_spans() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.try_mul(&inv).unwrap().is_identity());
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
        let s = m(&[&[1, 0], &[0, 1], &[0, 0]]);
        let t = m(&[&[1, 1], &[1, -1], &[0, 0]]);
        assert!(s.same_column_span(&t));
        assert!(!s.same_column_span(&m(&[&[1], &[0], &[1]])));
    }

    #[test]
    fn kron_indexing() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[3], &[4]]);
        assert_eq!(a.kron(&b), m(&[&[3, 6], &[4, 8]]));
    }
}
