use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::linalg::Subspace;
use crate::{Error, Result};

/// Dense row-major matrix over `F`.
///
/// Shape mismatches in the arithmetic operators panic, like slice indexing;
/// the solver and subspace APIs report them as [`Error::DimensionMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { data: vec![field.zero(); rows * cols], field: field.clone(), rows, cols }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from rows, all of which must have length `cols`.
    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(Matrix { field: field.clone(), rows: nrows, cols, data })
    }

    /// Convenience constructor from small integers, reduced into the field.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    pub fn field(&self) -> &F {
        &self.field
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

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Matrix-vector product with `v` read as a column vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length does not match column count");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(x) {
                        acc = f.add(&acc, &f.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scaled(&self, c: &F::Elem) -> Self {
        let mut out = self.clone();
        self.field.scale(&mut out.data, c);
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Stacks matrices of equal width vertically; `cols` fixes the width when the list is empty.
    pub fn vstack_all(field: &F, cols: usize, blocks: &[Self]) -> Self {
        let mut out = Self::zeros(field, 0, cols);
        for b in blocks {
            out = out.vstack(b);
        }
        out
    }

    /// Stacks matrices of equal height horizontally; `rows` fixes the height when the list is empty.
    pub fn hstack_all(field: &F, rows: usize, blocks: &[Self]) -> Self {
        let mut out = Self::zeros(field, rows, 0);
        for b in blocks {
            out = out.hstack(b);
        }
        out
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows + other.rows, self.cols + other.cols, |r, c| match (r < self.rows, c < self.cols) {
            (true, true) => self.get(r, c).clone(),
            (false, false) => other.get(r - self.rows, c - self.cols).clone(),
            _ => f.zero(),
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(&self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// scanning columns left to right and, within a column, rows top to bottom.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, col)).expect("pivot is nonzero");
            let (start, end) = (prow * m.cols, (prow + 1) * m.cols);
            f.scale(&mut m.data[start..end], &inv);
            let pivot_row = m.data[start..end].to_vec();
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if !f.is_zero(&factor) {
                    let s = r * m.cols;
                    f.axpy(&mut m.data[s + col..s + m.cols], &factor, &pivot_row[col..]);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// The null space `{x : self * x = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace<F> {
        Subspace::from_basis_rows(&self.field, self.cols, self.kernel_vectors())
    }

    /// A basis of the null space: one vector per free column, with that free
    /// variable set to one and the other free variables set to zero.
    pub fn kernel_vectors(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (k, &p) in rref.pivots.iter().enumerate() {
                    v[p] = f.neg(rref.reduced.get(k, free));
                }
                v
            })
            .collect()
    }

    /// The column space as a subspace of `F^rows`.
    pub fn image(&self) -> Subspace<F> {
        Subspace::span(&self.transpose())
    }

    /// Solves `self * x = b`. Returns `Ok(None)` for an inconsistent system.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let col = Matrix::from_fn(f, self.rows, 1, |r, _| b[r].clone());
        let aug = self.hstack(&col).rref();
        if aug.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (k, &p) in aug.pivots.iter().enumerate() {
            x[p] = aug.reduced.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n)).rref();
        if aug.pivots.len() < n || aug.pivots.last().is_some_and(|&last| last != n - 1) {
            return None;
        }
        Some(aug.reduced.block(0, n, n, n))
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            write!(out, "[{}]", row.join(" "))?;
        }
        write!(out, "]")
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !f.is_zero(a) {
                    let neg = f.neg(a);
                    f.axpy(dst, &neg, rhs.row(k));
                }
            }
        }
        out
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        let f = &self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        let f = &self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }
}
