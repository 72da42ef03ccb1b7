use crate::field::Field;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A subspace of `F^ambient`, stored by its canonical basis: the nonzero
/// rows of the reduced row echelon form of any spanning set.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// The row space of `rows`.
    pub fn span(rows: &Matrix<F>) -> Self {
        let rref = rows.rref();
        let rank = rref.rank();
        Subspace { ambient: rows.cols(), basis: rref.reduced.block(0, 0, rank, rows.cols()), pivots: rref.pivots }
    }

    /// The span of the given vectors, each of length `ambient`.
    pub fn from_basis_rows(field: &F, ambient: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let m = Matrix::from_rows(field, ambient, rows).expect("vectors must have ambient length");
        Self::span(&m)
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("subspaces of F^{} and F^{}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let f = self.field();
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (k, c) in coords.iter().enumerate() {
            f.axpy(&mut residual, c, self.basis.row(k));
        }
        residual.iter().all(|x| f.is_zero(x)).then_some(coords)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|k| other.contains(self.basis.row(k)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::span(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.restricted_kernel(&other.quotient_map()))
    }

    /// `{v in self : a * v = 0}`.
    pub fn restricted_kernel(&self, a: &Matrix<F>) -> Self {
        assert_eq!(a.cols(), self.ambient, "map domain does not match ambient dimension");
        let bt = self.basis.transpose();
        let coeffs = (a * &bt).kernel_vectors();
        let rows = coeffs.iter().map(|c| bt.apply(c)).collect();
        Self::from_basis_rows(self.field(), self.ambient, rows)
    }

    /// The image `a(self)` as a subspace of `F^(a.rows)`.
    pub fn image_under(&self, a: &Matrix<F>) -> Self {
        assert_eq!(a.cols(), self.ambient, "map domain does not match ambient dimension");
        Self::span(&(&self.basis * &a.transpose()))
    }

    /// A surjection `F^ambient -> F^codim` whose kernel is exactly `self`.
    ///
    /// The quotient is identified with the span of the standard basis vectors
    /// at the non-pivot positions, so the map restricts to the identity there.
    pub fn quotient_map(&self) -> Matrix<F> {
        let f = self.field();
        let free = self.complement_positions();
        let mut q = Matrix::zeros(f, free.len(), self.ambient);
        for (row, &c) in free.iter().enumerate() {
            q.set(row, c, f.one());
            for (k, &p) in self.pivots.iter().enumerate() {
                q.set(row, p, f.neg(self.basis.get(k, c)));
            }
        }
        q
    }

    /// Positions of the standard basis vectors spanning the canonical complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}
