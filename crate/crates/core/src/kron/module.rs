use rand::Rng;

use crate::field::Field;
use crate::kron::DimensionVector;
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// A finite-dimensional representation `(M1, M2; α1, …, αn)` of the
/// n-Kronecker quiver: vertex 1 is the source, vertex 2 the sink, and every
/// `αi` is a `dim M2 × dim M1` matrix.
///
/// Arrows are indexed from zero in [`alpha`](Self::alpha); `alpha(0)` is `α1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerModule<F: Field> {
    field: F,
    n: usize,
    dim1: usize,
    dim2: usize,
    alphas: Vec<Matrix<F>>,
}

impl<F: Field> KroneckerModule<F> {
    pub fn new(field: &F, n: usize, dim1: usize, dim2: usize, alphas: Vec<Matrix<F>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("the quiver needs at least one arrow".into()));
        }
        if alphas.len() != n {
            return Err(Error::DimensionMismatch(format!("{} matrices for {n} arrows", alphas.len())));
        }
        for (i, a) in alphas.iter().enumerate() {
            if a.shape() != (dim2, dim1) {
                return Err(Error::DimensionMismatch(format!(
                    "alpha {} has shape {:?}, expected ({dim2}, {dim1})",
                    i + 1,
                    a.shape()
                )));
            }
            if a.field() != field {
                return Err(Error::InvalidField(format!("alpha {} lives over another field", i + 1)));
            }
        }
        Ok(KroneckerModule { field: field.clone(), n, dim1, dim2, alphas })
    }

    pub fn zero(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, 0, 0, |_, _, _| unreachable!())
    }

    /// Builds a module entrywise; `f(i, r, c)` is entry `(r, c)` of `α(i+1)`.
    pub fn from_fn(
        field: &F,
        n: usize,
        dim1: usize,
        dim2: usize,
        mut f: impl FnMut(usize, usize, usize) -> F::Elem,
    ) -> Self {
        let alphas = (0..n).map(|i| Matrix::from_fn(field, dim2, dim1, |r, c| f(i, r, c))).collect();
        KroneckerModule { field: field.clone(), n, dim1, dim2, alphas }
    }

    /// The simple module at the source, `S(1) = (k, 0)`.
    pub fn simple_source(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, 1, 0, |_, _, _| unreachable!())
    }

    /// The simple projective module at the sink, `S(2) = (0, k)`.
    pub fn simple_sink(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, 0, 1, |_, _, _| unreachable!())
    }

    /// The indecomposable projective `P(1) = (k, k^n; e1, …, en)`.
    pub fn projective_source(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, 1, n, |i, r, _| if i == r { field.one() } else { field.zero() })
    }

    /// The indecomposable injective `I(2) = (k^n, k; coordinate projections)`.
    pub fn injective_sink(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, n, 1, |i, _, c| if i == c { field.one() } else { field.zero() })
    }

    /// A module with independent uniformly random entries.
    pub fn random<R: Rng + ?Sized>(field: &F, n: usize, dims: DimensionVector, rng: &mut R) -> Self {
        Self::from_fn(field, n, dims.d1, dims.d2, |_, _, _| field.sample(rng))
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn dim1(&self) -> usize {
        self.dim1
    }
    pub fn dim2(&self) -> usize {
        self.dim2
    }
    pub fn dims(&self) -> DimensionVector {
        DimensionVector::new(self.dim1, self.dim2)
    }
    pub fn is_zero(&self) -> bool {
        self.dim1 == 0 && self.dim2 == 0
    }

    /// `α(i+1)`.
    pub fn alpha(&self, i: usize) -> &Matrix<F> {
        &self.alphas[i]
    }

    pub fn alphas(&self) -> &[Matrix<F>] {
        &self.alphas
    }

    /// The images `α1(u), …, αn(u)` of a vector `u ∈ M1`.
    pub fn arrow_images(&self, u: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        self.alphas.iter().map(|a| a.apply(u)).collect()
    }

    /// `[α1; …; αn]`, the map `M1 -> M2^n`.
    pub fn stacked(&self) -> Matrix<F> {
        Matrix::vstack_all(&self.field, self.dim1, &self.alphas)
    }

    /// `[α1 | … | αn]`, the map `M1^n -> M2`.
    pub fn side_by_side(&self) -> Matrix<F> {
        Matrix::hstack_all(&self.field, self.dim2, &self.alphas)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "modules over {}- and {}-Kronecker quivers",
                self.n, other.n
            )));
        }
        if self.field != other.field {
            return Err(Error::InvalidField(format!("modules over {} and {}", self.field.spec(), other.field.spec())));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let alphas = self.alphas.iter().zip(&other.alphas).map(|(a, b)| a.block_diag(b)).collect();
        Ok(KroneckerModule {
            field: self.field.clone(),
            n: self.n,
            dim1: self.dim1 + other.dim1,
            dim2: self.dim2 + other.dim2,
            alphas,
        })
    }

    pub fn direct_sum_all(field: &F, n: usize, summands: &[Self]) -> Result<Self> {
        summands.iter().try_fold(Self::zero(field, n), |acc, m| acc.direct_sum(m))
    }

    /// The vector-space dual with the two vertices exchanged:
    /// `(M2*, M1*; α1ᵀ, …, αnᵀ)`.
    pub fn dual(&self) -> Self {
        KroneckerModule {
            field: self.field.clone(),
            n: self.n,
            dim1: self.dim2,
            dim2: self.dim1,
            alphas: self.alphas.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The socle, radical and the dimensions of top and socle.
    pub fn layers(&self) -> Layers<F> {
        let f = &self.field;
        let socle = SubmodulePair { vertex1: self.stacked().kernel(), vertex2: Subspace::full(f, self.dim2) };
        let radical = SubmodulePair { vertex1: Subspace::zero(f, self.dim1), vertex2: self.side_by_side().image() };
        let top_dims = DimensionVector::new(self.dim1, self.dim2 - radical.vertex2.dim());
        let socle_dims = socle.dims();
        Layers { socle, radical, top_dims, socle_dims }
    }

    /// Both vertex spaces are nonzero and `α1, …, αn` are linearly independent.
    pub fn is_faithful(&self) -> bool {
        if self.dim1 == 0 || self.dim2 == 0 {
            return false;
        }
        let size = self.dim1 * self.dim2;
        let flat =
            Matrix::from_fn(&self.field, self.n, size, |i, k| self.alphas[i].get(k / self.dim1, k % self.dim1).clone());
        flat.rank() == self.n
    }

    /// The quotient `M / U` with its projection. The quotient spaces are
    /// identified with the canonical complements of `U1` and `U2`.
    pub fn quotient(&self, sub: &SubmodulePair<F>) -> Result<(Self, Morphism<F>)> {
        sub.check_in(self)?;
        let q1 = sub.vertex1.quotient_map();
        let q2 = sub.vertex2.quotient_map();
        let lift1 = Matrix::identity(&self.field, self.dim1).select_columns(&sub.vertex1.complement_positions());
        let alphas = self.alphas.iter().map(|a| &(&q2 * a) * &lift1).collect();
        let quotient =
            KroneckerModule { field: self.field.clone(), n: self.n, dim1: q1.rows(), dim2: q2.rows(), alphas };
        Ok((quotient, Morphism { f1: q1, f2: q2 }))
    }
}

/// A morphism `(f1, f2)` with `f2 αi = βi f1` for all arrows.
///
/// Source and target are not stored; [`is_homomorphism`](Self::is_homomorphism)
/// checks the intertwining relations against a given pair of modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    pub f1: Matrix<F>,
    pub f2: Matrix<F>,
}

impl<F: Field> Morphism<F> {
    pub fn identity(m: &KroneckerModule<F>) -> Self {
        Morphism { f1: Matrix::identity(m.field(), m.dim1()), f2: Matrix::identity(m.field(), m.dim2()) }
    }

    pub fn is_homomorphism(&self, source: &KroneckerModule<F>, target: &KroneckerModule<F>) -> bool {
        self.f1.shape() == (target.dim1(), source.dim1())
            && self.f2.shape() == (target.dim2(), source.dim2())
            && source.alphas().iter().zip(target.alphas()).all(|(a, b)| &self.f2 * a == b * &self.f1)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.f1.is_invertible() && self.f2.is_invertible()
    }

    pub fn image(&self) -> SubmodulePair<F> {
        SubmodulePair { vertex1: self.f1.image(), vertex2: self.f2.image() }
    }

    pub fn kernel(&self) -> SubmodulePair<F> {
        SubmodulePair { vertex1: self.f1.kernel(), vertex2: self.f2.kernel() }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Self) -> Self {
        Morphism { f1: &self.f1 * &first.f1, f2: &self.f2 * &first.f2 }
    }

    /// `Σ c_k f_k` over morphisms of a common shape.
    pub fn linear_combination(field: &F, coeffs: &[F::Elem], maps: &[Self]) -> Self {
        let first = &maps[0];
        let mut f1 = Matrix::zeros(field, first.f1.rows(), first.f1.cols());
        let mut f2 = Matrix::zeros(field, first.f2.rows(), first.f2.cols());
        for (c, m) in coeffs.iter().zip(maps) {
            f1 = &f1 + &m.f1.scaled(c);
            f2 = &f2 + &m.f2.scaled(c);
        }
        Morphism { f1, f2 }
    }
}

/// A submodule `(U1, U2)`: subspaces of `M1`, `M2` with `αi(U1) ⊆ U2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmodulePair<F: Field> {
    pub vertex1: Subspace<F>,
    pub vertex2: Subspace<F>,
}

impl<F: Field> SubmodulePair<F> {
    pub fn zero(m: &KroneckerModule<F>) -> Self {
        SubmodulePair { vertex1: Subspace::zero(m.field(), m.dim1()), vertex2: Subspace::zero(m.field(), m.dim2()) }
    }

    pub fn full(m: &KroneckerModule<F>) -> Self {
        SubmodulePair { vertex1: Subspace::full(m.field(), m.dim1()), vertex2: Subspace::full(m.field(), m.dim2()) }
    }

    /// Checks closure under the arrows before accepting the pair.
    pub fn new(m: &KroneckerModule<F>, vertex1: Subspace<F>, vertex2: Subspace<F>) -> Result<Self> {
        let s = SubmodulePair { vertex1, vertex2 };
        s.check_in(m)?;
        Ok(s)
    }

    /// The smallest submodule containing the given vectors of `M1` and `M2`.
    pub fn generated(m: &KroneckerModule<F>, vectors1: &[Vec<F::Elem>], vectors2: &[Vec<F::Elem>]) -> Self {
        let mut rows2: Vec<Vec<F::Elem>> = vectors2.to_vec();
        for u in vectors1 {
            rows2.extend(m.arrow_images(u));
        }
        SubmodulePair {
            vertex1: Subspace::from_basis_rows(m.field(), m.dim1(), vectors1.to_vec()),
            vertex2: Subspace::from_basis_rows(m.field(), m.dim2(), rows2),
        }
    }

    pub(crate) fn check_in(&self, m: &KroneckerModule<F>) -> Result<()> {
        if self.vertex1.ambient_dim() != m.dim1() || self.vertex2.ambient_dim() != m.dim2() {
            return Err(Error::DimensionMismatch(format!(
                "submodule of ambient {} inside module of dimension {}",
                self.ambient_dims(),
                m.dims()
            )));
        }
        if !self.is_closed_in(m) {
            return Err(Error::NotSubmodule("the arrows do not map U1 into U2".into()));
        }
        Ok(())
    }

    pub fn is_closed_in(&self, m: &KroneckerModule<F>) -> bool {
        self.vertex1.basis_vectors().iter().all(|u| m.arrow_images(u).iter().all(|w| self.vertex2.contains(w)))
    }

    pub fn dims(&self) -> DimensionVector {
        DimensionVector::new(self.vertex1.dim(), self.vertex2.dim())
    }

    pub fn ambient_dims(&self) -> DimensionVector {
        DimensionVector::new(self.vertex1.ambient_dim(), self.vertex2.ambient_dim())
    }

    pub fn is_full(&self) -> bool {
        self.vertex1.is_full() && self.vertex2.is_full()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Ok(SubmodulePair { vertex1: self.vertex1.sum(&other.vertex1)?, vertex2: self.vertex2.sum(&other.vertex2)? })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        Ok(SubmodulePair {
            vertex1: self.vertex1.intersection(&other.vertex1)?,
            vertex2: self.vertex2.intersection(&other.vertex2)?,
        })
    }

    pub fn is_submodule_of(&self, other: &Self) -> bool {
        self.vertex1.is_subspace_of(&other.vertex1) && self.vertex2.is_subspace_of(&other.vertex2)
    }

    /// The image of this submodule under a morphism out of its ambient module.
    pub fn image_under(&self, f: &Morphism<F>) -> Self {
        SubmodulePair { vertex1: self.vertex1.image_under(&f.f1), vertex2: self.vertex2.image_under(&f.f2) }
    }

    /// The submodule as a module in its own right, in the canonical bases of
    /// `U1` and `U2`, together with the inclusion into `m`.
    pub fn to_module(&self, m: &KroneckerModule<F>) -> Result<(KroneckerModule<F>, Morphism<F>)> {
        self.check_in(m)?;
        let f = m.field();
        let (d1, d2) = (self.vertex1.dim(), self.vertex2.dim());
        let basis1 = self.vertex1.basis_vectors();
        let alphas = m
            .alphas()
            .iter()
            .map(|a| {
                let mut restricted = Matrix::zeros(f, d2, d1);
                for (c, u) in basis1.iter().enumerate() {
                    let coords = self.vertex2.coordinates(&a.apply(u)).expect("closed under arrows");
                    for (r, x) in coords.into_iter().enumerate() {
                        restricted.set(r, c, x);
                    }
                }
                restricted
            })
            .collect();
        let module = KroneckerModule::new(f, m.n(), d1, d2, alphas)?;
        let inclusion = Morphism { f1: self.vertex1.basis().transpose(), f2: self.vertex2.basis().transpose() };
        Ok((module, inclusion))
    }
}

/// Radical layers of a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layers<F: Field> {
    /// `(∩ ker αi, M2)`.
    pub socle: SubmodulePair<F>,
    /// `(0, Σ im αi)`.
    pub radical: SubmodulePair<F>,
    pub top_dims: DimensionVector,
    pub socle_dims: DimensionVector,
}

impl<F: Field> Layers<F> {
    /// The socle is a direct sum of copies of a single simple module.
    pub fn socle_is_homogeneous(&self) -> bool {
        self.socle_dims.d1 == 0 || self.socle_dims.d2 == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn dual_is_an_involution_and_swaps_simples() {
        let f = PrimeField::new(3).unwrap();
        let s1 = KroneckerModule::simple_source(&f, 3);
        assert_eq!(s1.dual(), KroneckerModule::simple_sink(&f, 3));
        let p1 = KroneckerModule::projective_source(&f, 3);
        assert_eq!(p1.dual(), KroneckerModule::injective_sink(&f, 3));
        assert_eq!(p1.dual().dual(), p1);
    }

    #[test]
    fn rejects_misshapen_matrices() {
        let f = PrimeField::new(5).unwrap();
        let bad = vec![Matrix::zeros(&f, 2, 1)];
        assert!(KroneckerModule::new(&f, 1, 2, 1, bad).is_err());
        assert!(KroneckerModule::new(&f, 2, 0, 0, vec![Matrix::zeros(&f, 0, 0)]).is_err());
    }

    #[test]
    fn quotient_by_socle_of_injective() {
        let f = PrimeField::new(5).unwrap();
        let i2 = KroneckerModule::injective_sink(&f, 3);
        let layers = i2.layers();
        assert_eq!(layers.socle_dims, DimensionVector::new(0, 1));
        assert_eq!(layers.top_dims, DimensionVector::new(3, 0));
        let (q, proj) = i2.quotient(&layers.socle).unwrap();
        assert_eq!(q.dims(), DimensionVector::new(3, 0));
        assert!(proj.is_homomorphism(&i2, &q));
    }

    #[test]
    fn non_closed_pair_is_rejected() {
        let f = PrimeField::new(5).unwrap();
        let i2 = KroneckerModule::injective_sink(&f, 2);
        let bad = SubmodulePair { vertex1: Subspace::full(&f, 2), vertex2: Subspace::zero(&f, 1) };
        assert!(matches!(i2.quotient(&bad), Err(Error::NotSubmodule(_))));
    }

    #[test]
    fn faithful_requires_independent_arrows() {
        let f = PrimeField::new(5).unwrap();
        assert!(KroneckerModule::injective_sink(&f, 3).is_faithful());
        let m = KroneckerModule::from_fn(&f, 2, 1, 1, |_, _, _| 1);
        assert!(!m.is_faithful());
        assert!(!KroneckerModule::simple_source(&f, 2).is_faithful());
    }
}
