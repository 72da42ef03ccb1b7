//! Bristles `B(λ) = (k, k; λ1, …, λn)` for points `λ` of projective space,
//! bristle vectors, bristled and saturated modules.
//!
//! Everything that quantifies over all bristles needs a finite field.

use std::cmp::Ordering;
use std::fmt;

use crate::field::Field;
use crate::kron::{ext1_dim, hom_basis, KroneckerModule, SubmodulePair};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// Enumerations larger than this are refused rather than attempted.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

/// A point of `P^{n-1}(k)`, normalized so that its first nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BristlePoint<F: Field> {
    field: F,
    coords: Vec<F::Elem>,
}

impl<F: Field> BristlePoint<F> {
    pub fn new(field: &F, coords: Vec<F::Elem>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|x| !field.is_zero(x)) else {
            return Err(Error::InvalidArgument("a bristle needs a nonzero coordinate vector".into()));
        };
        let inv = field.inv(lead).expect("nonzero");
        let mut coords = coords;
        field.scale(&mut coords, &inv);
        Ok(BristlePoint { field: field.clone(), coords })
    }

    /// `B(r)`: `αr = 1` and all other arrows zero. Indices start at one and are read mod `n`.
    pub fn single(field: &F, n: usize, r: usize) -> Result<Self> {
        check_index(n, r)?;
        let mut coords = vec![field.zero(); n];
        coords[(r - 1) % n] = field.one();
        Self::new(field, coords)
    }

    /// `B(r, s)`: `αr = αs = 1` and all other arrows zero, for `r ≢ s (mod n)`.
    pub fn pair(field: &F, n: usize, r: usize, s: usize) -> Result<Self> {
        check_index(n, r)?;
        check_index(n, s)?;
        let (i, j) = ((r - 1) % n, (s - 1) % n);
        if i == j {
            return Err(Error::InvalidArgument(format!("B({r},{s}) needs two distinct arrows mod {n}")));
        }
        let mut coords = vec![field.zero(); n];
        coords[i] = field.one();
        coords[j] = field.one();
        Self::new(field, coords)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.coords.len()
    }
    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn module(&self) -> KroneckerModule<F> {
        KroneckerModule::from_fn(&self.field, self.n(), 1, 1, |i, _, _| self.coords[i].clone())
    }

    /// `B(r)` or `B(r,s)` when the point has that shape, else `B(λ1:…:λn)`.
    pub fn label(&self) -> String {
        let f = &self.field;
        let support: Vec<usize> = (0..self.n()).filter(|&i| !f.is_zero(&self.coords[i])).collect();
        let all_one = support.iter().all(|&i| self.coords[i] == f.one());
        match support.as_slice() {
            [r] => format!("B({})", r + 1),
            [r, s] if all_one => format!("B({},{})", r + 1, s + 1),
            _ => {
                let parts: Vec<String> = self.coords.iter().map(|x| f.format(x)).collect();
                format!("B({})", parts.join(":"))
            }
        }
    }
}

fn check_index(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidArgument(format!("arrow index {r} for n = {n}; indices start at 1")));
    }
    Ok(())
}

impl<F: Field> PartialOrd for BristlePoint<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for BristlePoint<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl<F: Field> fmt::Display for BristlePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The named generating sets of bristles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalSet {
    /// `{B(n-1), B(n), B(r, r+1) : 1 ≤ r ≤ n}`.
    B0,
    /// `B0` without `B(n-1, n)`.
    B0Prime,
    /// `{B(1), B(i, i+1) : 1 ≤ i ≤ n}`.
    B1Prime,
}

impl fmt::Display for CanonicalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CanonicalSet::B0 => "B0",
            CanonicalSet::B0Prime => "B0'",
            CanonicalSet::B1Prime => "B1'",
        })
    }
}

/// The bristles of a named set, in the order of its definition. Requires `n ≥ 3`.
pub fn canonical_set<F: Field>(field: &F, name: CanonicalSet, n: usize) -> Result<Vec<BristlePoint<F>>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("{name} is defined for n ≥ 3, got n = {n}")));
    }
    let cycle = (1..=n).map(|r| BristlePoint::pair(field, n, r, r + 1));
    let set: Result<Vec<_>> = match name {
        CanonicalSet::B0 => [BristlePoint::single(field, n, n - 1), BristlePoint::single(field, n, n)]
            .into_iter()
            .chain(cycle)
            .collect(),
        CanonicalSet::B0Prime => {
            let excluded = BristlePoint::pair(field, n, n - 1, n)?;
            let all = canonical_set(field, CanonicalSet::B0, n)?;
            Ok(all.into_iter().filter(|b| *b != excluded).collect())
        }
        CanonicalSet::B1Prime => std::iter::once(BristlePoint::single(field, n, 1)).chain(cycle).collect(),
    };
    set
}

pub fn modules_of<F: Field>(points: &[BristlePoint<F>]) -> Vec<KroneckerModule<F>> {
    points.iter().map(BristlePoint::module).collect()
}

fn checked_count(q: u64, exponent: usize) -> Result<u64> {
    (0..exponent)
        .try_fold(1u64, |acc, _| acc.checked_mul(q).filter(|&v| v <= ENUMERATION_LIMIT))
        .ok_or_else(|| Error::TooLarge(format!("{q}^{exponent} exceeds the enumeration limit {ENUMERATION_LIMIT}")))
}

/// All normalized nonzero vectors of `k^d` in lexicographic order.
fn projective_points<F: Field>(field: &F, d: usize, what: &'static str) -> Result<Vec<Vec<F::Elem>>> {
    let elems = field.elements().ok_or(Error::RequiresFiniteField(what))?;
    let q = elems.len() as u64;
    checked_count(q, d)?;
    let mut out = Vec::new();
    for lead in (0..d).rev() {
        let tail = d - lead - 1;
        for mut idx in 0..q.pow(tail as u32) {
            let mut v = vec![field.zero(); d];
            v[lead] = field.one();
            for pos in (lead + 1..d).rev() {
                v[pos] = elems[(idx % q) as usize].clone();
                idx /= q;
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// All `(q^n − 1)/(q − 1)` bristles over `GF(q)`, in lexicographic order of
/// their normalized coordinates.
pub fn enumerate_bristles<F: Field>(field: &F, n: usize) -> Result<Vec<BristlePoint<F>>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(projective_points(field, n, "bristle enumeration")?
        .into_iter()
        .map(|coords| BristlePoint { field: field.clone(), coords })
        .collect())
}

/// `u ∈ M1` is a bristle vector when `α1(u), …, αn(u)` span a line.
pub fn is_bristle_vector<F: Field>(m: &KroneckerModule<F>, u: &[F::Elem]) -> Result<bool> {
    if u.len() != m.dim1() {
        return Err(Error::DimensionMismatch(format!("vector of length {} in M1 of dim {}", u.len(), m.dim1())));
    }
    if u.iter().all(|x| m.field().is_zero(x)) {
        return Err(Error::InvalidArgument("the zero vector is not a bristle vector candidate".into()));
    }
    Ok(Matrix::from_rows(m.field(), m.dim2(), m.arrow_images(u))?.rank() == 1)
}

/// The type `λ` of a bristle vector: `αi(u) = λi w` for a common `w`.
fn bristle_type<F: Field>(m: &KroneckerModule<F>, u: &[F::Elem]) -> Option<BristlePoint<F>> {
    let f = m.field();
    let images = m.arrow_images(u);
    let w = images.iter().find(|v| v.iter().any(|x| !f.is_zero(x)))?;
    let p = w.iter().position(|x| !f.is_zero(x))?;
    let inv = f.inv(&w[p])?;
    let lambda: Vec<F::Elem> = images.iter().map(|v| f.mul(&v[p], &inv)).collect();
    let consistent = images.iter().zip(&lambda).all(|(v, l)| v.iter().zip(w).all(|(x, y)| *x == f.mul(l, y)));
    consistent.then(|| BristlePoint::new(f, lambda).expect("λ has a unit entry"))
}

/// One line of the bristle variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPoint<F: Field> {
    /// Normalized vector of the reduced module's `M1`.
    pub vector: Vec<F::Elem>,
    pub bristle: BristlePoint<F>,
}

/// The bristle variety of `M`, computed on `M / M'` where `M' = (∩ ker αi, 0)`.
#[derive(Clone, Debug)]
pub struct BristleVariety<F: Field> {
    pub reduced: KroneckerModule<F>,
    pub points: Vec<VarietyPoint<F>>,
}

/// Exhaustive over the lines of the reduced module's `M1`, in lexicographic order.
pub fn bristle_variety<F: Field>(m: &KroneckerModule<F>) -> Result<BristleVariety<F>> {
    let f = m.field();
    let kernel = SubmodulePair { vertex1: m.stacked().kernel(), vertex2: Subspace::zero(f, m.dim2()) };
    let (reduced, _) = m.quotient(&kernel)?;
    let points = projective_points(f, reduced.dim1(), "bristle variety")?
        .into_iter()
        .filter_map(|u| bristle_type(&reduced, &u).map(|bristle| VarietyPoint { vector: u, bristle }))
        .collect();
    Ok(BristleVariety { reduced, points })
}

/// The trace of all bristles plus `(0, M2)`.
pub fn maximal_bristled_submodule<F: Field>(m: &KroneckerModule<F>) -> Result<SubmodulePair<F>> {
    let f = m.field();
    let mut sub = SubmodulePair { vertex1: Subspace::zero(f, m.dim1()), vertex2: Subspace::full(f, m.dim2()) };
    for b in enumerate_bristles(f, m.n())? {
        for h in hom_basis(&b.module(), m)? {
            sub = sub.sum(&h.image())?;
        }
        if sub.is_full() {
            break;
        }
    }
    Ok(sub)
}

/// `M1` is spanned by bristle vectors.
pub fn is_bristled<F: Field>(m: &KroneckerModule<F>) -> Result<bool> {
    Ok(maximal_bristled_submodule(m)?.vertex1.is_full())
}

/// `Ext¹(B, M) = 0` for every bristle `B`.
pub fn is_saturated<F: Field>(m: &KroneckerModule<F>) -> Result<bool> {
    for b in enumerate_bristles(m.field(), m.n())? {
        if ext1_dim(&b.module(), m)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bristles `B` with `Ext¹(B, M) ≠ 0`.
pub fn unsaturated_witnesses<F: Field>(m: &KroneckerModule<F>) -> Result<Vec<BristlePoint<F>>> {
    let mut out = Vec::new();
    for b in enumerate_bristles(m.field(), m.n())? {
        if ext1_dim(&b.module(), m)? != 0 {
            out.push(b);
        }
    }
    Ok(out)
}

/// A bristled, faithful module of dimension `(3, 2)` for `n = 3`: the zig-zag
/// `a → u ← b → v ← c` with arrow labels `α1, α2, α2, α3`.
pub fn zigzag_bristled<F: Field>(field: &F) -> KroneckerModule<F> {
    let alphas = vec![
        Matrix::from_i64(field, &[&[1, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(field, &[&[0, 1, 0], &[0, 1, 0]]),
        Matrix::from_i64(field, &[&[0, 0, 0], &[0, 0, 1]]),
    ];
    KroneckerModule::new(field, 3, 3, 2, alphas).expect("fixed shapes")
}

/// A faithful module of dimension `(3, 2)` for `n = 3` that is not bristled:
/// `a, b, c` map to `u` under `α1, α2, α3` and `c` maps to `v` under `α1`.
pub fn fan_unbristled<F: Field>(field: &F) -> KroneckerModule<F> {
    let alphas = vec![
        Matrix::from_i64(field, &[&[1, 0, 0], &[0, 0, 1]]),
        Matrix::from_i64(field, &[&[0, 1, 0], &[0, 0, 0]]),
        Matrix::from_i64(field, &[&[0, 0, 1], &[0, 0, 0]]),
    ];
    KroneckerModule::new(field, 3, 3, 2, alphas).expect("fixed shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_bristles(&gf(2), 2).unwrap().len(), 3);
        assert_eq!(enumerate_bristles(&gf(2), 3).unwrap().len(), 7);
        assert_eq!(enumerate_bristles(&gf(3), 2).unwrap().len(), 4);
        assert_eq!(enumerate_bristles(&gf(5), 3).unwrap().len(), 31);
        assert!(matches!(enumerate_bristles(&Rationals, 3), Err(Error::RequiresFiniteField(_))));
    }

    #[test]
    fn enumeration_is_sorted_and_normalized() {
        let f = gf(3);
        let all = enumerate_bristles(&f, 3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for b in &all {
            assert_eq!(BristlePoint::new(&f, b.coords().to_vec()).unwrap(), *b);
        }
    }

    #[test]
    fn canonical_sets_for_three_arrows() {
        let f = gf(5);
        let labels = |s| -> Vec<String> { canonical_set(&f, s, 3).unwrap().iter().map(|b| b.label()).collect() };
        assert_eq!(labels(CanonicalSet::B0), ["B(2)", "B(3)", "B(1,2)", "B(2,3)", "B(1,3)"]);
        assert_eq!(labels(CanonicalSet::B0Prime), ["B(2)", "B(3)", "B(1,2)", "B(1,3)"]);
        assert_eq!(labels(CanonicalSet::B1Prime), ["B(1)", "B(1,2)", "B(2,3)", "B(1,3)"]);
        assert!(canonical_set(&f, CanonicalSet::B0, 2).is_err());
    }

    #[test]
    fn normalization_scales_first_nonzero_to_one() {
        let f = gf(5);
        let b = BristlePoint::new(&f, vec![0, 2, 4]).unwrap();
        assert_eq!(b.coords(), &[0, 1, 2]);
        assert!(BristlePoint::new(&f, vec![0, 0]).is_err());
    }

    #[test]
    fn variety_of_two_coordinate_bristles() {
        let f = gf(5);
        let m = BristlePoint::single(&f, 3, 1)
            .unwrap()
            .module()
            .direct_sum(&BristlePoint::single(&f, 3, 2).unwrap().module())
            .unwrap();
        let v = bristle_variety(&m).unwrap();
        let types: Vec<String> = v.points.iter().map(|p| p.bristle.label()).collect();
        assert_eq!(types, ["B(2)", "B(1)"]);
    }

    #[test]
    fn zero_vector_is_a_usage_error() {
        let f = gf(2);
        let m = BristlePoint::single(&f, 3, 1).unwrap().module();
        assert!(is_bristle_vector(&m, &[0]).is_err());
        assert!(is_bristle_vector(&m, &[1]).unwrap());
    }

    #[test]
    fn zigzag_versus_fan() {
        for p in [2, 5] {
            let f = gf(p);
            assert!(is_bristled(&zigzag_bristled(&f)).unwrap());
            assert!(!is_bristled(&fan_unbristled(&f)).unwrap());
        }
    }
}
