use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::kron::{hom_basis, hom_dim, KroneckerModule, Morphism};
use crate::Result;

/// Outcome of an isomorphism search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult<F: Field> {
    /// An explicit isomorphism was found and checked.
    Isomorphic(Morphism<F>),
    /// A certificate of non-isomorphism: different dimension vectors or
    /// `dim Hom(M, N) != dim Hom(N, M)`.
    NotIsomorphic,
    /// No certificate either way within the attempt budget.
    Unknown,
}

impl<F: Field> IsoResult<F> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoResult::Isomorphic(_) => "verified-iso",
            IsoResult::NotIsomorphic => "verified-non-iso",
            IsoResult::Unknown => "unknown",
        }
    }
}

/// Budget and seed of the randomized part of [`find_isomorphism`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoSearch {
    pub attempts: usize,
    pub seed: u64,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch { attempts: 64, seed: 0x6b72_6f6e }
    }
}

/// Tries every basis element of `Hom(M, N)` and then `attempts` random linear
/// combinations, returning the first one that is invertible at both vertices.
pub fn find_isomorphism<F: Field>(
    m: &KroneckerModule<F>,
    n: &KroneckerModule<F>,
    search: IsoSearch,
) -> Result<IsoResult<F>> {
    m.check_compatible(n)?;
    if m.dims() != n.dims() {
        return Ok(IsoResult::NotIsomorphic);
    }
    if m.is_zero() {
        return Ok(IsoResult::Isomorphic(Morphism::identity(m)));
    }
    let basis = hom_basis(m, n)?;
    if basis.len() != hom_dim(n, m)? {
        return Ok(IsoResult::NotIsomorphic);
    }
    if basis.is_empty() {
        return Ok(IsoResult::Unknown);
    }
    if let Some(h) = basis.iter().find(|h| h.is_isomorphism()) {
        return Ok(IsoResult::Isomorphic(h.clone()));
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.attempts {
        let coeffs: Vec<F::Elem> = basis.iter().map(|_| f.sample(&mut rng)).collect();
        let h = Morphism::linear_combination(f, &coeffs, &basis);
        if h.is_isomorphism() {
            return Ok(IsoResult::Isomorphic(h));
        }
    }
    Ok(IsoResult::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::kron::DimensionVector;
    use rand::SeedableRng;

    #[test]
    fn conjugated_module_is_recognised() {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = KroneckerModule::random(&f, 3, DimensionVector::new(3, 2), &mut rng);
        let g1 = crate::linalg::Matrix::from_i64(&f, &[&[1, 2, 0], &[0, 1, 3], &[0, 0, 1]]);
        let g2 = crate::linalg::Matrix::from_i64(&f, &[&[2, 1], &[1, 1]]);
        let g1_inv = g1.inverse().unwrap();
        let alphas = m.alphas().iter().map(|a| &(&g2 * a) * &g1_inv).collect();
        let n = KroneckerModule::new(&f, 3, 3, 2, alphas).unwrap();
        let found = find_isomorphism(&m, &n, IsoSearch::default()).unwrap();
        match found {
            IsoResult::Isomorphic(h) => assert!(h.is_homomorphism(&m, &n) && h.is_isomorphism()),
            other => panic!("expected an isomorphism, got {}", other.label()),
        }
    }

    #[test]
    fn different_dimensions_certify_non_iso() {
        let f = PrimeField::new(2).unwrap();
        let a = KroneckerModule::simple_source(&f, 2);
        let b = KroneckerModule::simple_sink(&f, 2);
        assert_eq!(find_isomorphism(&a, &b, IsoSearch::default()).unwrap(), IsoResult::NotIsomorphic);
    }
}
