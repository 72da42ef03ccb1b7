//! Hom spaces, Ext¹ and traces.

use crate::field::Field;
use crate::kron::{euler_form, KroneckerModule, Morphism, SubmodulePair};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// The linear system whose kernel is `Hom(M, N)`.
///
/// Unknowns are the entries of `f1` (row-major, `dim N1 × dim M1`) followed by
/// those of `f2`; there is one equation `(f2 αi − βi f1)[r, c] = 0` for every
/// arrow `i` and every entry of a `dim N2 × dim M1` matrix.
fn hom_system<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Matrix<F> {
    let f = m.field();
    let (a, b) = (m.dim1(), m.dim2());
    let (c, d) = (n.dim1(), n.dim2());
    let offset = c * a;
    let mut sys = Matrix::zeros(f, m.n() * d * a, offset + d * b);
    for (i, (alpha, beta)) in m.alphas().iter().zip(n.alphas()).enumerate() {
        for r in 0..d {
            for col in 0..a {
                let eq = i * d * a + r * a + col;
                for k in 0..b {
                    sys.set(eq, offset + r * b + k, alpha.get(k, col).clone());
                }
                for k in 0..c {
                    sys.set(eq, k * a + col, f.neg(beta.get(r, k)));
                }
            }
        }
    }
    sys
}

fn unflatten<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>, x: &[F::Elem]) -> Morphism<F> {
    let f = m.field();
    let (a, b) = (m.dim1(), m.dim2());
    let offset = n.dim1() * a;
    Morphism {
        f1: Matrix::from_fn(f, n.dim1(), a, |r, c| x[r * a + c].clone()),
        f2: Matrix::from_fn(f, n.dim2(), b, |r, c| x[offset + r * b + c].clone()),
    }
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Result<Vec<Morphism<F>>> {
    m.check_compatible(n)?;
    let sys = hom_system(m, n);
    Ok(sys.kernel().basis_vectors().iter().map(|x| unflatten(m, n, x)).collect())
}

pub fn hom_dim<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Result<usize> {
    m.check_compatible(n)?;
    let sys = hom_system(m, n);
    Ok(sys.cols() - sys.rank())
}

pub fn end_dim<F: Field>(m: &KroneckerModule<F>) -> Result<usize> {
    hom_dim(m, m)
}

/// `dim Ext¹(M, N) = dim Hom(M, N) − <dim M, dim N>`.
///
/// A negative value would contradict the hereditary Euler identity and is
/// reported as [`Error::Internal`].
pub fn ext1_dim<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let ext = hom - euler_form(m.n(), m.dims().as_i64(), n.dims().as_i64());
    usize::try_from(ext)
        .map_err(|_| Error::Internal(format!("Hom − Euler = {ext} < 0 for {} and {}", m.dims(), n.dims())))
}

/// The image of `Hom(P0, N) -> Hom(P1, N)` for the standard projective
/// presentation `0 -> P1 -> P0 -> M -> 0`, where `P0 = P(1) ⊗ M1 ⊕ P(2) ⊗ M2`
/// and `P1 = ⊕_i P(2) ⊗ M1`.
///
/// With `Hom(P(x) ⊗ V, N) = Hom_k(V, Nx)` the map reads
/// `(g1, g2) ↦ (βi g1 − g2 αi)_i` into `⊕_i Hom_k(M1, N2)`, flattened as
/// `i·(dim N2·dim M1) + r·dim M1 + c`.
fn presentation_image<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Subspace<F> {
    let f = m.field();
    let (a, b) = (m.dim1(), m.dim2());
    let (c, d) = (n.dim1(), n.dim2());
    let ambient = m.n() * d * a;
    let mut images = Vec::with_capacity(c * a + d * b);
    for r in 0..c {
        for col in 0..a {
            let mut v = vec![f.zero(); ambient];
            for (i, beta) in n.alphas().iter().enumerate() {
                for s in 0..d {
                    v[i * d * a + s * a + col] = beta.get(s, r).clone();
                }
            }
            images.push(v);
        }
    }
    for r in 0..d {
        for k in 0..b {
            let mut v = vec![f.zero(); ambient];
            for (i, alpha) in m.alphas().iter().enumerate() {
                for col in 0..a {
                    v[i * d * a + r * a + col] = f.neg(alpha.get(k, col));
                }
            }
            images.push(v);
        }
    }
    Subspace::from_basis_rows(f, ambient, images)
}

/// `dim Ext¹(M, N)` as the cokernel dimension of `Hom(P0, N) -> Hom(P1, N)`.
pub fn ext1_dim_via_resolution<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Result<usize> {
    m.check_compatible(n)?;
    Ok(presentation_image(m, n).codim())
}

/// Representatives `(δ1, …, δn)`, `δi : M1 -> N2`, of a basis of `Ext¹(M, N)`.
///
/// They are the standard basis vectors at the non-pivot positions of the
/// image of `Hom(P0, N)`, so the list is deterministic.
pub fn ext1_cocycles<F: Field>(m: &KroneckerModule<F>, n: &KroneckerModule<F>) -> Result<Vec<Vec<Matrix<F>>>> {
    m.check_compatible(n)?;
    let f = m.field();
    let (a, d) = (m.dim1(), n.dim2());
    let image = presentation_image(m, n);
    Ok(image
        .complement_positions()
        .into_iter()
        .map(|pos| {
            (0..m.n())
                .map(|i| {
                    let mut delta = Matrix::zeros(f, d, a);
                    if pos / (d * a) == i {
                        let within = pos % (d * a);
                        delta.set(within / a, within % a, f.one());
                    }
                    delta
                })
                .collect()
        })
        .collect())
}

/// The middle term `E` of the extension `0 -> N -> E -> M -> 0` given by the
/// cocycle `δ`: `E = (N1 ⊕ M1, N2 ⊕ M2; [[βi, δi], [0, αi]])`.
pub fn extension<F: Field>(
    quotient: &KroneckerModule<F>,
    sub: &KroneckerModule<F>,
    cocycle: &[Matrix<F>],
) -> Result<KroneckerModule<F>> {
    quotient.check_compatible(sub)?;
    let f = quotient.field();
    if cocycle.len() != quotient.n() || cocycle.iter().any(|d| d.shape() != (sub.dim2(), quotient.dim1())) {
        return Err(Error::DimensionMismatch("cocycle must consist of n maps M1 -> N2".into()));
    }
    let (d1, d2) = (sub.dim1() + quotient.dim1(), sub.dim2() + quotient.dim2());
    let alphas = (0..quotient.n())
        .map(|i| {
            let mut block = Matrix::zeros(f, d2, d1);
            block.set_block(0, 0, sub.alpha(i));
            block.set_block(0, sub.dim1(), &cocycle[i]);
            block.set_block(sub.dim2(), sub.dim1(), quotient.alpha(i));
            block
        })
        .collect();
    KroneckerModule::new(f, quotient.n(), d1, d2, alphas)
}

/// The sum of the images of all morphisms from the generators into `m`.
pub fn trace_submodule<F: Field>(
    generators: &[KroneckerModule<F>],
    m: &KroneckerModule<F>,
) -> Result<SubmodulePair<F>> {
    let mut trace = SubmodulePair::zero(m);
    for g in generators {
        for h in hom_basis(g, m)? {
            trace = trace.sum(&h.image())?;
        }
    }
    Ok(trace)
}

/// `m` is a quotient of a direct sum of copies of the generators.
pub fn is_generated_by<F: Field>(generators: &[KroneckerModule<F>], m: &KroneckerModule<F>) -> Result<bool> {
    Ok(trace_submodule(generators, m)?.is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn ext_between_simples() {
        let f = gf(5);
        let s1 = KroneckerModule::simple_source(&f, 3);
        let s2 = KroneckerModule::simple_sink(&f, 3);
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 3);
        assert_eq!(ext1_dim_via_resolution(&s1, &s2).unwrap(), 3);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
    }

    #[test]
    fn endomorphisms_of_a_square() {
        let f = gf(5);
        let b = KroneckerModule::from_fn(&f, 3, 1, 1, |i, _, _| u64::from(i == 0));
        let bb = b.direct_sum(&b).unwrap();
        assert_eq!(end_dim(&bb).unwrap(), 4);
        for h in hom_basis(&bb, &bb).unwrap() {
            assert!(h.is_homomorphism(&bb, &bb));
        }
    }

    #[test]
    fn split_and_nonsplit_extensions() {
        let f = gf(3);
        let s1 = KroneckerModule::simple_source(&f, 2);
        let s2 = KroneckerModule::simple_sink(&f, 2);
        let classes = ext1_cocycles(&s1, &s2).unwrap();
        assert_eq!(classes.len(), 2);
        let e = extension(&s1, &s2, &classes[0]).unwrap();
        assert_eq!(end_dim(&e).unwrap(), 1);
        let zero: Vec<_> = classes[0].iter().map(|d| d.scaled(&0)).collect();
        let split = extension(&s1, &s2, &zero).unwrap();
        assert_eq!(end_dim(&split).unwrap(), 2);
    }

    #[test]
    fn mismatched_quivers_are_rejected() {
        let f = gf(5);
        let a = KroneckerModule::simple_source(&f, 2);
        let b = KroneckerModule::simple_source(&f, 3);
        assert!(hom_basis(&a, &b).is_err());
        let g = gf(7);
        let c = KroneckerModule::simple_source(&g, 2);
        assert!(ext1_dim(&a, &c).is_err());
    }
}
