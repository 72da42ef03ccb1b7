use std::collections::HashSet;

use proptest::prelude::*;

use kronbrist::field::{Field, PrimeField, Rationals};
use kronbrist::linalg::{Matrix, Subspace};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// A prime from the small set and a matrix of raw entries reduced mod p.
fn prime_matrix(max: usize) -> impl Strategy<Value = Matrix<PrimeField>> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 0..=max, 0..=max).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |v| {
            let f = gf(p);
            Matrix::from_fn(&f, r, c, |i, j| f.from_i64(v[i * c + j] as i64))
        })
    })
}

fn int_rows(r: usize, c: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, r * c)
}

fn over<F: Field>(f: &F, r: usize, c: usize, v: &[i64]) -> Matrix<F> {
    Matrix::from_fn(f, r, c, |i, j| f.from_i64(v[i * c + j]))
}

/// Every vector of `GF(p)^len`, in lexicographic order.
fn all_vectors(p: u64, len: usize) -> Vec<Vec<u64>> {
    (0..p.pow(len as u32))
        .map(|mut k| {
            (0..len)
                .map(|_| {
                    let d = k % p;
                    k /= p;
                    d
                })
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in prime_matrix(6)) {
        let once = m.rref();
        prop_assert_eq!(once.reduced.rref(), once.clone());
        prop_assert_eq!(once.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity_is_column_count(m in prime_matrix(6)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| *x == 0));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
    }

    #[test]
    fn span_is_canonical_under_row_operations(m in prime_matrix(5), seed in any::<u64>()) {
        let f = *m.field();
        let p = f.modulus();
        // Append combinations of the rows and shuffle: the span must not move.
        let rows = m.row_vecs();
        let mut extended = rows.clone();
        for (k, r) in rows.iter().enumerate() {
            let c = f.from_i64(((seed >> (k % 60)) % p) as i64);
            let mut combo = r.clone();
            if let Some(first) = rows.first() {
                for (x, y) in combo.iter_mut().zip(first) {
                    *x = f.add(x, &f.mul(&c, y));
                }
            }
            extended.push(combo);
        }
        extended.reverse();
        let a = Subspace::span(&m);
        let b = Subspace::span(&Matrix::from_rows(&f, m.cols(), extended).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn subspace_dimension_formula_and_modular_law(
        p in prop::sample::select(vec![2u64, 3, 5]),
        amb in 1usize..6,
        a in int_rows(3, 5),
        b in int_rows(3, 5),
        c in int_rows(2, 5),
    ) {
        let f = gf(p);
        let cut = |v: &[i64], r| Subspace::span(&over(&f, r, amb, &v.iter().take(r * 5).copied().collect::<Vec<_>>()
            .chunks(5).flat_map(|row| row[..amb].to_vec()).collect::<Vec<_>>()));
        let (u0, v, w0) = (cut(&a, 3), cut(&b, 3), cut(&c, 2));
        prop_assert_eq!(
            u0.sum(&v).unwrap().dim() + u0.intersection(&v).unwrap().dim(),
            u0.dim() + v.dim()
        );
        // With U inside W: (U + V) ∩ W = U + (V ∩ W).
        let u = u0.intersection(&w0).unwrap();
        let w = w0.sum(&u).unwrap();
        let lhs = u.sum(&v).unwrap().intersection(&w).unwrap();
        let rhs = u.sum(&v.intersection(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(u.is_subspace_of(&u.sum(&v).unwrap()));
    }

    #[test]
    fn kernel_and_row_space_match_enumeration(p in prop::sample::select(vec![2u64, 3]), r in 0usize..5, c in 0usize..6, seed in prop::collection::vec(0u64..3, 30)) {
        let f = gf(p);
        let m = Matrix::from_fn(&f, r, c, |i, j| seed[i * 6 + j] % p);
        let vectors = all_vectors(p, c);
        let kernel = vectors.iter().filter(|v| m.apply(v).iter().all(|x| *x == 0)).count();
        prop_assert_eq!(kernel as u64, p.pow((c - m.rank()) as u32));
        let images: HashSet<Vec<u64>> = all_vectors(p, r).iter().map(|y| m.transpose().apply(y)).collect();
        prop_assert_eq!(images.len() as u64, p.pow(m.rank() as u32));
        let space = Subspace::span(&m);
        prop_assert!(images.iter().all(|v| space.contains(v)));
    }

    #[test]
    fn solve_finds_a_solution_exactly_when_one_exists(m in prime_matrix(5), seed in any::<u64>()) {
        let f = *m.field();
        let b: Vec<u64> = (0..m.rows()).map(|k| (seed >> (3 * k)) % f.modulus()).collect();
        let augmented = m.hstack(&Matrix::from_fn(&f, m.rows(), 1, |i, _| b[i]));
        match m.solve(&b).unwrap() {
            Some(x) => prop_assert_eq!(m.apply(&x), b),
            None => prop_assert_eq!(augmented.rank(), m.rank() + 1),
        }
    }

    #[test]
    fn inverse_is_two_sided(m in prime_matrix(5)) {
        match m.inverse() {
            Some(inv) => {
                let id = Matrix::identity(m.field(), m.rows());
                prop_assert_eq!(&m * &inv, id.clone());
                prop_assert_eq!(&inv * &m, id);
            }
            None => prop_assert!(!m.is_invertible()),
        }
    }

    #[test]
    fn rational_rank_bounds_every_reduction(r in 0usize..5, c in 0usize..5, v in int_rows(4, 4)) {
        let v: Vec<i64> = v.chunks(4).take(r).flat_map(|row| row[..c].to_vec()).collect();
        let rational = over(&Rationals, r, c, &v).rank();
        for p in [2, 3, 5, 7] {
            prop_assert!(over(&gf(p), r, c, &v).rank() <= rational);
        }
        // Integer entries in [-3, 3]: reduction mod a large prime loses nothing.
        prop_assert_eq!(over(&gf(1_000_003), r, c, &v).rank(), rational);
    }

    #[test]
    fn product_rank_is_bounded(a in int_rows(4, 4), b in int_rows(4, 4)) {
        let f = gf(5);
        let (x, y) = (over(&f, 4, 4, &a), over(&f, 4, 4, &b));
        let rank = (&x * &y).rank();
        prop_assert!(rank <= x.rank().min(y.rank()));
        prop_assert!(rank + 4 >= x.rank() + y.rank());
    }
}

#[test]
fn rational_elimination_keeps_exact_fractions() {
    let f = Rationals;
    let m = Matrix::from_i64(&f, &[&[2, 4], &[3, 5]]);
    let inv = m.inverse().unwrap();
    assert_eq!(f.format(inv.get(0, 0)), "-5/2");
    assert_eq!(f.format(inv.get(1, 1)), "-1");
    assert_eq!(&m * &inv, Matrix::identity(&f, 2));
}
