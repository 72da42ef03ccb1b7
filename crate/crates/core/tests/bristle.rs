use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kronbrist::bristle::{
    bristle_variety, canonical_set, enumerate_bristles, is_bristle_vector, is_bristled, is_saturated, modules_of,
    unsaturated_witnesses, BristlePoint, CanonicalSet,
};
use kronbrist::field::{Field, PrimeField};
use kronbrist::kron::{hom_dim, tau, trace_submodule, DimensionVector, KroneckerModule, SubmodulePair};
use kronbrist::linalg::{Matrix, Subspace};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn random_module(p: u64, n: usize, d1: usize, d2: usize, seed: u64) -> KroneckerModule<PrimeField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    KroneckerModule::random(&gf(p), n, DimensionVector::new(d1, d2), &mut rng)
}

/// Random module whose arrows have rank at most one, so bristle vectors are common.
fn low_rank_module(p: u64, n: usize, d1: usize, d2: usize, seed: u64) -> KroneckerModule<PrimeField> {
    let f = gf(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphas = (0..n)
        .map(|_| {
            let col: Vec<u64> = (0..d2).map(|_| f.sample(&mut rng)).collect();
            let row: Vec<u64> = (0..d1).map(|_| f.sample(&mut rng)).collect();
            Matrix::from_fn(&f, d2, d1, |i, j| f.mul(&col[i], &row[j]))
        })
        .collect();
    KroneckerModule::new(&f, n, d1, d2, alphas).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bristled_agrees_with_the_variety(
        p in prop::sample::select(vec![2u64, 3]),
        n in 2usize..4,
        d1 in 0usize..4,
        d2 in 0usize..4,
        seed in any::<u64>(),
        low in any::<bool>(),
    ) {
        let m = if low { low_rank_module(p, n, d1, d2, seed) } else { random_module(p, n, d1, d2, seed) };
        // Enumerated lines versus the trace of hom images.
        let variety = bristle_variety(&m).unwrap();
        let rows: Vec<Vec<u64>> = variety.points.iter().map(|pt| pt.vector.clone()).collect();
        let span = Subspace::from_basis_rows(&gf(p), variety.reduced.dim1(), rows);
        prop_assert_eq!(is_bristled(&m).unwrap(), span.is_full());
        for pt in &variety.points {
            prop_assert!(is_bristle_vector(&variety.reduced, &pt.vector).unwrap());
            prop_assert!(hom_dim(&pt.bristle.module(), &m).unwrap() > 0);
        }
    }

    #[test]
    fn saturation_matches_witnesses(p in prop::sample::select(vec![2u64, 3]), n in 2usize..4, d1 in 0usize..6, d2 in 0usize..4, seed in any::<u64>()) {
        let m = random_module(p, n, d1, d2, seed);
        let witnesses = unsaturated_witnesses(&m).unwrap();
        prop_assert_eq!(is_saturated(&m).unwrap(), witnesses.is_empty());
        // Once Ext vanishes, d1 - (n-1) d2 = <dim B, dim M> = dim Hom(B, M) >= 0.
        if witnesses.is_empty() {
            prop_assert!(d1 >= (n - 1) * d2);
        }
    }

    #[test]
    fn quotients_of_bristle_sums_are_bristled(p in prop::sample::select(vec![2u64, 3, 5]), picks in prop::collection::vec(any::<u16>(), 1..4), seed in any::<u64>()) {
        let f = gf(p);
        let bristles = modules_of(&enumerate_bristles(&f, 3).unwrap());
        let chosen: Vec<_> = picks.iter().map(|k| bristles[*k as usize % bristles.len()].clone()).collect();
        let sum = KroneckerModule::direct_sum_all(&f, 3, &chosen).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v1: Vec<Vec<u64>> = (0..rng.gen_range(0..2)).map(|_| (0..sum.dim1()).map(|_| f.sample(&mut rng)).collect()).collect();
        let v2: Vec<Vec<u64>> = (0..rng.gen_range(0..3)).map(|_| (0..sum.dim2()).map(|_| f.sample(&mut rng)).collect()).collect();
        let sub = SubmodulePair::generated(&sum, &v1, &v2);
        let (quotient, _) = sum.quotient(&sub).unwrap();
        prop_assert!(is_bristled(&quotient).unwrap());
    }
}

#[test]
fn canonical_sets_have_the_expected_members() {
    for (p, n) in [(2, 3), (5, 3), (3, 4)] {
        let f = gf(p);
        let label = |s| canonical_set(&f, s, n).unwrap().iter().map(BristlePoint::label).collect::<Vec<_>>();
        let b0 = label(CanonicalSet::B0);
        assert_eq!(b0.len(), n + 2);
        let b0_prime = label(CanonicalSet::B0Prime);
        assert_eq!(b0_prime.len(), n + 1);
        assert!(b0_prime.iter().all(|b| b0.contains(b)));
        let b1_prime = label(CanonicalSet::B1Prime);
        assert_eq!(b1_prime.len(), n + 1);
        assert_eq!(b1_prime[0], BristlePoint::single(&f, n, 1).unwrap().label());
    }
}

#[test]
fn bristle_counts_are_projective_space_sizes() {
    for (p, n, count) in [(2, 2, 3), (3, 2, 4), (2, 3, 7), (3, 3, 13), (5, 3, 31), (2, 4, 15), (7, 3, 57)] {
        assert_eq!(enumerate_bristles(&gf(p), n).unwrap().len(), count, "GF({p}) n={n}");
    }
}

/// Trace of `B0` at vertex 1 read off the bristle variety: `∩ ker αi` plus the
/// lifts of the lines whose type lies in `B0`.
fn b0_trace_dim1_from_variety(m: &KroneckerModule<PrimeField>, b0: &[BristlePoint<PrimeField>]) -> usize {
    let variety = bristle_variety(m).unwrap();
    let rows: Vec<Vec<u64>> =
        variety.points.iter().filter(|pt| b0.contains(&pt.bristle)).map(|pt| pt.vector.clone()).collect();
    let span = Subspace::from_basis_rows(m.field(), variety.reduced.dim1(), rows);
    m.dim1() - variety.reduced.dim1() + span.dim()
}

#[test]
fn tau_of_some_bristles_escapes_b0() {
    for (p, expected) in [(2, vec!["B(2,3)"]), (3, vec!["B(0:1:2)", "B(1:2:2)"])] {
        let f = gf(p);
        let b0 = canonical_set(&f, CanonicalSet::B0, 3).unwrap();
        let mut escaping = Vec::new();
        for b in enumerate_bristles(&f, 3).unwrap() {
            let tb = tau(&b.module());
            let trace = trace_submodule(&modules_of(&b0), &tb).unwrap();
            assert_eq!(trace.dims().d1, b0_trace_dim1_from_variety(&tb, &b0), "GF({p}) {}", b.label());
            if !trace.is_full() {
                assert_eq!(trace.dims(), DimensionVector::new(4, 2));
                escaping.push(b.label());
            }
            assert!(is_bristled(&tb).unwrap());
        }
        assert_eq!(escaping, expected, "GF({p})");
    }
}
