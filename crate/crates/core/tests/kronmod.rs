use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kronbrist::bristle::{enumerate_bristles, is_bristled, maximal_bristled_submodule, modules_of, BristlePoint};
use kronbrist::families::{preinjective, preprojective};
use kronbrist::field::{PrimeField, Rationals};
use kronbrist::kron::{
    coxeter, coxeter_inverse, end_dim, euler_form, ext1_cocycles, ext1_dim, ext1_dim_via_resolution, extension,
    find_isomorphism, hom_basis, hom_dim, tau, tau_inverse, tau_power, trace_submodule, DimensionVector, IsoSearch,
    KroneckerModule,
};
use kronbrist::linalg::Matrix;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// `(p, n, d1, d2, seed)` for a seeded random module.
fn module_params(max_n: usize, max_dim: usize) -> impl Strategy<Value = (u64, usize, usize, usize, u64)> {
    (prop::sample::select(vec![2u64, 3, 5]), 1..=max_n, 0..=max_dim, 0..=max_dim, any::<u64>())
}

fn random_module(p: u64, n: usize, d1: usize, d2: usize, seed: u64) -> KroneckerModule<PrimeField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    KroneckerModule::random(&gf(p), n, DimensionVector::new(d1, d2), &mut rng)
}

fn pair(
    (p, n, a1, a2, s): (u64, usize, usize, usize, u64),
    (b1, b2, t): (usize, usize, u64),
) -> (KroneckerModule<PrimeField>, KroneckerModule<PrimeField>) {
    (random_module(p, n, a1, a2, s), random_module(p, n, b1, b2, t))
}

fn iso(a: &KroneckerModule<PrimeField>, b: &KroneckerModule<PrimeField>) -> bool {
    find_isomorphism(a, b, IsoSearch { attempts: 256, seed: 7 }).unwrap().is_isomorphic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ext_routes_agree_and_match_the_euler_form(m in module_params(4, 4), other in (0usize..=4, 0usize..=4, any::<u64>())) {
        let (a, b) = pair(m, other);
        let ext = ext1_dim(&a, &b).unwrap();
        prop_assert_eq!(ext, ext1_dim_via_resolution(&a, &b).unwrap());
        let euler = euler_form(a.n(), a.dims().as_i64(), b.dims().as_i64());
        prop_assert_eq!(hom_dim(&a, &b).unwrap() as i64 - ext as i64, euler);
        prop_assert_eq!(ext1_cocycles(&a, &b).unwrap().len(), ext);
    }

    #[test]
    fn hom_basis_consists_of_independent_homomorphisms(m in module_params(3, 4), other in (0usize..=4, 0usize..=4, any::<u64>())) {
        let (a, b) = pair(m, other);
        let basis = hom_basis(&a, &b).unwrap();
        for h in &basis {
            prop_assert!(h.is_homomorphism(&a, &b));
        }
        let f = *a.field();
        let flat: Vec<Vec<u64>> = basis
            .iter()
            .map(|h| h.f1.row_vecs().into_iter().chain(h.f2.row_vecs()).flatten().collect())
            .collect();
        let width = a.dim1() * b.dim1() + a.dim2() * b.dim2();
        prop_assert_eq!(Matrix::from_rows(&f, width, flat).unwrap().rank(), basis.len());
    }

    #[test]
    fn hom_into_injectives_and_from_projectives(m in module_params(4, 5)) {
        let (p, n, d1, d2, s) = m;
        let a = random_module(p, n, d1, d2, s);
        let f = gf(p);
        prop_assert_eq!(hom_dim(&KroneckerModule::projective_source(&f, n), &a).unwrap(), d1);
        prop_assert_eq!(hom_dim(&KroneckerModule::simple_sink(&f, n), &a).unwrap(), d2);
        prop_assert_eq!(hom_dim(&a, &KroneckerModule::injective_sink(&f, n)).unwrap(), d2);
        prop_assert_eq!(hom_dim(&a, &KroneckerModule::simple_source(&f, n)).unwrap(), d1);
        prop_assert_eq!(hom_dim(&KroneckerModule::simple_source(&f, n), &a).unwrap(), a.layers().socle_dims.d1);
    }

    #[test]
    fn auslander_reiten_formula(m in module_params(3, 4), other in (0usize..=4, 0usize..=4, any::<u64>())) {
        // Hereditary: Ext^1(M, N) ≅ D Hom(N, τM) for all M, N.
        let (a, b) = pair(m, other);
        prop_assert_eq!(ext1_dim(&a, &b).unwrap(), hom_dim(&b, &tau(&a)).unwrap());
        prop_assert_eq!(ext1_dim(&a, &b).unwrap(), hom_dim(&tau_inverse(&b), &a).unwrap());
    }

    #[test]
    fn translate_round_trip(m in module_params(3, 4)) {
        let (p, n, d1, d2, s) = m;
        prop_assume!(p >= 3);
        let a = random_module(p, n, d1, d2, s);
        let t = tau(&a);
        // τ⁻τM drops only projective summands, and τ(τ⁻τM) ≅ τM.
        let back = tau_inverse(&t);
        prop_assert!(back.dim1() <= a.dim1() && back.dim2() <= a.dim2());
        prop_assert!(iso(&tau(&back), &t));
        // dim τM = Φ(dim M) exactly when M has no projective summand.
        let (c1, c2) = coxeter(n, a.dims().as_i64());
        if (t.dim1() as i64, t.dim2() as i64) == (c1, c2) {
            prop_assert!(iso(&back, &a));
        } else {
            prop_assert!(back.dims() != a.dims());
        }
    }

    #[test]
    fn coxeter_dimension_shadow(m in module_params(4, 4)) {
        let (p, n, d1, d2, s) = m;
        let a = random_module(p, n, d1, d2, s);
        let t = tau(&a);
        // Without projective summands, dim τM = Φ(dim M); otherwise it is smaller.
        let (c1, c2) = coxeter(n, a.dims().as_i64());
        prop_assert!(t.dim1() as i64 >= c1 && t.dim2() as i64 >= c2);
        prop_assert_eq!(coxeter_inverse(n, coxeter(n, (d1 as i64, d2 as i64))), (d1 as i64, d2 as i64));
        let x = (d1 as i64, d2 as i64);
        let y = (d2 as i64, d1 as i64 + 1);
        prop_assert_eq!(euler_form(n, coxeter(n, x), coxeter(n, y)), euler_form(n, x, y));
    }

    #[test]
    fn duality_is_an_involution(m in module_params(4, 4), other in (0usize..=4, 0usize..=4, any::<u64>())) {
        let (a, b) = pair(m, other);
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(hom_dim(&a, &b).unwrap(), hom_dim(&b.dual(), &a.dual()).unwrap());
        prop_assert_eq!(ext1_dim(&a, &b).unwrap(), ext1_dim(&b.dual(), &a.dual()).unwrap());
    }

    #[test]
    fn hom_is_additive(m in module_params(3, 3), other in (0usize..=3, 0usize..=3, any::<u64>()), third in any::<u64>()) {
        let (a, b) = pair(m, other);
        let c = random_module(m.0, m.1, 2, 1, third);
        let sum = a.direct_sum(&c).unwrap();
        prop_assert_eq!(hom_dim(&sum, &b).unwrap(), hom_dim(&a, &b).unwrap() + hom_dim(&c, &b).unwrap());
        prop_assert_eq!(ext1_dim(&b, &sum).unwrap(), ext1_dim(&b, &a).unwrap() + ext1_dim(&b, &c).unwrap());
    }

    #[test]
    fn traces_are_monotone(m in module_params(3, 5), k in 1usize..6) {
        let (p, n, d1, d2, s) = m;
        let a = random_module(p, n, d1, d2, s);
        let bristles = modules_of(&enumerate_bristles(&gf(p), n).unwrap());
        let k = k.min(bristles.len());
        let small = trace_submodule(&bristles[..k - 1], &a).unwrap();
        let large = trace_submodule(&bristles[..k], &a).unwrap();
        prop_assert!(small.is_submodule_of(&large));
        prop_assert!(large.is_closed_in(&a));
        let bristled = maximal_bristled_submodule(&a).unwrap();
        prop_assert!(large.is_submodule_of(&bristled));
        prop_assert_eq!(is_bristled(&a).unwrap(), bristled.is_full());
    }

    #[test]
    fn extension_middle_terms(m in module_params(3, 3), other in (0usize..=3, 0usize..=3, any::<u64>())) {
        let (a, b) = pair(m, other);
        for class in ext1_cocycles(&a, &b).unwrap().iter().take(2) {
            let e = extension(&a, &b, class).unwrap();
            prop_assert_eq!(e.dims(), DimensionVector::new(a.dim1() + b.dim1(), a.dim2() + b.dim2()));
            // A nonsplit extension loses the projection onto its sub.
            prop_assert!(hom_dim(&e, &b).unwrap() < hom_dim(&a.direct_sum(&b).unwrap(), &b).unwrap());
        }
    }

    #[test]
    fn annihilated_last_arrow_forces_extensions(m in module_params(4, 5)) {
        let (p, n, d1, d2, s) = m;
        prop_assume!(n >= 2);
        let a = random_module(p, n, d1, d2, s);
        let f = gf(p);
        let mut alphas = a.alphas().to_vec();
        alphas[n - 1] = Matrix::zeros(&f, d2, d1);
        let z = KroneckerModule::new(&f, n, d1, d2, alphas).unwrap();
        let b1 = BristlePoint::single(&f, n, 1).unwrap().module();
        prop_assert!(ext1_dim(&b1, &z).unwrap() >= d2);
    }
}

#[test]
fn rational_ext_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..40 {
        let n = 2 + k % 3;
        let a = KroneckerModule::random(&Rationals, n, DimensionVector::new(k % 4, (k / 4) % 3), &mut rng);
        let b = KroneckerModule::random(&Rationals, n, DimensionVector::new((k + 1) % 3, k % 3), &mut rng);
        let ext = ext1_dim(&a, &b).unwrap();
        assert_eq!(ext, ext1_dim_via_resolution(&a, &b).unwrap());
        assert_eq!(hom_dim(&a, &b).unwrap() as i64 - ext as i64, euler_form(n, a.dims().as_i64(), b.dims().as_i64()));
    }
}

#[test]
fn preprojectives_are_inverse_translates_of_projectives() {
    let f = gf(5);
    for n in [2, 3] {
        let s2 = KroneckerModule::simple_sink(&f, n);
        let p1 = KroneckerModule::projective_source(&f, n);
        for t in 0..5 {
            let base = if t % 2 == 0 { &s2 } else { &p1 };
            let expected = tau_power(base, -((t / 2) as i64));
            assert!(iso(&preprojective(&f, n, t), &expected), "n={n} P{t}");
            assert_eq!(end_dim(&preinjective(&f, n, t)).unwrap(), 1, "n={n} I{t} is a brick");
        }
    }
}

#[test]
fn preinjective_dimensions_follow_the_recursion() {
    let f = gf(3);
    for n in [2, 3, 4] {
        // dim I_{t+1} = n dim I_t - dim I_{t-1}, read off at the sink.
        let d2: Vec<i64> = (0..6).map(|t| preinjective(&f, n, t).dim2() as i64).collect();
        assert_eq!(&d2[..2], &[0, 1]);
        for t in 1..5 {
            assert_eq!(d2[t + 1], n as i64 * d2[t] - d2[t - 1], "n={n} t={t}");
        }
    }
}

#[test]
fn bristles_are_pairwise_orthogonal_bricks() {
    for (p, n) in [(2, 3), (3, 3), (5, 2), (2, 4)] {
        let bristles = modules_of(&enumerate_bristles(&gf(p), n).unwrap());
        for (i, a) in bristles.iter().enumerate() {
            for (j, b) in bristles.iter().enumerate() {
                assert_eq!(hom_dim(a, b).unwrap(), usize::from(i == j), "GF({p}) n={n}");
            }
            assert_eq!(ext1_dim(a, a).unwrap(), n - 1);
        }
    }
}
