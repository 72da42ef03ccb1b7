//! Generation and saturation of preinjective modules and of τ-orbits of bristles.

use itertools::Itertools;

use super::{binomial, dims_str, single, value_set, Ctx, Stream};
use crate::bristle::{
    canonical_set, enumerate_bristles, fan_unbristled, is_bristled, is_saturated, modules_of, zigzag_bristled,
    BristlePoint, CanonicalSet,
};
use crate::families::preinjective;
use crate::field::Field;
use crate::harness::report::Checks;
use crate::kron::{
    coxeter, coxeter_power, end_dim, ext1_cocycles, ext1_dim, extension, hom_dim, is_generated_by, tau, tau_power,
    trace_submodule, KroneckerModule, SubmodulePair,
};
use crate::linalg::Matrix;
use crate::Result;

/// Endomorphism rings are only computed when the linear system stays small.
const END_UNKNOWNS_LIMIT: usize = 1200;

fn small_enough_for_end<F: Field>(m: &KroneckerModule<F>) -> bool {
    m.dim1() * m.dim1() + m.dim2() * m.dim2() <= END_UNKNOWNS_LIMIT
}

fn preinjective_dims(n: usize, t: usize) -> (i64, i64) {
    let base = if t.is_multiple_of(2) { (1, 0) } else { (n as i64, 1) };
    coxeter_power(n, base, (t / 2) as i64)
}

fn b0_modules<F: Field>(c: &Ctx<F>) -> Result<Vec<KroneckerModule<F>>> {
    Ok(modules_of(&canonical_set(&c.field, CanonicalSet::B0, c.n)?))
}

fn all_bristles<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<Vec<BristlePoint<F>>> {
    let bristles = enumerate_bristles(&c.field, c.n)?;
    let q = c.q()?;
    checks.eq(
        "number of bristles",
        "Bristles up to isomorphism are the points of the projective space P^(n-1)(k).",
        (q.pow(c.n as u32) - 1) / (q - 1),
        bristles.len(),
    );
    Ok(bristles)
}

/// Whether the traces of the chosen generators sum to everything.
fn traces_cover<F: Field>(m: &KroneckerModule<F>, traces: &[&SubmodulePair<F>]) -> Result<bool> {
    let mut acc = SubmodulePair::zero(m);
    for t in traces {
        acc = acc.sum(t)?;
    }
    Ok(acc.is_full())
}

pub(super) fn preinjectives<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let bristles = all_bristles(c, checks)?;
    let b0 = b0_modules(c)?;
    checks.eq("size of B0", "B0 consists of n + 2 bristles.", n + 2, b0.len());
    for t in 0..=c.t_max {
        let it = preinjective(f, n, t);
        checks.eq(
            format!("dim I{t}"),
            "The dimension vectors of preinjective modules follow the Coxeter transformation.",
            dims_str(preinjective_dims(n, t)),
            it.dims(),
        );
        checks.holds(
            format!("I{t} is generated by B0"),
            "Every preinjective module is generated by B0.",
            is_generated_by(&b0, &it)?,
        );
        checks.holds(
            format!("I{t} is saturated"),
            "Every preinjective module M satisfies Ext^1(B, M) = 0 for all bristles B.",
            is_saturated(&it)?,
        );
        if small_enough_for_end(&it) {
            checks.eq(format!("dim End(I{t})"), "Preinjective modules are bricks.", 1, end_dim(&it)?);
        }
    }
    let hom_claims = [
        (2, n - 1, "dim Hom(B, I2) = n - 1 for every bristle B."),
        (3, n * n - n - 1, "dim Hom(B, I3) = n^2 - n - 1 for every bristle B."),
    ];
    for (t, expected, claim) in hom_claims {
        if t > c.t_max {
            continue;
        }
        let it = preinjective(f, n, t);
        let dims = bristles.iter().map(|b| hom_dim(&b.module(), &it)).collect::<Result<Vec<_>>>()?;
        checks.eq(format!("dim Hom(B, I{t}) over all bristles"), claim, single(expected), value_set(dims));
    }
    Ok(())
}

/// Smallest `t0 ≤ t_max` such that `τ^t M` is generated by `B0` and
/// saturated for every `t0 ≤ t ≤ t_max`.
fn threshold<F: Field>(
    m: &KroneckerModule<F>,
    b0: &[KroneckerModule<F>],
    t_max: usize,
) -> Result<(Option<usize>, Vec<bool>)> {
    let mut good = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        let mt = tau_power(m, t as i64);
        good.push(is_generated_by(b0, &mt)? && is_saturated(&mt)?);
    }
    let t0 = (0..=t_max).find(|&t0| good[t0..].iter().all(|&g| g));
    Ok((t0, good))
}

pub(super) fn bristle_orbits<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let bristles = all_bristles(c, checks)?;
    let b0 = b0_modules(c)?;
    let phi = coxeter(n, (1, 1));

    let mut tau_dims = Vec::new();
    let mut ext_b_tau_b = Vec::new();
    let all = modules_of(&bristles);
    let mut not_from_b0 = Vec::new();
    let (mut tau_bristled, mut tau_saturated, mut tau2_generated, mut tau2_saturated) = (true, 0, true, true);
    let mut orbits = Vec::with_capacity(bristles.len());
    for b in &bristles {
        let bm = b.module();
        let tb = tau(&bm);
        let t2b = tau(&tb);
        tau_dims.push(tb.dims().to_string());
        ext_b_tau_b.push(ext1_dim(&bm, &tb)?);
        tau_bristled &= is_generated_by(&all, &tb)?;
        if !is_generated_by(&b0, &tb)? {
            not_from_b0.push(b.label());
        }
        tau_saturated += usize::from(is_saturated(&tb)?);
        tau2_generated &= is_generated_by(&b0, &t2b)?;
        tau2_saturated &= is_saturated(&t2b)?;
        orbits.push([tb, t2b]);
    }
    checks.eq(
        "dim tau B over all bristles",
        "The dimension vector of tau B is the Coxeter image of (1,1).",
        single(dims_str(phi)),
        value_set(tau_dims),
    );
    checks.holds("tau B is generated by bristles for every bristle B", "tau B is generated by bristles.", tau_bristled);
    let check = checks.eq(
        "bristles B with tau B not generated by B0",
        "tau^t B is generated by B0 for t >= 1.",
        0,
        not_from_b0.len(),
    );
    if !not_from_b0.is_empty() {
        check.with_detail(not_from_b0.join(" "));
    }
    checks.eq(
        "dim Ext^1(B, tau B) over all bristles",
        "Ext^1(B, tau B) is dual to End(B), which is one-dimensional.",
        single(1),
        value_set(ext_b_tau_b),
    );
    checks.eq("saturated modules among the tau B", "tau B is not saturated.", 0, tau_saturated);
    checks.holds(
        "tau^2 B is generated by B0 for every bristle B",
        "tau^t B is generated by B0 for t >= 1.",
        tau2_generated,
    );
    checks.holds("tau^2 B is saturated for every bristle B", "tau^t B is saturated for all t >= 2.", tau2_saturated);

    let b1 = BristlePoint::single(f, n, 1)?.module();
    for t in 0..=c.t_max {
        let m = tau_power(&b1, t as i64);
        checks.eq(
            format!("dim tau^{t} B(1)"),
            "The dimension vector of tau^t B is Phi^t(1,1).",
            dims_str(coxeter_power(n, (1, 1), t as i64)),
            m.dims(),
        );
        if t >= 1 {
            checks.holds(
                format!("tau^{t} B(1) is generated by B0"),
                "tau^t B is generated by B0 for t >= 1.",
                is_generated_by(&b0, &m)?,
            );
        }
        if t >= 2 {
            checks.holds(
                format!("tau^{t} B(1) is saturated"),
                "tau^t B is saturated for all t >= 2.",
                is_saturated(&m)?,
            );
        }
    }

    for t in 1..=2 {
        let mut max = 0;
        for orbit in &orbits {
            for b in &bristles {
                max = max.max(hom_dim(&orbit[t - 1], &b.module())?);
            }
        }
        checks.eq(
            format!("max dim Hom(tau^{t} B, B') over all pairs"),
            "A tau-orbit contains at most one bristle, so Hom(tau^t B, B') = 0 for t = 1, 2.",
            0,
            max,
        );
    }

    if let Some(m) = &c.module {
        let (t0, good) = threshold(m, &b0, c.t_max)?;
        let pattern: String = good.iter().map(|&g| if g { '+' } else { '-' }).collect();
        let detail = match t0 {
            Some(t0) => format!("threshold t = {t0}; per t: {pattern}"),
            None => format!("per t: {pattern}"),
        };
        checks
            .holds(
                "tau^t M is generated by B0 and saturated from some t <= t_max on",
                "For every module M there is t(M) with tau^t M generated by B0 and saturated for all t >= t(M).",
                t0.is_some(),
            )
            .with_detail(detail);
    }
    Ok(())
}

pub(super) fn optimality_i3<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let bristles = all_bristles(c, checks)?;
    let size = n + 1;
    let count = binomial(bristles.len() as u64, size as u64);
    c.refuse_above_limit("optimality-I3", count)?;
    let b0 = b0_modules(c)?;
    for t in 3..=c.t_max.max(3) {
        let it = preinjective(f, n, t);
        checks.holds(
            format!("B0 generates I{t}"),
            "B0 generates every preinjective module.",
            is_generated_by(&b0, &it)?,
        );
        let traces = bristles.iter().map(|b| trace_submodule(&[b.module()], &it)).collect::<Result<Vec<_>>>()?;
        let mut examined = 0u64;
        let mut generating = 0u64;
        for subset in traces.iter().combinations(size) {
            examined += 1;
            generating += u64::from(traces_cover(&it, &subset)?);
        }
        checks.eq(format!("{size}-subsets examined for I{t}"), "All subsets are examined.", count, examined);
        checks.eq(
            format!("{size}-subsets generating I{t}"),
            "No set of n + 1 bristles generates I_t for t >= 3.",
            0,
            generating,
        );
        if t == 3 {
            // Counting argument: each bristle contributes at most dim Hom(B, I3)
            // dimensions at the source vertex.
            let homs = bristles.iter().map(|b| hom_dim(&b.module(), &it)).collect::<Result<Vec<_>>>()?;
            let max = homs.iter().copied().max().unwrap_or(0);
            checks
                .holds(
                    "(n+1) max dim Hom(B, I3) < dim (I3)_1",
                    "n + 1 bristles are too few to reach the source space of I3.",
                    size * max < it.dim1(),
                )
                .with_detail(format!("{size} x {max} vs {}", it.dim1()));
        }
    }
    Ok(())
}

pub(super) fn optimality_tau_b1<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let bristles = all_bristles(c, checks)?;
    let b1_point = BristlePoint::single(f, n, 1)?;
    let b1 = b1_point.module();
    let tb1 = tau(&b1);
    checks.eq("dim tau B(1)", "tau B(1) has dimension vector Phi(1,1).", dims_str(coxeter(n, (1, 1))), tb1.dims());
    let b1_prime = modules_of(&canonical_set(f, CanonicalSet::B1Prime, n)?);
    checks.holds(
        "B1' generates tau B(1)",
        "B1' = {B(1), B(i,i+1)} generates tau B(1).",
        is_generated_by(&b1_prime, &tb1)?,
    );
    checks.eq("dim Hom(B(1), tau B(1))", "dim Hom(B(1), tau B(1)) = n - 1.", n - 1, hom_dim(&b1, &tb1)?);
    let others: Vec<&BristlePoint<F>> = bristles.iter().filter(|b| **b != b1_point).collect();
    let homs = others.iter().map(|b| hom_dim(&b.module(), &tb1)).collect::<Result<Vec<_>>>()?;
    checks.eq(
        "dim Hom(B, tau B(1)) for B not B(1)",
        "dim Hom(B, tau B(1)) = n - 2 for every bristle B other than B(1).",
        single(n - 2),
        value_set(homs),
    );
    let size = n + 1;
    let count = binomial(others.len() as u64, size as u64);
    c.refuse_above_limit("opt-taub1", count)?;
    let traces = others.iter().map(|b| trace_submodule(&[b.module()], &tb1)).collect::<Result<Vec<_>>>()?;
    let (mut examined, mut generating) = (0u64, 0u64);
    for subset in traces.iter().combinations(size) {
        examined += 1;
        generating += u64::from(traces_cover(&tb1, &subset)?);
    }
    checks.eq(format!("{size}-subsets without B(1) examined"), "All subsets are examined.", count, examined);
    checks.eq(
        format!("{size}-subsets without B(1) generating tau B(1)"),
        "B(1) has to belong to any set of n + 1 bristles generating tau B(1).",
        0,
        generating,
    );
    Ok(())
}

pub(super) fn indecomposable_generator<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let b0 = b0_modules(c)?;
    let sum = KroneckerModule::direct_sum_all(f, n, &b0)?;
    let b1 = BristlePoint::single(f, n, 1)?.module();
    let classes = ext1_cocycles(&sum, &b1)?;
    checks.eq(
        "dim Ext^1(sum of B0, B(1))",
        "Ext^1(B, B') has dimension n - 2 for non-isomorphic bristles.",
        (n + 2) * (n - 2),
        classes.len(),
    );
    let mut rng = c.rng(Stream::Cocycles);
    let mut found = None;
    let mut tried = 0;
    // The sum of all basis classes first: each basis class lives in a single
    // summand, so the sum is nonzero on every summand. Then random classes.
    for attempt in 0..=c.iso.attempts {
        let coeffs: Vec<F::Elem> = if attempt == 0 {
            vec![f.one(); classes.len()]
        } else {
            (0..classes.len()).map(|_| f.sample(&mut rng)).collect()
        };
        tried += 1;
        let cocycle: Vec<Matrix<F>> = (0..n)
            .map(|i| {
                let mut acc = Matrix::zeros(f, b1.dim2(), sum.dim1());
                for (k, class) in classes.iter().enumerate() {
                    acc = &acc + &class[i].scaled(&coeffs[k]);
                }
                acc
            })
            .collect();
        let e = extension(&sum, &b1, &cocycle)?;
        if end_dim(&e)? == 1 {
            found = Some(e);
            break;
        }
    }
    let status = if found.is_some() { "found" } else { "not found (no disproof)" };
    checks
        .eq(
            "indecomposable extension of sum of B0 by B(1)",
            "Some extension 0 -> B(1) -> X -> sum of B0 -> 0 has End(X) = k.",
            "found",
            status,
        )
        .with_detail(format!("{tried} extension classes tried"));
    if let Some(e) = found {
        checks.eq(
            "dim of the extension",
            "The extension has dimension vector (n+3, n+3).",
            dims_str(((n + 3) as i64, (n + 3) as i64)),
            e.dims(),
        );
        let gens = [e];
        for t in 0..=c.t_max {
            checks.holds(
                format!("the extension generates I{t}"),
                "There are indecomposable regular modules which generate all preinjective modules.",
                is_generated_by(&gens, &preinjective(f, n, t))?,
            );
        }
    }
    Ok(())
}

pub(super) fn bristled_layers<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let mut fixtures: Vec<(String, KroneckerModule<F>)> = Vec::new();
    let b1 = BristlePoint::single(f, n, 1)?;
    for b in std::iter::once(b1.clone()).chain(canonical_set(f, CanonicalSet::B0, n)?) {
        fixtures.push((b.label(), b.module()));
    }
    for t in 1..=3 {
        fixtures.push((format!("I{t}"), preinjective(f, n, t)));
    }
    fixtures.push(("tau B(1)".into(), tau(&b1.module())));
    if n == 3 {
        fixtures.push(("zigzag (3,2)".into(), zigzag_bristled(f)));
    }
    fixtures.retain(|(_, m)| small_enough_for_end(m));
    for (name, m) in &fixtures {
        checks.holds(format!("{name} is bristled"), "The fixture is generated by bristles.", is_bristled(m)?);
        checks.eq(format!("dim End({name})"), "The fixture is indecomposable (a brick).", 1, end_dim(m)?);
        let layers = m.layers();
        checks
            .holds(
                format!("|top {name}| >= |soc {name}|"),
                "An indecomposable bristled module has a top at least as long as its socle.",
                layers.top_dims.total() >= layers.socle_dims.total(),
            )
            .with_detail(format!("top {}, socle {}", layers.top_dims, layers.socle_dims));
        checks.holds(
            format!("socle of {name} is homogeneous"),
            "The socle of an indecomposable bristled module is homogeneous.",
            layers.socle_is_homogeneous(),
        );
    }
    if n == 3 {
        checks.holds(
            "fan (3,2) is not bristled",
            "The faithful (3,2) module whose first arrow hits both sink vectors is not bristled.",
            !is_bristled(&fan_unbristled(f))?,
        );
    }
    Ok(())
}
