//! The Kronecker quiver with two arrows, where everything is explicit.

use itertools::Itertools;

use super::Ctx;
use crate::bristle::{is_bristled, is_saturated, BristlePoint};
use crate::families::{
    n2_bristle_generator, n2_preinjective, preinjective, projective_line, projective_param_coords, ProjectiveParam,
};
use crate::field::Field;
use crate::harness::report::Checks;
use crate::kron::{
    ext1_cocycles, ext1_dim, extension, find_isomorphism, trace_submodule, KroneckerModule, SubmodulePair,
};
use crate::linalg::Matrix;
use crate::Result;

fn bristles_on_line<F: Field>(c: &Ctx<F>) -> Result<Vec<BristlePoint<F>>> {
    let points = projective_line(&c.field).ok_or(crate::Error::RequiresFiniteField("the projective line"))?;
    points.iter().map(|p| BristlePoint::new(&c.field, projective_param_coords(&c.field, p))).collect()
}

/// The generators `m_c` of `I_t` have type `c`, and any `t + 1` of them are independent.
fn generator_checks<F: Field>(
    c: &Ctx<F>,
    checks: &mut Checks,
    it: &KroneckerModule<F>,
    points: &[ProjectiveParam<F::Elem>],
    bristles: &[BristlePoint<F>],
    t: usize,
) {
    let f = &c.field;
    let generators: Vec<Vec<F::Elem>> = points.iter().map(|p| n2_bristle_generator(f, t, p)).collect();
    let mut typed = true;
    for (g, b) in generators.iter().zip(bristles) {
        let images = it.arrow_images(g);
        let w = b.coords();
        // α_i(m_c) λ_j = α_j(m_c) λ_i for the bristle type λ.
        typed &= (0..2)
            .all(|i| (0..2).all(|j| images[i].iter().zip(&images[j]).all(|(x, y)| f.mul(x, &w[j]) == f.mul(y, &w[i]))))
            && images.iter().any(|v| v.iter().any(|x| !f.is_zero(x)));
    }
    checks.holds(format!("m_c in I{t} has bristle type c"), "m_c generates a bristle of type c inside I_t.", typed);
    if t < points.len() {
        let independent = generators.iter().combinations(t + 1).all(|rows| {
            Matrix::from_rows(f, t + 1, rows.into_iter().cloned().collect()).is_ok_and(|m| m.rank() == t + 1)
        });
        checks.holds(
            format!("any {} generators m_c of I{t} are independent", t + 1),
            "Vandermonde: m_c for t + 1 distinct points form a basis of the source space.",
            independent,
        );
    }
}

pub(super) fn generation<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let f = &c.field;
    let points = projective_line(f).ok_or(crate::Error::RequiresFiniteField("the projective line"))?;
    let bristles = bristles_on_line(c)?;
    let count = 1u64 << points.len();
    c.refuse_above_limit("n2-generation", count)?;
    for t in 0..=c.t_max {
        let it = n2_preinjective(f, t);
        checks.eq(
            format!("explicit I{t} matches tau-orbit I{t}"),
            "The explicit basis description of I_t agrees with the reflection-functor construction.",
            "verified-iso",
            find_isomorphism(&it, &preinjective(f, 2, t), c.iso)?.label(),
        );

        // S(1) = I0 has no bristle vectors.
        if t >= 1 {
            generator_checks(c, checks, &it, &points, &bristles, t);
        }

        let traces = bristles.iter().map(|b| trace_submodule(&[b.module()], &it)).collect::<Result<Vec<_>>>()?;
        let mut mismatches = 0u64;
        for mask in 0..count {
            let mut acc = SubmodulePair::zero(&it);
            let mut size = 0;
            for (k, tr) in traces.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    acc = acc.sum(tr)?;
                    size += 1;
                }
            }
            mismatches += u64::from(acc.is_full() != (size > t));
        }
        checks
            .eq(
                format!("subsets J violating the law for I{t}"),
                "A set J of bristles generates I_t if and only if |J| >= t + 1.",
                0,
                mismatches,
            )
            .with_detail(format!("{count} subsets"));
    }
    Ok(())
}

pub(super) fn classification<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let f = &c.field;
    let q = c.q()? as usize;
    for t in 0..=c.t_max {
        let it = n2_preinjective(f, t);
        checks.eq(
            format!("I{t} is bristled"),
            "A preinjective I_t is bristled if and only if t <= q.",
            t <= q,
            is_bristled(&it)?,
        );
        checks.holds(format!("I{t} is saturated"), "Preinjective modules are saturated.", is_saturated(&it)?);
    }
    let s2 = KroneckerModule::simple_sink(f, 2);
    checks.holds("S(2) is bristled", "S(2) is a quotient of every bristle.", is_bristled(&s2)?);
    checks.holds("S(2) is not saturated", "Ext^1(B, S(2)) is nonzero for every bristle B.", !is_saturated(&s2)?);

    let bristles = bristles_on_line(c)?;
    let mut all_bristled = true;
    let mut any_saturated = false;
    let mut self_ext = Vec::new();
    let mut uniserial_bristled = false;
    for b in &bristles {
        let m = b.module();
        all_bristled &= is_bristled(&m)?;
        any_saturated |= is_saturated(&m)?;
        self_ext.push(ext1_dim(&m, &m)?);
        let classes = ext1_cocycles(&m, &m)?;
        if let Some(class) = classes.first() {
            uniserial_bristled |= is_bristled(&extension(&m, &m, class)?)?;
        }
    }
    checks.holds("every bristle is bristled", "Bristles are bristled.", all_bristled);
    checks.holds(
        "no bristle is saturated",
        "Ext^1(B_c, B_c) is nonzero, so bristles are not saturated.",
        !any_saturated,
    );
    checks.eq(
        "dim Ext^1(B, B) over all bristles",
        "dim Ext^1(B, B) = n - 1 = 1.",
        super::single(1),
        super::value_set(self_ext),
    );
    checks.holds(
        "no self-extension of a bristle is bristled",
        "The only indecomposable regular bristled modules are the bristles.",
        !uniserial_bristled,
    );
    Ok(())
}
