//! Universal-cover constructions and their push-downs.

use super::{dims_str, single, value_set, Ctx};
use crate::bristle::{canonical_set, enumerate_bristles, is_bristled, BristlePoint, CanonicalSet};
use crate::cover::named::y;
use crate::cover::{
    build_ball_rep, build_mu_bristle_rep, build_tau_bristle_rep, cover_hom_dim, cover_max_bristled,
    verify_cover_equalities, CoverRep, CoverReport, CoverSub, NamedCover, TreeVertex,
};
use crate::families::preinjective;
use crate::field::Field;
use crate::harness::report::Checks;
use crate::kron::{
    coxeter, ext1_cocycles, ext1_dim, ext1_dim_via_resolution, extension, find_isomorphism, hom_dim, tau,
};
use crate::Result;

fn record_equalities<F: Field>(report: &CoverReport<F>, checks: &mut Checks) {
    for check in &report.checks {
        checks
            .holds(
                check.name.clone(),
                "The push-down is generated by explicitly located bristle submodules.",
                check.pass,
            )
            .with_detail(check.detail.clone());
    }
}

pub(super) fn ball_equalities<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let x = build_ball_rep(f, n)?;
    let pd = x.rep().push_down().module;
    checks.eq("dim pi(X)", "pi(X) has the dimension vector of I2.", dims_str(coxeter(n, (1, 0))), pd.dims());
    checks.eq(
        "pi(X) is isomorphic to I2",
        "The ball representation pushes down to I2.",
        "verified-iso",
        find_isomorphism(&pd, &preinjective(f, n, 2), c.iso)?.label(),
    );
    let report = verify_cover_equalities(&x)?;
    record_equalities(&report, checks);

    let mut counts = report.counts_by_type();
    checks.eq(
        "bristles used for I2",
        "The total number of bristles used for generating I2 is (n+1)(n-1).",
        (n + 1) * (n - 1),
        report.bristles.len(),
    );
    let excluded = BristlePoint::pair(f, n, n - 1, n)?.label();
    checks.eq(
        format!("{excluded} is not used"),
        "Only bristles from B0' are used.",
        0,
        counts.remove(&excluded).unwrap_or(0),
    );
    let expected_types: Vec<String> = canonical_set(f, CanonicalSet::B0Prime, n)?.iter().map(|b| b.label()).collect();
    checks.eq(
        "bristle types used",
        "The bristles used are exactly the types in B0'.",
        value_set(expected_types),
        value_set(counts.keys().cloned()),
    );
    checks.eq(
        "bristles used per type",
        "Each type in B0' is used n - 1 times.",
        single(n - 1),
        value_set(counts.values()),
    );
    Ok(())
}

pub(super) fn tau_bristle_cover<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let x = build_tau_bristle_rep(f, n)?;
    let pd = x.rep().push_down().module;
    let b1 = BristlePoint::single(f, n, 1)?.module();
    checks.eq("dim pi(X')", "pi(X') has dimension vector Phi(1,1).", dims_str(coxeter(n, (1, 1))), pd.dims());
    checks.eq(
        "pi(X') is isomorphic to tau B(1)",
        "The restricted ball representation pushes down to tau B(1).",
        "verified-iso",
        find_isomorphism(&pd, &tau(&b1), c.iso)?.label(),
    );
    let report = verify_cover_equalities(&x)?;
    record_equalities(&report, checks);
    checks.eq(
        "bristles used for tau B(1)",
        "n^2 - n - 1 bristles generate tau B(1).",
        n * n - n - 1,
        report.bristles.len(),
    );
    let mut counts = report.counts_by_type();
    let last_pair = BristlePoint::pair(f, n, n - 1, n)?.label();
    checks.eq(format!("{last_pair} used"), "B(n-1,n) is used once.", 1, counts.remove(&last_pair).unwrap_or(0));
    checks.eq("other bristle types used", "n + 1 further types occur.", n + 1, counts.len());
    checks.eq(
        "bristles used per other type",
        "Each further type is used n - 2 times.",
        single(n - 2),
        value_set(counts.values()),
    );

    let ball = x.push_down_ball();
    let leaf_sub = x.leaf_projective(2, 1)?.push_down(&ball.index);
    let (leaf_module, _) = leaf_sub.to_module(&ball.module)?;
    checks.eq(
        "pi(P(x(2,1))) is isomorphic to B(1)",
        "tau B(1) contains a submodule isomorphic to B(1).",
        "verified-iso",
        find_isomorphism(&leaf_module, &b1, c.iso)?.label(),
    );
    checks.eq("dim Hom(B(1), pi(X'))", "dim Hom(B(1), tau B(1)) = n - 1.", n - 1, hom_dim(&b1, &pd)?);
    Ok(())
}

pub(super) fn mu_extension<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let mu_cover: NamedCover<F> = build_mu_bristle_rep(f, n)?;
    let tau_cover = build_tau_bristle_rep(f, n)?;
    let mu = mu_cover.rep().push_down().module;
    let b1 = BristlePoint::single(f, n, 1)?.module();
    let tb1 = tau(&b1);
    let (a, b) = coxeter(n, (1, 1));
    checks.eq("dim pi(X'')", "pi(X'') has dimension vector Phi(1,1) + (1,1).", dims_str((a + 1, b + 1)), mu.dims());

    checks.holds(
        "X' is a subrepresentation of X''",
        "pi(X') = tau B(1) is a submodule of pi(X'').",
        tau_cover.support.is_subrep_of(&mu_cover.support),
    );
    let ball = mu_cover.push_down_ball();
    let (quotient, projection) = ball.module.quotient(&tau_cover.support.push_down(&ball.index))?;
    let (mu_mod_tau, _) = mu_cover.support.push_down(&ball.index).image_under(&projection).to_module(&quotient)?;
    checks.eq(
        "pi(X'')/pi(X') is isomorphic to B(1)",
        "pi(X'') is an extension of B(1) by tau B(1).",
        "verified-iso",
        find_isomorphism(&mu_mod_tau, &b1, c.iso)?.label(),
    );
    let classes = ext1_cocycles(&b1, &tb1)?;
    checks.eq("dim Ext^1(B(1), tau B(1))", "The almost split sequence ending in B(1) is unique.", 1, classes.len());
    let middle = extension(&b1, &tb1, &classes[0])?;
    checks.eq(
        "pi(X'') is the almost split middle term",
        "pi(X'') is isomorphic to the middle term of the non-split extension of B(1) by tau B(1).",
        "verified-iso",
        find_isomorphism(&mu, &middle, c.iso)?.label(),
    );

    checks.eq("dim Ext^1(B(1), mu B(1))", "dim Ext^1(B, mu B) = n - 1.", n - 1, ext1_dim(&b1, &mu)?);
    checks.eq(
        "dim Ext^1(B(1), mu B(1)) via the presentation",
        "dim Ext^1(B, mu B) = n - 1.",
        n - 1,
        ext1_dim_via_resolution(&b1, &mu)?,
    );
    checks.holds("mu B(1) is not bristled", "mu B cannot be bristled.", !is_bristled(&mu)?);

    let bristles = enumerate_bristles(f, n)?;
    let self_ext = bristles.iter().map(|b| {
        let m = b.module();
        ext1_dim(&m, &m)
    });
    checks.eq(
        "dim Ext^1(B, B) over all bristles",
        "dim Ext^1(B, B) = n - 1 for every bristle B.",
        single(n - 1),
        value_set(self_ext.collect::<Result<Vec<_>>>()?),
    );
    Ok(())
}

pub(super) fn not_bristled<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let z = TreeVertex::root();
    let covers = [("X", build_ball_rep(f, n)?), ("X'", build_tau_bristle_rep(f, n)?)];
    for (name, cover) in &covers {
        let rep = cover.rep();
        let mut max = 0;
        for i in 1..=n {
            max = max.max(cover_hom_dim(&CoverRep::thin_arrow(f, n, &z, i)?, &rep)?);
        }
        checks.eq(
            format!("max dim Hom(B_i, {name}) over the bristles at z"),
            "No cover bristle starting at the centre maps to the representation.",
            0,
            max,
        );
        let trace = cover_max_bristled(&rep)?;
        checks.holds(
            format!("maximal bristled subrepresentation of {name} is proper"),
            "Cover representations of preinjective modules are not bristled.",
            trace != CoverSub::full(&rep),
        );
        checks.holds(
            format!("maximal bristled subrepresentation of {name} vanishes at z"),
            "The top of the maximal bristled subrepresentation has no composition factor S(z).",
            trace.space(&z).is_none_or(|s| s.is_zero()),
        );
        checks.holds(
            format!("pi({name}) is bristled"),
            "The push-down is bristled although the cover representation is not.",
            is_bristled(&rep.push_down().module)?,
        );
    }
    let mut stars = true;
    for j in 1..=n {
        let star = CoverRep::sink_star(f, n, &y(j))?;
        stars &= cover_max_bristled(&star)? == CoverSub::full(&star);
    }
    checks.holds(
        "injective vertex stars are bristled",
        "Indecomposable injective cover representations are bristled.",
        stars,
    );
    Ok(())
}
