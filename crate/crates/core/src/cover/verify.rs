//! Generation of `π(X)` and `π(X')` by explicitly located bristle submodules.

use std::collections::BTreeMap;

use crate::bristle::BristlePoint;
use crate::cover::named::succ;
use crate::cover::{CoverConstruction, CoverSub, NamedCover, PushDown, TreeVertex};
use crate::field::Field;
use crate::kron::{find_isomorphism, hom_basis, IsoSearch, SubmodulePair};
use crate::linalg::Subspace;
use crate::{Error, Result};

/// The trace of `B(λ)` inside the push-down of a subrepresentation, as a
/// submodule of the full push-down, together with `dim Hom(B(λ), π(sub))`.
pub fn bristle_in<F: Field>(
    pd: &PushDown<F>,
    sub: &CoverSub<F>,
    point: &BristlePoint<F>,
) -> Result<(SubmodulePair<F>, usize)> {
    let (inner, inclusion) = sub.push_down(&pd.index).to_module(&pd.module)?;
    let basis = hom_basis(&point.module(), &inner)?;
    let mut image = SubmodulePair::zero(&inner);
    for h in &basis {
        image = image.sum(&h.image())?;
    }
    Ok((image.image_under(&inclusion), basis.len()))
}

/// A bristle submodule `M(i,j) ⊂ π(W(i,j))` and a generator `u` of it.
#[derive(Clone, Debug)]
pub struct Mij<F: Field> {
    pub sub: SubmodulePair<F>,
    pub generator: Vec<F::Elem>,
}

/// The unique bristle submodule of type `B(i,j)` in `π(W(i,j))`.
pub fn extract_mij<F: Field>(cover: &NamedCover<F>, i: usize, j: usize) -> Result<Mij<F>> {
    let pd = cover.push_down_ball();
    let w = cover.w_component(i, j)?;
    let point = BristlePoint::pair(cover.field(), cover.n, i, j)?;
    let (sub, hom) = bristle_in(&pd, &w, &point)?;
    if hom != 1 || sub.dims().d1 != 1 {
        return Err(Error::Internal(format!(
            "expected a single bristle B({i},{j}) in π(W({i},{j})), found Hom of dimension {hom}"
        )));
    }
    let generator = sub.vertex1.basis_vectors().remove(0);
    Ok(Mij { sub, generator })
}

/// One verified statement about a cover construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A bristle submodule of the push-down used in the generation argument.
#[derive(Clone, Debug)]
pub struct LocatedBristle<F: Field> {
    /// `D[x]`, `E[j,i]` or `M(i,i+1)`.
    pub name: String,
    pub point: BristlePoint<F>,
    pub sub: SubmodulePair<F>,
}

#[derive(Clone, Debug)]
pub struct CoverReport<F: Field> {
    pub kind: CoverConstruction,
    pub n: usize,
    pub checks: Vec<CoverCheck>,
    pub bristles: Vec<LocatedBristle<F>>,
}

impl<F: Field> CoverReport<F> {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Number of located bristles of each type, keyed by label.
    pub fn counts_by_type(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for b in &self.bristles {
            *counts.entry(b.point.label()).or_insert(0) += 1;
        }
        counts
    }

    fn push(&mut self, name: String, pass: bool, detail: String) {
        self.checks.push(CoverCheck { name, pass, detail });
    }
}

fn sum_all<F: Field>(start: SubmodulePair<F>, parts: &[&SubmodulePair<F>]) -> Result<SubmodulePair<F>> {
    parts.iter().try_fold(start, |acc, p| acc.sum(p))
}

/// Checks, for `X` or `X'`:
///
/// 1. `Y(j) = Σ_{i ∈ G(j)} P(x(j,i)) + Σ_{i ∈ H(j)} V[i]` in the cover;
/// 2. `π(Y(j)) = Σ D[x] + Σ E[i]`, with `D`, `E` bristle submodules;
/// 3. `π(W(i,j)) ⊆ N + M(i,j)` for all defined `W(i,j)`;
/// 4. `X_z = ⊕_{i ∈ I} W(i,i+1)_z`;
/// 5. `π = N + Σ_{i ∈ I} M(i,i+1)`,
///
/// where `N = π(Σ Y(j))`. For `X` every `I` of size `n − 1` is tried in 4
/// and 5; the located bristles use the default index set.
pub fn verify_cover_equalities<F: Field>(cover: &NamedCover<F>) -> Result<CoverReport<F>> {
    if cover.kind == CoverConstruction::MuBristle {
        return Err(Error::InvalidArgument("X'' is not generated by bristles".into()));
    }
    let field = cover.field();
    let n = cover.n;
    let pd = cover.push_down_ball();
    let zero = SubmodulePair::zero(&pd.module);
    let mut report = CoverReport { kind: cover.kind, n, checks: Vec::new(), bristles: Vec::new() };

    let n_cover = cover.n_sub()?;
    let n_sub = n_cover.push_down(&pd.index);
    let sinks = cover.leafed_sinks();

    for &j in &sinks {
        let y_j = cover.y_component(j)?;
        let mut cover_sum = CoverSub::zero(&cover.ball);
        let mut pushed = Vec::new();
        for i in cover.g_set(j) {
            let p = cover.leaf_projective(j, i)?;
            cover_sum = cover_sum.sum(&p)?;
            let point = BristlePoint::single(field, n, i)?;
            let d = p.push_down(&pd.index);
            let certified = find_isomorphism(&d.to_module(&pd.module)?.0, &point.module(), IsoSearch::default())?;
            report.push(
                format!("D[x({j},{i})] is isomorphic to {}", point.label()),
                certified.is_isomorphic(),
                certified.label().into(),
            );
            report.bristles.push(LocatedBristle { name: format!("D[x({j},{i})]"), point, sub: d.clone() });
            pushed.push(d);
        }
        for i in cover.h_set(j) {
            let v = cover.v_component(j, i)?;
            cover_sum = cover_sum.sum(&v)?;
            let point = BristlePoint::pair(field, n, i, succ(n, i))?;
            let (e, hom) = bristle_in(&pd, &v, &point)?;
            report.push(
                format!("E[{j},{i}] is a single bristle {}", point.label()),
                hom == 1 && e.dims().d1 == 1 && e.dims().d2 == 1,
                format!("dim Hom = {hom}, dims {}", e.dims()),
            );
            report.bristles.push(LocatedBristle { name: format!("E[{j},{i}]"), point, sub: e.clone() });
            pushed.push(e);
        }
        report.push(
            format!("Y({j}) = sum of P(x) over G({j}) and V[i] over H({j})"),
            cover_sum == y_j,
            format!("G = {:?}, H = {:?}", cover.g_set(j), cover.h_set(j)),
        );
        let refs: Vec<&SubmodulePair<F>> = pushed.iter().collect();
        let rhs = sum_all(zero.clone(), &refs)?;
        let lhs = y_j.push_down(&pd.index);
        report.push(
            format!("N({j}) = sum of D[x] and E[i]"),
            rhs == lhs,
            format!("dims {} vs {}", lhs.dims(), rhs.dims()),
        );
    }

    for &i in &sinks {
        for &j in &sinks {
            if i == j {
                continue;
            }
            let Ok(w) = cover.w_component(i, j) else { continue };
            let mij = extract_mij(cover, i, j)?;
            let w_pd = w.push_down(&pd.index);
            let bound = n_sub.sum(&mij.sub)?;
            report.push(
                format!("π(W({i},{j})) ⊆ N + M({i},{j})"),
                w_pd.is_submodule_of(&bound),
                format!("π(W) dims {}", w_pd.dims()),
            );
        }
    }

    let z = TreeVertex::root();
    let xz = cover.support.space(&z).expect("z is a vertex").clone();
    let index_sets: Vec<Vec<usize>> = match cover.kind {
        CoverConstruction::Ball => (1..=n).map(|k| (1..=n).filter(|&i| i != k).collect()).collect(),
        _ => vec![cover.default_index_set()],
    };
    let full = cover.support.push_down(&pd.index);
    for set in &index_sets {
        let mut span = Subspace::zero(field, xz.ambient_dim());
        let mut total = 0;
        let mut ms = Vec::new();
        for &i in set {
            let w = cover.w_component(i, succ(n, i))?;
            let wz = w.space(&z).expect("z is a vertex");
            total += wz.dim();
            span = span.sum(wz)?;
            ms.push(extract_mij(cover, i, succ(n, i))?.sub);
        }
        report.push(
            format!("X_z is the direct sum of W(i,i+1)_z for I = {set:?}"),
            span == xz && total == xz.dim(),
            format!("sum of dims {total}, dim X_z {}", xz.dim()),
        );
        let refs: Vec<&SubmodulePair<F>> = ms.iter().collect();
        let generated = sum_all(n_sub.clone(), &refs)?;
        report.push(
            format!("π = N + sum of M(i,i+1) for I = {set:?}"),
            generated == full,
            format!("dims {} vs {}", generated.dims(), full.dims()),
        );
    }

    for i in cover.default_index_set() {
        let point = BristlePoint::pair(field, n, i, succ(n, i))?;
        let mij = extract_mij(cover, i, succ(n, i))?;
        let module = mij.sub.to_module(&pd.module)?.0;
        let certified = find_isomorphism(&module, &point.module(), IsoSearch::default())?;
        report.push(
            format!("M({i},{}) is isomorphic to {}", succ(n, i), point.label()),
            certified.is_isomorphic(),
            certified.label().into(),
        );
        report.bristles.push(LocatedBristle { name: format!("M({i},{})", succ(n, i)), point, sub: mij.sub });
    }

    let refs: Vec<&SubmodulePair<F>> = report.bristles.iter().map(|b| &b.sub).collect();
    let all = sum_all(zero, &refs)?;
    report.push(
        "the located bristles generate the push-down".into(),
        all == full,
        format!("{} bristles, dims {}", report.bristles.len(), all.dims()),
    );
    Ok(report)
}
