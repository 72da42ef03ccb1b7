//! Property scenarios over seeded random modules.

use rand::Rng;

use super::{Ctx, Stream};
use crate::bristle::{is_saturated, BristlePoint};
use crate::field::Field;
use crate::harness::report::Checks;
use crate::kron::{end_dim, ext1_dim, ext1_dim_via_resolution, DimensionVector, KroneckerModule};
use crate::linalg::Matrix;
use crate::Result;

const MAX_DIM1: usize = 6;
const MAX_DIM2: usize = 4;

/// Dimension vectors up to `(6, 4)`, three times in four with `d1 ≥ (n−1) d2`,
/// where saturated modules live.
fn biased_dims<R: Rng>(n: usize, rng: &mut R) -> DimensionVector {
    let d2 = rng.gen_range(1..=MAX_DIM2);
    let low = ((n - 1) * d2).min(MAX_DIM1);
    let d1 = if rng.gen_ratio(3, 4) && low >= 1 { rng.gen_range(low..=MAX_DIM1) } else { rng.gen_range(1..=MAX_DIM1) };
    DimensionVector::new(d1, d2)
}

pub(super) fn saturated_faithful<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let mut rng = c.rng(Stream::Modules);
    let (mut bricks, mut found, mut counterexamples) = (0, 0, 0);
    for _ in 0..c.samples {
        let dims = biased_dims(n, &mut rng);
        let m = KroneckerModule::random(f, n, dims, &mut rng);
        if end_dim(&m)? != 1 {
            continue;
        }
        bricks += 1;
        if is_saturated(&m)? {
            found += 1;
            counterexamples += usize::from(!m.is_faithful());
        }
    }
    checks
        .eq(
            "saturated non-simple bricks that are not faithful",
            "An indecomposable saturated module is simple or faithful.",
            0,
            counterexamples,
        )
        .with_detail(format!("{} samples, {bricks} bricks, {found} saturated", c.samples));
    checks.holds(
        "the search met saturated non-simple bricks",
        "The sample is not vacuous.",
        found > 0 || c.samples == 0,
    );
    Ok(())
}

pub(super) fn annihilated<F: Field>(c: &Ctx<F>, checks: &mut Checks) -> Result<()> {
    let (f, n) = (&c.field, c.n);
    let mut rng = c.rng(Stream::Modules);
    let b1 = BristlePoint::single(f, n, 1)?.module();
    let (mut violations, mut disagreements) = (0, 0);
    for _ in 0..c.samples {
        let dims = DimensionVector::new(rng.gen_range(0..=MAX_DIM1), rng.gen_range(0..=MAX_DIM2));
        let generic = KroneckerModule::random(f, n, dims, &mut rng);
        let mut alphas = generic.alphas().to_vec();
        alphas[n - 1] = Matrix::zeros(f, dims.d2, dims.d1);
        let m = KroneckerModule::new(f, n, dims.d1, dims.d2, alphas)?;
        let ext = ext1_dim(&b1, &m)?;
        violations += usize::from(ext < m.dim2());
        disagreements += usize::from(ext != ext1_dim_via_resolution(&b1, &m)?);
    }
    checks
        .eq(
            "modules with dim Ext^1(B(1), M) < dim M_2",
            "If the last arrow acts by zero, dim Ext^1(B(1), M) >= dim M_2.",
            0,
            violations,
        )
        .with_detail(format!("{} samples", c.samples));
    checks.eq(
        "Ext^1 routes disagreeing",
        "The Euler-form and presentation computations of Ext^1 agree.",
        0,
        disagreements,
    );
    Ok(())
}
