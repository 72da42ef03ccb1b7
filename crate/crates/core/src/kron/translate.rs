//! The Auslander-Reiten translate as a composite of two reflection functors.
//!
//! `τ` reflects first at the sink (a kernel) and then at the source (another
//! kernel); `τ⁻` reflects at the source (a cokernel) and then at the sink.
//! Arrow labels are carried through both reflections, so `τ` maps a module
//! with dimension vector `x` and no projective summand to one with `Φ(x)`.

use crate::field::Field;
use crate::kron::KroneckerModule;
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateDirection {
    Tau,
    TauInverse,
}

pub fn ar_translate<F: Field>(m: &KroneckerModule<F>, direction: TranslateDirection) -> KroneckerModule<F> {
    match direction {
        TranslateDirection::Tau => tau(m),
        TranslateDirection::TauInverse => tau_inverse(m),
    }
}

/// Splits each row vector of length `n·block` into `n` column blocks:
/// the `i`-th output matrix has the `i`-th segment of row `k` as column `k`.
fn segment_columns<F: Field>(field: &F, n: usize, block: usize, rows: &[Vec<F::Elem>]) -> Vec<Matrix<F>> {
    (0..n).map(|i| Matrix::from_fn(field, block, rows.len(), |r, k| rows[k][i * block + r].clone())).collect()
}

/// Splits the columns of `q` into `n` consecutive blocks of width `block`.
fn column_blocks<F: Field>(q: &Matrix<F>, n: usize, block: usize) -> Vec<Matrix<F>> {
    (0..n).map(|i| q.select_columns(&(i * block..(i + 1) * block).collect::<Vec<_>>())).collect()
}

pub fn tau<F: Field>(m: &KroneckerModule<F>) -> KroneckerModule<F> {
    let (f, n) = (m.field(), m.n());
    // Sink reflection: V = ker(M1^n -> M2), with the n projections V -> M1.
    let v = m.side_by_side().kernel().basis_vectors();
    let betas = segment_columns(f, n, m.dim1(), &v);
    // Source reflection: W = ker(V^n -> M1), with the n projections W -> V.
    let w = Matrix::hstack_all(f, m.dim1(), &betas).kernel().basis_vectors();
    let gammas = segment_columns(f, n, v.len(), &w);
    KroneckerModule::new(f, n, w.len(), v.len(), gammas).expect("reflection preserves shapes")
}

pub fn tau_inverse<F: Field>(m: &KroneckerModule<F>) -> KroneckerModule<F> {
    let (f, n) = (m.field(), m.n());
    // Source reflection: U = coker(M1 -> M2^n), with the n maps M2 -> U.
    let q = m.stacked().image().quotient_map();
    let deltas = column_blocks(&q, n, m.dim2());
    let u = q.rows();
    // Sink reflection: Z = coker(M2 -> U^n), with the n maps U -> Z.
    let q2 = Matrix::vstack_all(f, m.dim2(), &deltas).image().quotient_map();
    let eps = column_blocks(&q2, n, u);
    KroneckerModule::new(f, n, u, q2.rows(), eps).expect("reflection preserves shapes")
}

/// `τ^t` for `t >= 0` and `τ^{-t}` for `t < 0`.
pub fn tau_power<F: Field>(m: &KroneckerModule<F>, t: i64) -> KroneckerModule<F> {
    let step = if t >= 0 { tau } else { tau_inverse };
    (0..t.unsigned_abs()).fold(m.clone(), |acc, _| step(&acc))
}
