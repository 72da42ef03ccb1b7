//! Preinjective and preprojective modules.
//!
//! `I0 = S(1)`, `I1 = I(2)` and `I_t = τ I_{t-2}`; `P_t` is the dual of `I_t`.
//! For two arrows there is also an explicit basis description of `I_t`
//! together with the bristle generators `m_c`.

use std::fmt;

use crate::field::Field;
use crate::kron::{tau_power, KroneckerModule};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Preinjective,
    Preprojective,
}

/// `I_t` or `P_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyIndex {
    pub family: Family,
    pub t: usize,
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::Preinjective => 'I',
            Family::Preprojective => 'P',
        };
        write!(f, "{letter}{}", self.t)
    }
}

impl FamilyIndex {
    pub fn module<F: Field>(&self, field: &F, n: usize) -> KroneckerModule<F> {
        match self.family {
            Family::Preinjective => preinjective(field, n, self.t),
            Family::Preprojective => preprojective(field, n, self.t),
        }
    }
}

/// `I_t = τ^{⌊t/2⌋} I_{t mod 2}`.
pub fn preinjective<F: Field>(field: &F, n: usize, t: usize) -> KroneckerModule<F> {
    let base = if t.is_multiple_of(2) {
        KroneckerModule::simple_source(field, n)
    } else {
        KroneckerModule::injective_sink(field, n)
    };
    tau_power(&base, (t / 2) as i64)
}

pub fn preprojective<F: Field>(field: &F, n: usize, t: usize) -> KroneckerModule<F> {
    preinjective(field, n, t).dual()
}

/// `I_t` for two arrows in the basis `e0, …, et` of `M1` and `e'1, …, e't` of `M2`:
/// `α1(ei) = e'_{i+1}` for `i < t`, `α1(et) = 0`, `α2(e0) = 0`, `α2(ei) = e'_i`.
pub fn n2_preinjective<F: Field>(field: &F, t: usize) -> KroneckerModule<F> {
    let one = field.one();
    let a1 = Matrix::from_fn(field, t, t + 1, |r, c| if r == c { one.clone() } else { field.zero() });
    let a2 = Matrix::from_fn(field, t, t + 1, |r, c| if c == r + 1 { one.clone() } else { field.zero() });
    KroneckerModule::new(field, 2, t + 1, t, vec![a1, a2]).expect("fixed shapes")
}

/// A point of `P^1`: `c` stands for `(1 : c)` and `Infinity` for `(0 : 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectiveParam<E> {
    Finite(E),
    Infinity,
}

/// The generator `m_c = Σ c^i e_i` (or `m_∞ = e_t`) of the bristle of type
/// `(1 : c)` (or `(0 : 1)`) inside [`n2_preinjective`].
pub fn n2_bristle_generator<F: Field>(field: &F, t: usize, c: &ProjectiveParam<F::Elem>) -> Vec<F::Elem> {
    match c {
        ProjectiveParam::Finite(c) => {
            let mut v = Vec::with_capacity(t + 1);
            let mut power = field.one();
            for _ in 0..=t {
                v.push(power.clone());
                power = field.mul(&power, c);
            }
            v
        }
        ProjectiveParam::Infinity => {
            let mut v = vec![field.zero(); t + 1];
            v[t] = field.one();
            v
        }
    }
}

/// All `q + 1` points of `P^1(GF(q))`, finite ones first in ascending order.
pub fn projective_line<F: Field>(field: &F) -> Option<Vec<ProjectiveParam<F::Elem>>> {
    let mut points: Vec<_> = field.elements()?.into_iter().map(ProjectiveParam::Finite).collect();
    points.push(ProjectiveParam::Infinity);
    Some(points)
}

/// The normalized bristle coordinates of a point of `P^1`.
pub fn projective_param_coords<F: Field>(field: &F, c: &ProjectiveParam<F::Elem>) -> Vec<F::Elem> {
    match c {
        ProjectiveParam::Finite(c) => vec![field.one(), c.clone()],
        ProjectiveParam::Infinity => vec![field.zero(), field.one()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bristle::is_bristle_vector;
    use crate::field::PrimeField;
    use crate::kron::{coxeter_power, DimensionVector};

    #[test]
    fn preinjective_dimensions_follow_coxeter() {
        let f = PrimeField::new(5).unwrap();
        for t in 0..5 {
            let base = if t % 2 == 0 { (1, 0) } else { (3, 1) };
            let (a, b) = coxeter_power(3, base, (t / 2) as i64);
            assert_eq!(preinjective(&f, 3, t).dims(), DimensionVector::new(a as usize, b as usize));
        }
        assert_eq!(preinjective(&f, 3, 3).dims(), DimensionVector::new(21, 8));
    }

    #[test]
    fn preprojectives_start_with_projectives() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(preprojective(&f, 3, 0), KroneckerModule::simple_sink(&f, 3));
        assert_eq!(preprojective(&f, 3, 1), KroneckerModule::projective_source(&f, 3));
    }

    #[test]
    fn n2_generators_are_bristle_vectors() {
        let f = PrimeField::new(3).unwrap();
        for t in 1..4 {
            let m = n2_preinjective(&f, t);
            for c in projective_line(&f).unwrap() {
                let u = n2_bristle_generator(&f, t, &c);
                assert!(is_bristle_vector(&m, &u).unwrap());
            }
        }
    }
}
