//! Scalar fields: prime fields `GF(p)` and the rationals.
//!
//! Every algebraic object in the crate is generic over a [`Field`] value that
//! carries whatever runtime data the arithmetic needs (the modulus for
//! `GF(p)`). Elements are plain values; the field does the arithmetic.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::Error;

/// Runtime description of a field, as written in module files and on the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Rationals => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf({p})"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("expected gf(p) or q, got `{s}`")))?;
        let p: u64 = inner.parse().map_err(|_| Error::InvalidField(format!("bad modulus `{inner}`")))?;
        PrimeField::new(p).map(|f| f.spec())
    }
}

/// Arithmetic over a field whose elements are `Self::Elem`.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// All elements in ascending order, or `None` for an infinite field.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// A random element. Over the rationals this draws small integers.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Canonical text form used by module files.
    fn format(&self, a: &Self::Elem) -> String;

    /// Parses the canonical text form; the error is a human-readable reason.
    fn parse(&self, s: &str) -> Result<Self::Elem, String>;

    fn cardinality(&self) -> Option<u64> {
        self.spec().cardinality()
    }

    /// `dst -= f * src`, entrywise.
    fn axpy(&self, dst: &mut [Self::Elem], f: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = self.sub(d, &self.mul(f, s));
        }
    }

    fn scale(&self, v: &mut [Self::Elem], c: &Self::Elem) {
        for x in v.iter_mut() {
            *x = self.mul(x, c);
        }
    }
}

/// The prime field `GF(p)` for `2 <= p < 2^31`. Elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::InvalidField(format!("modulus {p} outside [2, 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i64) as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64, String> {
        let v: u64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
        if v >= self.p {
            return Err(format!("entry {v} out of range [0, {})", self.p));
        }
        Ok(v)
    }

    fn axpy(&self, dst: &mut [u64], f: &u64, src: &[u64]) {
        if *f == 0 {
            return;
        }
        let m = self.p - f;
        for (d, s) in dst.iter_mut().zip(src) {
            *d = (*d + m * s) % self.p;
        }
    }
}

/// The rationals with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational, String> {
        let bad = || format!("`{s}` is not a rational number");
        match s.split_once('/') {
            None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
            Some((num, den)) => {
                let num: BigInt = num.parse().map_err(|_| bad())?;
                if den.starts_with(['-', '+']) {
                    return Err(format!("denominator of `{s}` must be a positive integer"));
                }
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(format!("zero denominator in `{s}`"));
                }
                if den.is_one() || !num.gcd(&den).is_one() {
                    return Err(format!("`{s}` is not in lowest terms"));
                }
                debug_assert!(den.is_positive());
                Ok(BigRational::new_raw(num, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_inverse_round_trips() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rejects_composite_and_out_of_range_moduli() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new((1 << 31) + 11).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn field_spec_text_round_trip() {
        for s in ["gf(2)", "gf(5)", "q"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
        assert!("gf(6)".parse::<FieldSpec>().is_err());
        assert!("GF(5)".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rational_parse_requires_lowest_terms() {
        let q = Rationals;
        assert_eq!(q.format(&q.parse("-3/2").unwrap()), "-3/2");
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        assert!(q.parse("2/4").is_err());
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("1/-2").is_err());
        assert!(q.parse("3/1").is_err());
    }

    #[test]
    fn prime_parse_range() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("4"), Ok(4));
        assert!(f.parse("5").is_err());
        assert!(f.parse("-1").is_err());
    }
}
