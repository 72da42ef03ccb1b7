use std::fmt;

use serde::Serialize;

/// Dimension vector `(dim M1, dim M2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DimensionVector {
    pub d1: usize,
    pub d2: usize,
}

impl DimensionVector {
    pub const fn new(d1: usize, d2: usize) -> Self {
        DimensionVector { d1, d2 }
    }

    pub fn total(&self) -> usize {
        self.d1 + self.d2
    }

    pub fn as_i64(&self) -> (i64, i64) {
        (self.d1 as i64, self.d2 as i64)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// The Euler form `<(a,b),(a',b')> = aa' + bb' - n ab'` of the n-Kronecker quiver.
pub fn euler_form(n: usize, x: (i64, i64), y: (i64, i64)) -> i64 {
    x.0 * y.0 + x.1 * y.1 - n as i64 * x.0 * y.1
}

/// The Coxeter transformation `Φ(a,b) = (n²a - nb - a, na - b)`.
pub fn coxeter(n: usize, (a, b): (i64, i64)) -> (i64, i64) {
    let n = n as i64;
    (n * n * a - n * b - a, n * a - b)
}

/// The inverse Coxeter transformation `Φ⁻¹(c,d) = (nd - c, (n²-1)d - nc)`.
pub fn coxeter_inverse(n: usize, (c, d): (i64, i64)) -> (i64, i64) {
    let n = n as i64;
    (n * d - c, (n * n - 1) * d - n * c)
}

/// `Φ^t` for any integer `t`.
pub fn coxeter_power(n: usize, x: (i64, i64), t: i64) -> (i64, i64) {
    let step = if t >= 0 { coxeter } else { coxeter_inverse };
    (0..t.unsigned_abs()).fold(x, |acc, _| step(n, acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_values_for_three_arrows() {
        assert_eq!(euler_form(3, (1, 1), (1, 1)), -1);
        assert_eq!(euler_form(3, (1, 1), (8, 3)), 2);
        assert_eq!(euler_form(3, (1, 1), (21, 8)), 5);
    }

    #[test]
    fn coxeter_values_for_three_arrows() {
        assert_eq!(coxeter(3, (1, 0)), (8, 3));
        assert_eq!(coxeter(3, (1, 1)), (5, 2));
        assert_eq!(coxeter(3, (8, 3)), (55, 21));
        assert_eq!(coxeter_power(3, (1, 1), 3), (233, 89));
        assert_eq!(coxeter(4, (1, 1)), (11, 3));
    }

    #[test]
    fn coxeter_inverse_is_inverse() {
        for n in 1..6 {
            for a in -4..5 {
                for b in -4..5 {
                    assert_eq!(coxeter_inverse(n, coxeter(n, (a, b))), (a, b));
                    assert_eq!(coxeter(n, coxeter_inverse(n, (a, b))), (a, b));
                }
            }
        }
    }
}
