//! Exact rational numbers in lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// A fraction kept in lowest terms with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational::from_integer(0)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Representative of `self` modulo 1, in `[0, 1)`.
    pub fn fract_floor(&self) -> Self {
        let n = self.numer().mod_floor(&self.denom());
        Rational::new(n, self.denom())
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Prints `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Serialized as the exact fraction string, e.g. `"49/36"`.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalizes_eagerly() {
        let r = Rational::new(12, -36);
        assert_eq!((r.numer(), r.denom()), (-1, 3));
        assert_eq!(Rational::new(98, 72), Rational::new(49, 36));
        assert_eq!(Rational::new(0, -5), Rational::zero());
    }

    #[test]
    fn display() {
        assert_eq!(Rational::new(49, 36).to_string(), "49/36");
        assert_eq!(Rational::new(4, 4).to_string(), "1");
        assert_eq!(Rational::new(-3, 12).to_string(), "-1/4");
    }

    #[test]
    fn fract_floor_wraps_into_unit_interval() {
        assert_eq!(Rational::new(100, 36).fract_floor(), Rational::new(7, 9));
        assert_eq!(Rational::new(-1, 4).fract_floor(), Rational::new(3, 4));
        assert_eq!(Rational::from_integer(3).fract_floor(), Rational::zero());
    }

    proptest! {
        #[test]
        fn arithmetic_stays_reduced(a in -500i64..500, b in 1i64..500, c in -500i64..500, d in 1i64..500) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            for z in [x + y, x - y, x * y] {
                prop_assert!(z.denom() > 0);
                prop_assert_eq!(z.numer().gcd(&z.denom()), 1);
            }
            prop_assert_eq!((x + y) - y, x);
        }
    }
}
