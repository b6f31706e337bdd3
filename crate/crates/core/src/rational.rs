//! Reduced fractions over `i128`.
//!
//! The quantities that drive the sign analysis (`m`, `b0`, `q0`, `R0`) are
//! half- and quarter-integers; keeping them exact means no decision ever
//! depends on floating-point rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Serialize, Serializer};

/// A fraction `num / den` with `gcd(num, den) = 1` and `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

impl ExactRational {
    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1 };

    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        Self::checked_new(num, den).expect("ExactRational with zero denominator")
    }

    pub fn checked_new(num: i128, den: i128) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Some(ExactRational { num, den })
    }

    pub fn from_integer(n: i128) -> Self {
        ExactRational { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then_some(self.num)
    }

    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(&self) -> i128 {
        -Integer::div_floor(&-self.num, &self.den)
    }

    pub fn signum(&self) -> i128 {
        self.num.signum()
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal expansion truncated toward zero after `places` digits.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scale = 10i128.pow(places);
        let scaled = self.num.abs() * scale / self.den;
        let sign = if self.num < 0 { "-" } else { "" };
        if places == 0 {
            return format!("{sign}{scaled}");
        }
        let int = scaled / scale;
        let frac = scaled % scale;
        format!("{sign}{int}.{frac:0width$}", width = places as usize)
    }
}

impl From<i128> for ExactRational {
    fn from(n: i128) -> Self {
        ExactRational::from_integer(n)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        ExactRational::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> Self {
        ExactRational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = ExactRational::new(6, -4);
        assert_eq!((r.num(), r.den()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(ExactRational::new(8, 4).to_string(), "2");
    }

    #[test]
    fn floor_and_ceil_of_half_integers() {
        let r = ExactRational::new(87, 2);
        assert_eq!(r.floor(), 43);
        assert_eq!(r.ceil(), 44);
        let n = ExactRational::new(-87, 2);
        assert_eq!(n.floor(), -44);
        assert_eq!(n.ceil(), -43);
    }

    #[test]
    fn decimal_string() {
        assert_eq!(ExactRational::new(58578, 100000).to_decimal_string(6), "0.585780");
        assert_eq!(ExactRational::new(-1, 3).to_decimal_string(3), "-0.333");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(ExactRational::checked_new(1, 0).is_none());
    }

    proptest! {
        #[test]
        fn arithmetic_matches_cross_multiplication(a in -1000i128..1000, b in 1i128..1000,
                                                   c in -1000i128..1000, d in 1i128..1000) {
            let x = ExactRational::new(a, b);
            let y = ExactRational::new(c, d);
            prop_assert_eq!(x + y, ExactRational::new(a * d + c * b, b * d));
            prop_assert_eq!(x * y, ExactRational::new(a * c, b * d));
            prop_assert_eq!((x - y) + y, x);
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
            prop_assert!(x.den() > 0);
            prop_assert_eq!(x.num().gcd(&x.den()), 1);
        }
    }
}
