//! Minimal exact rational arithmetic. The case analysis in [`crate::weil`]
//! hinges on exact comparisons of deviation sums, so nothing here ever
//! touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{Serialize, Serializer};

/// A rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Construct `num/den`, reducing to lowest terms. Panics on a zero
    /// denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * (num / g),
            den: (den / g).abs(),
        }
    }

    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        // i64 is ample here: every quantity in this crate has |num| well
        // below 2^32 and den <= 42, but go through i128 to keep the type
        // total.
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let den = self.den as i128 * rhs.den as i128;
        let g = gcd128(num, den).max(1);
        Rational {
            num: i64::try_from(num / g).expect("rational overflow"),
            den: i64::try_from(den / g).expect("rational overflow"),
        }
    }
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        let num = self.num as i128 * rhs.num as i128;
        let den = self.den as i128 * rhs.den as i128;
        let g = gcd128(num, den).max(1);
        Rational {
            num: i64::try_from(num / g).expect("rational overflow"),
            den: i64::try_from(den / g).expect("rational overflow"),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Integers serialize as JSON integers, everything else as the exact
/// `"num/den"` string. No rational ever becomes a float.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.den == 1 {
            serializer.serialize_i64(self.num)
        } else {
            serializer.serialize_str(&format!("{}/{}", self.num, self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(-3, -9), Rational::new(1, 3));
        assert_eq!(Rational::new(0, -5), Rational::ZERO);
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        assert_eq!(a + b, Rational::new(1, 2));
        assert_eq!(b - a, a);
        assert_eq!(a * Rational::from_int(6), Rational::ONE);
        assert!(Rational::new(41, 42) < Rational::ONE);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(Rational::new(-8, 2).to_string(), "-4");
        assert_eq!(Rational::new(6, 5).to_string(), "6/5");
        assert_eq!(serde_json::to_string(&Rational::new(-8, 2)).unwrap(), "-4");
        assert_eq!(
            serde_json::to_string(&Rational::new(6, 5)).unwrap(),
            "\"6/5\""
        );
    }

    #[test]
    fn field_laws() {
        use proptest::prelude::*;
        let rat = (-1000i64..1000, 1i64..100).prop_map(|(n, d)| Rational::new(n, d));
        proptest!(|(a in rat.clone(), b in rat.clone(), c in rat)| {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - a, Rational::ZERO);
            prop_assert_eq!(a + (-a), Rational::ZERO);
            // Ordering is compatible with addition.
            if a < b {
                prop_assert!(a + c < b + c);
            }
        });
    }
}
