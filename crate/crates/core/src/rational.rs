//! Small exact fractions for angle arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A fraction in lowest terms with a positive denominator.
///
/// Backed by `i128` so that intermediate values of the closed-form computation
/// (up to about `2^64` for period 62) never overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    numer: i128,
    denom: i128,
}

impl ExactRational {
    /// Builds `numer / denom` reduced to lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "zero denominator");
        let sign = if denom < 0 { -1 } else { 1 };
        let g = gcd(numer.unsigned_abs(), denom.unsigned_abs()).max(1) as i128;
        ExactRational { numer: sign * numer / g, denom: sign * denom / g }
    }

    pub fn from_integer(v: i128) -> Self {
        ExactRational { numer: v, denom: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.numer
    }

    pub fn denom(&self) -> i128 {
        self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let n = self.numer.checked_mul(rhs.denom)?.checked_add(rhs.numer.checked_mul(self.denom)?)?;
        let d = self.denom.checked_mul(rhs.denom)?;
        Some(Self::new(n, d))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(&Self { numer: -rhs.numer, denom: rhs.denom })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Some(Self::new(self.numer.checked_mul(rhs.numer)?, self.denom.checked_mul(rhs.denom)?))
    }

    /// Formats `self * pi` the way angles are written in tables: `0`, `pi`,
    /// `-pi/6`, `13pi/34`.
    pub fn pi_multiple(&self) -> String {
        let sign = if self.numer < 0 { "-" } else { "" };
        let n = self.numer.unsigned_abs();
        match (n, self.denom) {
            (0, _) => "0".to_string(),
            (1, 1) => format!("{sign}pi"),
            (n, 1) => format!("{sign}{n}pi"),
            (1, d) => format!("{sign}pi/{d}"),
            (n, d) => format!("{sign}{n}pi/{d}"),
        }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numer * other.denom).cmp(&(other.numer * self.denom))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = ExactRational::new(8, -6);
        assert_eq!((r.numer(), r.denom()), (-4, 3));
        assert_eq!(ExactRational::new(0, -5), ExactRational::from_integer(0));
        assert_eq!(ExactRational::new(10, 5).to_string(), "2");
        assert_eq!(ExactRational::new(-6, 5).to_string(), "-6/5");
    }

    #[test]
    fn pi_multiples() {
        assert_eq!(ExactRational::new(0, 3).pi_multiple(), "0");
        assert_eq!(ExactRational::new(1, 2).pi_multiple(), "pi/2");
        assert_eq!(ExactRational::new(-1, 6).pi_multiple(), "-pi/6");
        assert_eq!(ExactRational::new(-13, 30).pi_multiple(), "-13pi/30");
        assert_eq!(ExactRational::new(2, 1).pi_multiple(), "2pi");
        assert_eq!(ExactRational::new(-1, 1).pi_multiple(), "-pi");
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_panics() {
        ExactRational::new(1, 0);
    }

    proptest! {
        #[test]
        fn lowest_terms(n in -1_000_000i128..1_000_000, d in 1i128..1_000_000) {
            let r = ExactRational::new(n, d);
            prop_assert!(r.denom() > 0);
            prop_assert_eq!(gcd(r.numer().unsigned_abs(), r.denom().unsigned_abs()).max(1), 1);
            prop_assert_eq!(r.numer() * d, n * r.denom());
        }

        #[test]
        fn add_sub_inverse(a in -1000i128..1000, b in 1i128..1000, c in -1000i128..1000, e in 1i128..1000) {
            let x = ExactRational::new(a, b);
            let y = ExactRational::new(c, e);
            prop_assert_eq!(x.checked_add(&y).unwrap().checked_sub(&y).unwrap(), x);
            prop_assert_eq!(x.checked_mul(&y).unwrap(), ExactRational::new(a * c, b * e));
            prop_assert_eq!(x < y, a * e < c * b);
        }
    }
}
