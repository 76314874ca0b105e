//! Sign patterns: the repeating block `a_0 ... a_{n-1}` of a periodic radical.
//!
//! Text form is a string over `+` and `-`, one character per sign, `a_0` first.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::counting::divisors;
use crate::{Error, Result};

/// Largest period accepted by [`enumerate_patterns`].
pub const MAX_ENUMERATION_PERIOD: u32 = 30;

/// A coefficient of the radical, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.value())
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = i8::deserialize(deserializer)?;
        Sign::from_i8(v).ok_or_else(|| serde::de::Error::custom(format!("sign must be +1 or -1, got {v}")))
    }
}

/// One period of signs. Never empty; indices past the end wrap around.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(SignPattern { signs })
    }

    /// Pattern number `index` of length `n` in canonical order: `a_0` is the most
    /// significant bit, `+` is 0 and `-` is 1.
    ///
    /// Panics if `n` is zero or greater than 64, or if `index` has bits at or above `n`.
    pub fn from_index(n: u32, index: u64) -> Self {
        assert!((1..=64).contains(&n), "pattern length {n} out of range");
        assert!(n == 64 || index >> n == 0, "index {index} does not fit in {n} bits");
        let signs = (0..n).map(|k| if (index >> (n - 1 - k)) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect();
        SignPattern { signs }
    }

    /// Length-`n` pattern with every sign equal to `sign`.
    pub fn constant(sign: Sign, n: usize) -> Result<Self> {
        Self::new(vec![sign; n])
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `a_k` of the periodic extension.
    pub fn sign_at(&self, k: usize) -> Sign {
        self.signs[k % self.signs.len()]
    }

    /// Iterates `a_0, a_1, ...` forever.
    pub fn extended(&self) -> impl Iterator<Item = Sign> + '_ {
        self.signs.iter().copied().cycle()
    }

    /// Product of all signs in one period.
    pub fn parity(&self) -> Sign {
        self.signs.iter().fold(Sign::Plus, |acc, &s| acc * s)
    }

    pub fn prefix_products(&self) -> PrefixProducts {
        let values = self
            .signs
            .iter()
            .scan(Sign::Plus, |acc, &s| {
                *acc = *acc * s;
                Some(*acc)
            })
            .collect();
        PrefixProducts { values }
    }

    /// Smallest divisor `d` of the length with `a_{k+d} = a_k` throughout.
    pub fn minimal_period(&self) -> usize {
        let n = self.signs.len();
        divisors(n as u64)
            .into_iter()
            .map(|d| d as usize)
            .find(|&d| (0..n - d).all(|k| self.signs[k + d] == self.signs[k]))
            .unwrap_or(n)
    }

    pub fn is_all_plus(&self) -> bool {
        self.signs.iter().all(|s| s.is_plus())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_pattern(text)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_pattern(&text).map_err(serde::de::Error::custom)
    }
}

/// Running products `P_m = a_0 * ... * a_m` for `m = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixProducts {
    values: Vec<Sign>,
}

impl PrefixProducts {
    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    /// The last prefix product, which is the parity.
    pub fn parity(&self) -> Sign {
        *self.values.last().expect("prefix products are never empty")
    }
}

/// Parses `+`/`-` text; character `i` becomes `a_i`.
pub fn parse_pattern(text: &str) -> Result<SignPattern> {
    if text.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let signs = text
        .chars()
        .enumerate()
        .map(|(index, c)| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::InvalidSign { index }),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignPattern { signs })
}

pub fn format_pattern(p: &SignPattern) -> String {
    p.to_string()
}

pub fn parity(p: &SignPattern) -> Sign {
    p.parity()
}

pub fn prefix_products(p: &SignPattern) -> PrefixProducts {
    p.prefix_products()
}

pub fn minimal_period(p: &SignPattern) -> usize {
    p.minimal_period()
}

fn check_enumeration_period(n: u32) -> Result<()> {
    if (1..=MAX_ENUMERATION_PERIOD).contains(&n) {
        Ok(())
    } else {
        Err(Error::PeriodTooLarge { n, max: MAX_ENUMERATION_PERIOD })
    }
}

/// All `2^n` patterns of length `n` in canonical order.
pub fn enumerate_patterns(n: u32) -> Result<Vec<SignPattern>> {
    Ok(patterns(n)?.collect())
}

/// Lazy form of [`enumerate_patterns`].
pub fn patterns(n: u32) -> Result<impl ExactSizeIterator<Item = SignPattern>> {
    check_enumeration_period(n)?;
    Ok((0..1usize << n).map(move |i| SignPattern::from_index(n, i as u64)))
}
