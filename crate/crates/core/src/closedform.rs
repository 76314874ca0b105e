//! Exact limits of periodic radicals.
//!
//! Write `P_m` for the prefix products of one period and `P = P_{n-1}` for the parity.
//! The radical converges to `2*sin(alpha*pi/4)` where
//!
//! ```text
//! alpha = 2*S / (2^n - P),   S = sum_{m<n} P_m * 2^(n-1-m)
//! ```
//!
//! Equivalently `x = 2*cos(2*pi*l / (2^n - P))` with `2l = 2^n - P - 1 - 2Q`, where `Q`
//! is the integer with binary digits `Q_m = (1 + P_m)/2` for `m = 0..=n-2` (most
//! significant first). Everything here except [`ClosedForm::value`] is integer arithmetic.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chebyshev::Branch;
use crate::pattern::{Sign, SignPattern};
use crate::rational::ExactRational;
use crate::{Error, Result};

/// Largest period handled by the exact routines.
pub const MAX_EXACT_PERIOD: usize = 62;

/// The limit `2*cos(2*pi*ell / denominator)` of a period-`n` radical, with
/// `denominator = 2^n - parity`. The fraction is deliberately left unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    pub n: u32,
    pub parity: Sign,
    pub ell: u64,
    pub denominator: u64,
}

impl ClosedForm {
    /// Checks the parity-dependent range of `ell` and the denominator.
    pub fn is_valid(&self) -> bool {
        if self.n == 0 || self.n as usize > MAX_EXACT_PERIOD {
            return false;
        }
        let pow = 1u64 << self.n;
        let half = pow / 2;
        match self.parity {
            Sign::Plus => self.denominator == pow - 1 && self.ell < half,
            Sign::Minus => self.denominator == pow + 1 && (1..=half).contains(&self.ell),
        }
    }

    /// `minus` for denominator `2^n - 1`, `plus` for `2^n + 1`.
    pub fn branch(&self) -> Branch {
        match self.parity {
            Sign::Plus => Branch::Minus,
            Sign::Minus => Branch::Plus,
        }
    }

    /// The cosine argument `2*ell/denominator` as a reduced multiple of pi.
    pub fn angle(&self) -> ExactRational {
        ExactRational::new(2 * i128::from(self.ell), i128::from(self.denominator))
    }

    /// `cos(2*ell*pi/denominator)` without reducing the fraction.
    pub fn cos_form(&self) -> String {
        if self.ell == 0 {
            "cos(0)".to_string()
        } else {
            format!("cos({}pi/{})", 2 * u128::from(self.ell), self.denominator)
        }
    }

    /// `2*cos(2*pi*ell/denominator)`.
    pub fn value(&self) -> f64 {
        let turns = (2 * u128::from(self.ell)) as f64 / self.denominator as f64;
        2.0 * (turns * std::f64::consts::PI).cos()
    }
}

impl Serialize for ClosedForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ClosedForm", 6)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("parity", &self.parity)?;
        s.serialize_field("ell", &self.ell)?;
        s.serialize_field("denominator", &self.denominator)?;
        s.serialize_field("value", &self.value())?;
        s.serialize_field("angle", &format!("2*pi*{}/{}", self.ell, self.denominator))?;
        s.end()
    }
}

fn check_exact(p: &SignPattern) -> Result<()> {
    if p.len() > MAX_EXACT_PERIOD {
        Err(Error::PeriodTooLargeForExact { n: p.len() })
    } else {
        Ok(())
    }
}

/// `sum_{m<n} P_m * 2^(n-1-m)`, the prefix products read as a signed binary number.
fn signed_prefix_sum(p: &SignPattern) -> i128 {
    p.prefix_products().values().iter().fold(0i128, |acc, s| 2 * acc + i128::from(s.value()))
}

/// `2^n - P`.
fn angle_denominator(p: &SignPattern) -> i128 {
    (1i128 << p.len()) - i128::from(p.parity().value())
}

/// The limit of the series `P_0 + P_1/2 + P_2/4 + ...` in lowest terms.
pub fn alpha_exact(p: &SignPattern) -> Result<ExactRational> {
    check_exact(p)?;
    Ok(ExactRational::new(2 * signed_prefix_sum(p), angle_denominator(p)))
}

/// `beta = 1 - alpha/2`, so that the limit is `2*cos(beta*pi/2)`.
pub fn beta_of(p: &SignPattern) -> Result<ExactRational> {
    check_exact(p)?;
    let den = angle_denominator(p);
    Ok(ExactRational::new(den - signed_prefix_sum(p), den))
}

/// The integer whose binary digits are `Q_0 Q_1 ... Q_{n-2}`, `Q_m = (1 + P_m)/2`.
/// Zero for `n = 1`.
pub fn q_digits(p: &SignPattern) -> Result<u64> {
    check_exact(p)?;
    let prefix = p.prefix_products();
    let digits = &prefix.values()[..p.len() - 1];
    Ok(digits.iter().fold(0u64, |acc, s| 2 * acc + u64::from(s.is_plus())))
}

pub fn closed_form_of(p: &SignPattern) -> Result<ClosedForm> {
    let q = q_digits(p)?;
    let n = p.len() as u32;
    let parity = p.parity();
    let pow = 1u64 << n;
    let denominator = match parity {
        Sign::Plus => pow - 1,
        Sign::Minus => pow + 1,
    };
    // 2^n - P - 1 is even for both parities
    let twice_ell = denominator - 1 - 2 * q;
    debug_assert_eq!(twice_ell % 2, 0);
    Ok(ClosedForm { n, parity, ell: twice_ell / 2, denominator })
}

pub fn value_of(cf: &ClosedForm) -> f64 {
    cf.value()
}

/// The sine argument `alpha/4` as a reduced multiple of pi, so that the limit is
/// `2*sin(sine_angle * pi)`.
pub fn sine_angle(p: &SignPattern) -> Result<ExactRational> {
    let alpha = alpha_exact(p)?;
    Ok(ExactRational::new(alpha.numer(), 4 * alpha.denom()))
}

/// `sin(...)` text of the sine argument, e.g. `sin(-13pi/30)`.
pub fn sin_form(p: &SignPattern) -> Result<String> {
    Ok(format!("sin({})", sine_angle(p)?.pi_multiple()))
}
