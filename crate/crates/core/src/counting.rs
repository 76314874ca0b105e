//! Counting patterns by minimal period.
//!
//! Every length-`n` pattern has a minimal period `d` dividing `n`, so
//! `sum_{d | n} N(d) = 2^n`. Möbius inversion gives `N(n) = sum_{d | n} mu(n/d) 2^d`.

use crate::exec::Execution;
use crate::pattern::{enumerate_patterns, SignPattern};
use crate::{Error, Result};

/// Largest period for which `N(n)` is computed exactly in 64-bit arithmetic.
pub const MAX_COUNT_PERIOD: u32 = 62;
/// Largest period for the enumeration oracle.
pub const MAX_BRUTE_FORCE_PERIOD: u32 = 20;

/// Divisors of `n` in ascending order. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The Möbius function, by trial division.
pub fn mobius(mut n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut result = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of length-`n` patterns whose minimal period is exactly `n`.
pub fn count_minimal_period(n: u32) -> Result<u64> {
    if !(1..=MAX_COUNT_PERIOD).contains(&n) {
        return Err(Error::PeriodTooLarge { n, max: MAX_COUNT_PERIOD });
    }
    let total: i64 =
        divisors(u64::from(n)).into_iter().map(|d| i64::from(mobius(u64::from(n) / d)) * (1i64 << d)).sum();
    Ok(u64::try_from(total).expect("N(n) is non-negative"))
}

/// Enumeration oracle for [`count_minimal_period`].
pub fn brute_force_count(n: u32) -> Result<u64> {
    check_brute_force(n)?;
    let all = enumerate_patterns(n)?;
    Ok(all.iter().filter(|p| p.minimal_period() == n as usize).count() as u64)
}

/// [`brute_force_count`] without materializing the pattern list.
pub fn brute_force_count_with(n: u32, exec: Execution) -> Result<u64> {
    check_brute_force(n)?;
    Ok(exec.count(0..1u64 << n, |i| SignPattern::from_index(n, i).minimal_period() == n as usize))
}

fn check_brute_force(n: u32) -> Result<()> {
    if (1..=MAX_BRUTE_FORCE_PERIOD).contains(&n) {
        Ok(())
    } else {
        Err(Error::PeriodTooLargeForBruteForce { n })
    }
}
