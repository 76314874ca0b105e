//! Direct evaluation of truncated radicals and certified numeric limits.
//!
//! The depth-`m` truncation equals `2*sin(alpha_m * pi/4)` where `alpha_m` is the
//! `m`-term partial sum of `P_0 + P_1/2 + P_2/4 + ...`. The tail of that series is at
//! most `2^-(m-1)`, and `2*sin(t*pi/4)` is `pi/2`-Lipschitz in `t`, so the truncation is
//! within `(pi/2) * 2^-(m-1)` of the limit. [`error_bound`] reports twice that.

use std::f64::consts::PI;

use serde::Serialize;

use crate::pattern::{Sign, SignPattern};
use crate::{Error, Result};

/// Deepest truncation [`limit_numeric`] will use.
pub const MAX_DEPTH: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationResult {
    pub depth: u64,
    pub value: f64,
    pub error_bound: f64,
}

/// `pi * 2^-(m-1)`.
pub fn error_bound(m: u64) -> f64 {
    let exp = -(m as i32 - 1);
    PI * 2f64.powi(exp)
}

/// `a_0*sqrt(2 + a_1*sqrt(2 + ... + a_{m-1}*sqrt(2)))`, signs taken from the periodic
/// extension of `p`. Evaluated innermost first.
pub fn finite_radical(p: &SignPattern, m: u64) -> Result<f64> {
    finite_radical_traced(p, m, |_| {})
}

/// Same as [`finite_radical`], calling `on_radicand` with every radicand before its
/// square root is taken.
pub fn finite_radical_traced(p: &SignPattern, m: u64, mut on_radicand: impl FnMut(f64)) -> Result<f64> {
    if m == 0 {
        return Err(Error::ZeroDepth);
    }
    let n = p.len() as u64;
    on_radicand(2.0);
    let mut t = std::f64::consts::SQRT_2;
    for k in (1..m).rev() {
        let a = p.sign_at((k % n) as usize);
        let radicand = 2.0 + a.as_f64() * t;
        on_radicand(radicand);
        // t <= 2 always, so the radicand is non-negative up to rounding of sqrt(4)
        t = radicand.max(0.0).sqrt();
    }
    Ok(p.sign_at(0).as_f64() * t)
}

/// `2*sin(alpha_m * pi/4)` with `alpha_m = sum_{k<m} (a_0*...*a_k) / 2^k`.
pub fn lemma_lhs(p: &SignPattern, m: u64) -> Result<f64> {
    Ok(2.0 * (partial_alpha(p, m)? * PI / 4.0).sin())
}

/// The `m`-term partial sum of the alpha series.
pub fn partial_alpha(p: &SignPattern, m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut prefix = Sign::Plus;
    let mut weight = 1.0;
    let mut sum = 0.0;
    for a in p.extended().take(m as usize) {
        prefix = prefix * a;
        sum += prefix.as_f64() * weight;
        weight *= 0.5;
    }
    Ok(sum)
}

/// Smallest depth whose certified bound is within `tol`.
pub fn depth_for(tol: f64) -> Result<u64> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidTolerance { tol });
    }
    let mut m = 1;
    while error_bound(m) > tol {
        m += 1;
        if m > MAX_DEPTH {
            return Err(Error::ToleranceTooSmall { tol });
        }
    }
    Ok(m)
}

/// Truncates at the smallest depth whose certified bound is `<= tol`.
pub fn limit_numeric(p: &SignPattern, tol: f64) -> Result<TruncationResult> {
    let depth = depth_for(tol)?;
    Ok(TruncationResult { depth, value: finite_radical(p, depth)?, error_bound: error_bound(depth) })
}
