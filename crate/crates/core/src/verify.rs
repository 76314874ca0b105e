//! Verification sweeps over every pattern of a given period.
//!
//! For each period `n` five independent checks run:
//!
//! | check | compares |
//! |---|---|
//! | `lemma_identity` | nested radical vs. sine of the partial alpha sum, depths 1..=24 |
//! | `closed_form_vs_numeric` | exact closed form vs. certified truncation |
//! | `counting` | Möbius formula vs. enumeration, and the divisor sum `2^n` |
//! | `conjugacy` | `P^n(x)` vs. `2*T_{2^n}(x/2)` on a 1001-point grid |
//! | `bijection_check` | closed-form labels vs. fixed points of `P^n` |

use std::fmt;

use crate::chebyshev::{bijection_check_with, conjugacy_check};
use crate::closedform::{closed_form_of, ClosedForm};
use crate::counting::{brute_force_count_with, count_minimal_period, divisors};
use crate::exec::Execution;
use crate::numeric::{finite_radical, lemma_lhs, limit_numeric};
use crate::pattern::SignPattern;
use crate::{Error, Result};

pub const MAX_VERIFY_PERIOD: u32 = 12;

pub const LEMMA_TOLERANCE: f64 = 1e-12;
pub const LEMMA_MAX_DEPTH: u64 = 24;
pub const ORACLE_TOLERANCE: f64 = 1e-10;
/// Certified accuracy requested from the numeric limit in the oracle check.
pub const ORACLE_NUMERIC_TOLERANCE: f64 = 1e-12;
pub const CONJUGACY_GRID_POINTS: u64 = 1001;

/// Observed worst case at `n = 12` is about `1.2e-11`.
pub const CONJUGACY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    LemmaIdentity,
    ClosedFormVsNumeric,
    Counting,
    Conjugacy,
    Bijection,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::LemmaIdentity,
        CheckKind::ClosedFormVsNumeric,
        CheckKind::Counting,
        CheckKind::Conjugacy,
        CheckKind::Bijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::LemmaIdentity => "lemma_identity",
            CheckKind::ClosedFormVsNumeric => "closed_form_vs_numeric",
            CheckKind::Counting => "counting",
            CheckKind::Conjugacy => "conjugacy",
            CheckKind::Bijection => "bijection_check",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub n: u32,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} n={} {}: {}", self.n, self.kind, self.detail)
    }
}

/// Runs the checks with a pluggable closed-form routine, so that a deliberately
/// broken one can be shown to be caught.
pub struct Verifier<F> {
    exec: Execution,
    closed_form: F,
}

impl Default for Verifier<fn(&SignPattern) -> Result<ClosedForm>> {
    fn default() -> Self {
        Verifier { exec: Execution::default(), closed_form: closed_form_of }
    }
}

impl<F> Verifier<F>
where
    F: Fn(&SignPattern) -> Result<ClosedForm> + Sync + Send,
{
    pub fn new(exec: Execution, closed_form: F) -> Self {
        Verifier { exec, closed_form }
    }

    /// All checks for periods `1..=n_max`, period-major.
    pub fn run(&self, n_max: u32) -> Result<Vec<CheckOutcome>> {
        if !(1..=MAX_VERIFY_PERIOD).contains(&n_max) {
            return Err(Error::PeriodTooLarge { n: n_max, max: MAX_VERIFY_PERIOD });
        }
        let mut out = Vec::with_capacity(5 * n_max as usize);
        for n in 1..=n_max {
            for kind in CheckKind::ALL {
                out.push(self.check(n, kind)?);
            }
        }
        Ok(out)
    }

    pub fn check(&self, n: u32, kind: CheckKind) -> Result<CheckOutcome> {
        let (passed, detail) = match kind {
            CheckKind::LemmaIdentity => self.lemma(n)?,
            CheckKind::ClosedFormVsNumeric => self.oracle(n)?,
            CheckKind::Counting => self.counting(n)?,
            CheckKind::Conjugacy => self.conjugacy(n)?,
            CheckKind::Bijection => self.bijection(n)?,
        };
        Ok(CheckOutcome { n, kind, passed, detail })
    }

    fn lemma(&self, n: u32) -> Result<(bool, String)> {
        let worst = self.exec.max_f64(0..1u64 << n, |i| {
            let p = SignPattern::from_index(n, i);
            (1..=LEMMA_MAX_DEPTH)
                .map(|m| (finite_radical(&p, m).unwrap() - lemma_lhs(&p, m).unwrap()).abs())
                .fold(0.0, f64::max)
        });
        Ok((
            worst < LEMMA_TOLERANCE,
            format!(
                "max |radical - sine form| = {worst:.3e} over depths 1..={LEMMA_MAX_DEPTH} (tol {LEMMA_TOLERANCE:e})"
            ),
        ))
    }

    fn oracle(&self, n: u32) -> Result<(bool, String)> {
        let diffs = self.exec.map(0..1u64 << n, |i| {
            let p = SignPattern::from_index(n, i);
            let exact = (self.closed_form)(&p)?.value();
            let numeric = limit_numeric(&p, ORACLE_NUMERIC_TOLERANCE)?.value;
            Ok::<_, Error>((exact - numeric).abs())
        });
        let mut worst = 0.0f64;
        for d in diffs {
            let d = d?;
            worst = if d.is_nan() { f64::NAN } else { worst.max(d) };
        }
        Ok((worst < ORACLE_TOLERANCE, format!("max |closed form - numeric| = {worst:.3e} (tol {ORACLE_TOLERANCE:e})")))
    }

    fn counting(&self, n: u32) -> Result<(bool, String)> {
        let formula = count_minimal_period(n)?;
        let brute = brute_force_count_with(n, self.exec)?;
        let divisor_sum: u64 =
            divisors(u64::from(n)).into_iter().map(|d| count_minimal_period(d as u32)).sum::<Result<u64>>()?;
        let passed = formula == brute && divisor_sum == 1u64 << n;
        Ok((
            passed,
            format!("N({n}) formula={formula} brute={brute}, sum over divisors={divisor_sum} (2^{n}={})", 1u64 << n),
        ))
    }

    fn conjugacy(&self, n: u32) -> Result<(bool, String)> {
        let steps = CONJUGACY_GRID_POINTS - 1;
        let worst = self.exec.max_f64(0..CONJUGACY_GRID_POINTS, |i| {
            let x = -2.0 + 4.0 * i as f64 / steps as f64;
            conjugacy_check(n, x).unwrap()
        });
        Ok((
            worst < CONJUGACY_TOLERANCE,
            format!(
                "max |P^n(x) - 2T(x/2)| = {worst:.3e} on {CONJUGACY_GRID_POINTS} points (tol {CONJUGACY_TOLERANCE:e})"
            ),
        ))
    }

    fn bijection(&self, n: u32) -> Result<(bool, String)> {
        let report = bijection_check_with(n, self.exec, &self.closed_form)?;
        let detail = if report.is_bijection() {
            format!(
                "{} patterns matched {} fixed points one-to-one",
                report.assignments.len(),
                report.assignments.len()
            )
        } else {
            let list = |labels: &[crate::chebyshev::FixedPointLabel]| {
                labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            };
            format!(
                "unclaimed fixed points: [{}]; surplus labels: [{}]",
                list(&report.unclaimed),
                list(&report.surplus)
            )
        };
        Ok((report.is_bijection(), detail))
    }
}

/// [`Verifier::run`] with the real closed form.
pub fn verify(n_max: u32) -> Result<Vec<CheckOutcome>> {
    Verifier::default().run(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let one = verify(1).unwrap();
        assert_eq!(one.len(), 5);
        assert!(one.iter().all(|c| c.passed), "{one:#?}");
        let four = verify(4).unwrap();
        assert_eq!(four.len(), 20);
        assert!(four.iter().all(|c| c.passed), "{four:#?}");
    }

    #[test]
    fn range_is_enforced() {
        assert!(verify(0).is_err());
        assert!(verify(13).is_err());
    }

    #[test]
    fn fault_injection_fails_bijection() {
        let corrupt = |p: &SignPattern| {
            let mut cf = closed_form_of(p)?;
            if p.len() == 2 && p.to_string() == "+-" {
                cf.ell = 2;
            }
            Ok(cf)
        };
        let outcomes = Verifier::new(Execution::Sequential, corrupt).run(3).unwrap();
        let failed: Vec<_> = outcomes.iter().filter(|c| !c.passed).collect();
        assert!(failed.iter().any(|c| c.n == 2 && c.kind == CheckKind::Bijection), "{failed:#?}");
        assert!(failed.iter().all(|c| c.n == 2));
        let line = failed.iter().find(|c| c.kind == CheckKind::Bijection).unwrap().to_string();
        assert!(line.starts_with("FAIL n=2 bijection_check"), "{line}");
        assert!(line.contains("(plus, 1)"), "{line}");
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let seq = Verifier::new(Execution::Sequential, closed_form_of).run(6).unwrap();
        let par = Verifier::new(Execution::Parallel, closed_form_of).run(6).unwrap();
        assert_eq!(seq, par);
    }
}
