//! The quadratic map `P(x) = x^2 - 2` and its fixed points.
//!
//! With `x = 2*cos(theta)` the map doubles the angle, so `P^n(x) = 2*T_{2^n}(x/2)`.
//! Solving `cos(2^n * theta) = cos(theta)` gives the `2^n` fixed points of `P^n`:
//!
//! ```text
//! theta = 2*pi*l / (2^n - 1),  l = 0 .. 2^(n-1) - 1      (branch "minus")
//! theta = 2*pi*l / (2^n + 1),  l = 1 .. 2^(n-1)          (branch "plus")
//! ```
//!
//! [`bijection_check`] matches these, by exact `(branch, l)` label, against the closed
//! forms of all period-`n` sign patterns.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::closedform::{closed_form_of, ClosedForm};
use crate::exec::Execution;
use crate::pattern::SignPattern;
use crate::rational::ExactRational;
use crate::{Error, Result};

pub const MAX_CHEBYSHEV_DEGREE: u64 = 1 << 20;
pub const MAX_ITERATIONS: u32 = 40;
pub const MAX_FIXED_POINT_PERIOD: u32 = 20;
pub const MAX_CONJUGACY_PERIOD: u32 = 12;
pub const MAX_BIJECTION_PERIOD: u32 = 16;

/// Which denominator a fixed-point angle uses: `2^n - 1` or `2^n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Minus,
    Plus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Minus => "minus",
            Branch::Plus => "plus",
        }
    }

    pub fn denominator(self, n: u32) -> u64 {
        match self {
            Branch::Minus => (1u64 << n) - 1,
            Branch::Plus => (1u64 << n) + 1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `T_N(x) = cos(N * arccos(x))` on `[-1, 1]`.
pub fn cheb_t(degree: u64, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::ChebyshevDomain { x });
    }
    if degree > MAX_CHEBYSHEV_DEGREE {
        return Err(Error::DegreeTooLarge { degree });
    }
    Ok((degree as f64 * x.acos()).cos())
}

/// `T_N(x)` by the three-term recurrence `T_{k+1} = 2x T_k - T_{k-1}`.
/// Only accurate for modest `N`; used to cross-check [`cheb_t`].
pub fn cheb_t_recurrence(degree: u64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if degree == 0 {
        return prev;
    }
    for _ in 1..degree {
        (prev, cur) = (cur, 2.0 * x * cur - prev);
    }
    cur
}

pub fn p_map(x: f64) -> f64 {
    x * x - 2.0
}

/// `P^n(x)` for `x` in `[-2, 2]` and `1 <= n <= 40`.
pub fn p_iterate(x: f64, n: u32) -> Result<f64> {
    if !(-2.0..=2.0).contains(&x) {
        return Err(Error::ConjugacyDomain { x });
    }
    if !(1..=MAX_ITERATIONS).contains(&n) {
        return Err(Error::IterationCount { n, max: MAX_ITERATIONS });
    }
    Ok((0..n).fold(x, |y, _| p_map(y)))
}

/// `|P^n(x) - 2*T_{2^n}(x/2)|`.
pub fn conjugacy_check(n: u32, x: f64) -> Result<f64> {
    if !(-2.0..=2.0).contains(&x) {
        return Err(Error::ConjugacyDomain { x });
    }
    if !(1..=MAX_CONJUGACY_PERIOD).contains(&n) {
        return Err(Error::IterationCount { n, max: MAX_CONJUGACY_PERIOD });
    }
    let direct = p_iterate(x, n)?;
    let via_chebyshev = 2.0 * cheb_t(1u64 << n, x / 2.0)?;
    Ok((direct - via_chebyshev).abs())
}

/// A fixed point `2*cos(2*pi*ell / (2^n -+ 1))` of `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPoint {
    pub branch: Branch,
    pub ell: u64,
    pub n: u32,
}

impl FixedPoint {
    pub fn denominator(&self) -> u64 {
        self.branch.denominator(self.n)
    }

    /// `theta / pi`, reduced.
    pub fn angle(&self) -> ExactRational {
        ExactRational::new(2 * i128::from(self.ell), i128::from(self.denominator()))
    }

    /// `theta` as unreduced text, e.g. `2*pi*3/7`.
    pub fn angle_text(&self) -> String {
        format!("2*pi*{}/{}", self.ell, self.denominator())
    }

    pub fn value(&self) -> f64 {
        let turns = (2 * u128::from(self.ell)) as f64 / self.denominator() as f64;
        2.0 * (turns * std::f64::consts::PI).cos()
    }

    /// `|P^n(x) - x|` at this point.
    pub fn residual(&self) -> f64 {
        let x = self.value();
        let image = p_iterate(x, self.n).expect("fixed point periods never exceed the iteration cap");
        (image - x).abs()
    }

    pub fn label(&self) -> FixedPointLabel {
        FixedPointLabel { branch: self.branch, ell: self.ell }
    }
}

/// The exact identity of a fixed point within a given period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedPointLabel {
    pub branch: Branch,
    pub ell: u64,
}

impl fmt::Display for FixedPointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.branch, self.ell)
    }
}

impl From<&ClosedForm> for FixedPointLabel {
    fn from(cf: &ClosedForm) -> Self {
        FixedPointLabel { branch: cf.branch(), ell: cf.ell }
    }
}

/// All `2^n` fixed points of `P^n`: the minus branch in increasing `ell`, then the
/// plus branch.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointSet {
    pub n: u32,
    pub points: Vec<FixedPoint>,
}

impl Serialize for FixedPointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Point {
            branch: Branch,
            ell: u64,
            value: f64,
        }
        let points: Vec<Point> =
            self.points.iter().map(|p| Point { branch: p.branch, ell: p.ell, value: p.value() }).collect();
        let mut s = serializer.serialize_struct("FixedPointSet", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("points", &points)?;
        s.end()
    }
}

pub fn fixed_points(n: u32) -> Result<FixedPointSet> {
    if !(1..=MAX_FIXED_POINT_PERIOD).contains(&n) {
        return Err(Error::TooManyFixedPoints { n });
    }
    let half = 1u64 << (n - 1);
    let minus = (0..half).map(|ell| FixedPoint { branch: Branch::Minus, ell, n });
    let plus = (1..=half).map(|ell| FixedPoint { branch: Branch::Plus, ell, n });
    Ok(FixedPointSet { n, points: minus.chain(plus).collect() })
}

/// Outcome of matching pattern limits to fixed points for one period.
#[derive(Debug, Clone, PartialEq)]
pub struct BijectionReport {
    pub n: u32,
    /// Each pattern in canonical order with the label its closed form lands on.
    pub assignments: Vec<(SignPattern, FixedPointLabel)>,
    /// Fixed points no pattern reached.
    pub unclaimed: Vec<FixedPointLabel>,
    /// Pattern labels that are not fixed points, or that a second pattern also reached.
    pub surplus: Vec<FixedPointLabel>,
}

impl BijectionReport {
    pub fn is_bijection(&self) -> bool {
        self.unclaimed.is_empty() && self.surplus.is_empty()
    }

    pub fn label_of(&self, pattern: &str) -> Option<FixedPointLabel> {
        self.assignments.iter().find(|(p, _)| p.to_string() == pattern).map(|(_, l)| *l)
    }
}

/// True iff the `2^n` closed-form labels are exactly the `2^n` fixed-point labels.
pub fn bijection_check(n: u32) -> Result<BijectionReport> {
    bijection_check_with(n, Execution::default(), closed_form_of)
}

/// [`bijection_check`] with an explicit executor and closed-form routine.
pub fn bijection_check_with<F>(n: u32, exec: Execution, closed_form: F) -> Result<BijectionReport>
where
    F: Fn(&SignPattern) -> Result<ClosedForm> + Sync + Send,
{
    if !(1..=MAX_BIJECTION_PERIOD).contains(&n) {
        return Err(Error::PeriodTooLargeForCheck { n });
    }
    let assignments = exec
        .map(0..1u64 << n, |i| {
            let p = SignPattern::from_index(n, i);
            closed_form(&p).map(|cf| (p, FixedPointLabel::from(&cf)))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut hits: BTreeMap<FixedPointLabel, usize> = BTreeMap::new();
    for (_, label) in &assignments {
        *hits.entry(*label).or_default() += 1;
    }
    let mut unclaimed = Vec::new();
    let mut surplus = Vec::new();
    for point in fixed_points(n)?.points {
        match hits.remove(&point.label()) {
            None => unclaimed.push(point.label()),
            Some(k) => surplus.extend(std::iter::repeat_n(point.label(), k - 1)),
        }
    }
    // whatever is left never was a fixed point of P^n
    for (label, k) in hits {
        surplus.extend(std::iter::repeat_n(label, k));
    }
    Ok(BijectionReport { n, assignments, unclaimed, surplus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::patterns;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn chebyshev_examples() {
        assert_eq!(cheb_t(0, 0.3).unwrap(), 1.0);
        assert!((cheb_t(1, 0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!((cheb_t(2, 0.3).unwrap() + 0.82).abs() < 1e-15);
        assert_eq!(cheb_t(3, 1.5), Err(Error::ChebyshevDomain { x: 1.5 }));
        assert_eq!(cheb_t(3, 1.5).unwrap_err().to_string(), "argument outside [-1,1]: 1.5");
        assert_eq!(cheb_t((1 << 20) + 1, 0.0), Err(Error::DegreeTooLarge { degree: (1 << 20) + 1 }));
        assert_eq!(cheb_t_recurrence(2, 0.3), 2.0 * 0.09 - 1.0);
    }

    #[test]
    fn trig_form_matches_recurrence() {
        for degree in 0..=64u64 {
            for i in 0..=200 {
                let x = -1.0 + i as f64 / 100.0;
                let a = cheb_t(degree, x).unwrap();
                let b = cheb_t_recurrence(degree, x);
                assert!((a - b).abs() < 1e-10, "T_{degree}({x}): {a} vs {b}");
                assert!(a.abs() <= 1.0);
            }
        }
    }

    #[test]
    fn quadratic_map_examples() {
        assert_eq!(p_map(2.0), 2.0);
        assert_eq!(p_map(-1.0), -1.0);
        let x = 2.0 * (PI / 5.0).cos();
        assert!((p_map(x) - 2.0 * (2.0 * PI / 5.0).cos()).abs() < 1e-14);
    }

    #[test]
    fn iterate_examples() {
        for n in 1..=40 {
            assert_eq!(p_iterate(2.0, n).unwrap(), 2.0);
        }
        assert_eq!(p_iterate(0.0, 2).unwrap(), 2.0);
        let x = 2.0 * (2.0 * PI / 5.0).cos();
        assert!((p_iterate(x, 2).unwrap() - x).abs() < 1e-12);
        assert_eq!(p_iterate(2.5, 1), Err(Error::ConjugacyDomain { x: 2.5 }));
        assert!(p_iterate(f64::NAN, 1).is_err());
        assert_eq!(p_iterate(1.0, 41), Err(Error::IterationCount { n: 41, max: 40 }));
        assert_eq!(p_iterate(1.0, 0), Err(Error::IterationCount { n: 0, max: 40 }));
    }

    #[test]
    fn semiconjugacy_on_random_angles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let theta = rng.gen_range(0.0..=PI);
            let err = (p_map(2.0 * theta.cos()) - 2.0 * (2.0 * theta).cos()).abs();
            assert!(err < 1e-13, "theta={theta}: {err}");
        }
    }

    #[test]
    fn conjugacy_examples() {
        assert_eq!(conjugacy_check(1, 0.0).unwrap(), 0.0);
        assert!(conjugacy_check(3, 2.0 * 0.7f64.cos()).unwrap() < 1e-8);
        assert!(conjugacy_check(2, 2.0).unwrap() < 1e-12);
        assert_eq!(conjugacy_check(2, -2.1), Err(Error::ConjugacyDomain { x: -2.1 }));
        assert!(conjugacy_check(13, 0.0).is_err());
    }

    #[test]
    fn conjugacy_on_grid() {
        for n in 1..=8 {
            for i in 0..=1000 {
                let x = -2.0 + 4.0 * i as f64 / 1000.0;
                assert!(conjugacy_check(n, x).unwrap() < 1e-8, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let one = fixed_points(1).unwrap();
        let values: Vec<f64> = one.points.iter().map(FixedPoint::value).collect();
        assert_eq!(values[0], 2.0);
        assert!((values[1] + 1.0).abs() < 1e-15);

        let two = fixed_points(2).unwrap();
        assert_eq!(two.points.len(), 4);
        let angles: Vec<String> = two.points.iter().map(|p| p.angle().pi_multiple()).collect();
        assert_eq!(angles, ["0", "2pi/3", "2pi/5", "4pi/5"]);

        assert_eq!(fixed_points(0), Err(Error::TooManyFixedPoints { n: 0 }));
        assert_eq!(fixed_points(21), Err(Error::TooManyFixedPoints { n: 21 }));
    }

    #[test]
    fn fixed_points_are_fixed() {
        for n in 1..=12 {
            let set = fixed_points(n).unwrap();
            assert_eq!(set.points.len(), 1 << n);
            let minus = set.points.iter().filter(|p| p.branch == Branch::Minus).count();
            assert_eq!(minus, 1 << (n - 1));
            for p in &set.points {
                assert!(p.residual() < 1e-9, "n={n} {}: {}", p.label(), p.residual());
            }
        }
    }

    #[test]
    fn fixed_point_json_shape() {
        let json = serde_json::to_value(fixed_points(1).unwrap()).unwrap();
        assert_eq!(json["n"], 1);
        assert_eq!(json["points"][0]["branch"], "minus");
        assert_eq!(json["points"][0]["ell"], 0);
        assert_eq!(json["points"][0]["value"], 2.0);
        assert_eq!(json["points"][1]["branch"], "plus");
        assert_eq!(json["points"][1]["ell"], 1);
    }

    #[test]
    fn bijection_examples() {
        let label = |branch, ell| FixedPointLabel { branch, ell };
        let one = bijection_check(1).unwrap();
        assert!(one.is_bijection());
        assert_eq!(one.label_of("+"), Some(label(Branch::Minus, 0)));
        assert_eq!(one.label_of("-"), Some(label(Branch::Plus, 1)));

        let two = bijection_check(2).unwrap();
        assert!(two.is_bijection());
        assert_eq!(two.label_of("++"), Some(label(Branch::Minus, 0)));
        assert_eq!(two.label_of("--"), Some(label(Branch::Minus, 1)));
        assert_eq!(two.label_of("+-"), Some(label(Branch::Plus, 1)));
        assert_eq!(two.label_of("-+"), Some(label(Branch::Plus, 2)));

        let three = bijection_check(3).unwrap();
        assert!(three.is_bijection());
        assert_eq!(three.assignments.len(), 8);

        assert_eq!(bijection_check(17).unwrap_err(), Error::PeriodTooLargeForCheck { n: 17 });
    }

    #[test]
    fn bijection_holds_through_twelve() {
        for n in 1..=12 {
            for exec in [Execution::Sequential, Execution::Parallel] {
                let report = bijection_check_with(n, exec, closed_form_of).unwrap();
                assert!(report.is_bijection(), "n={n}: {report:?}");
            }
        }
    }

    #[test]
    fn corrupted_closed_form_is_caught() {
        let corrupt = |p: &SignPattern| {
            let mut cf = closed_form_of(p)?;
            if p.to_string() == "+-+" {
                cf.ell += 1;
            }
            Ok(cf)
        };
        let report = bijection_check_with(3, Execution::Sequential, corrupt).unwrap();
        assert!(!report.is_bijection());
        // "+-+" moves from (plus, 2) onto (plus, 3), which "---" already holds
        assert_eq!(report.unclaimed, [FixedPointLabel { branch: Branch::Plus, ell: 2 }]);
        assert_eq!(report.surplus.len(), 1);
    }

    #[test]
    fn limits_are_fixed_points_of_their_minimal_period() {
        for n in 1..=10 {
            for p in patterns(n).unwrap() {
                let d = p.minimal_period() as u32;
                let x = closed_form_of(&p).unwrap().value();
                let residual = (p_iterate(x, d).unwrap() - x).abs();
                assert!(residual < 1e-9, "{p}: {residual}");
            }
        }
    }
}
