//! Sequential or data-parallel execution of sweeps over pattern indices.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on the
//! rayon global pool. Without it, `Parallel` silently runs sequentially.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when `Parallel` actually fans out in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `f` over `range`, preserving order.
    pub fn map<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => range.map(f).collect(),
            Execution::Parallel => par_map(range, f),
        }
    }

    /// Counts the indices in `range` satisfying `pred`.
    pub fn count<F>(self, range: Range<u64>, pred: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => range.filter(|&i| pred(i)).count() as u64,
            Execution::Parallel => par_count(range, pred),
        }
    }

    /// Largest value of `f` over `range`; `0.0` for an empty range. NaN propagates.
    pub fn max_f64<F>(self, range: Range<u64>, f: F) -> f64
    where
        F: Fn(u64) -> f64 + Sync + Send,
    {
        match self {
            Execution::Sequential => range.map(f).fold(0.0, nan_max),
            Execution::Parallel => par_max(range, f),
        }
    }
}

fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
fn par_count<F>(range: Range<u64>, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().filter(|&i| pred(i)).count() as u64
}

#[cfg(feature = "parallel")]
fn par_max<F>(range: Range<u64>, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).reduce(|| 0.0, nan_max)
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    range.map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_count<F>(range: Range<u64>, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    range.filter(|&i| pred(i)).count() as u64
}

#[cfg(not(feature = "parallel"))]
fn par_max<F>(range: Range<u64>, f: F) -> f64
where
    F: Fn(u64) -> f64 + Sync + Send,
{
    range.map(f).fold(0.0, nan_max)
}
