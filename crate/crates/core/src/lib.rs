//! Periodic continued radicals `a0*sqrt(2 + a1*sqrt(2 + a2*sqrt(2 + ...)))` with
//! signs `a_k` in `{-1, +1}` repeating with some period `n`.
//!
//! Every such radical converges to `2*cos(2*pi*l / (2^n - P))`, where `P` is the
//! product of the signs in one period and `l` is an integer read off the binary
//! expansion of the prefix products. The crate computes `l` exactly, checks it
//! against direct numerical truncation, and shows that the `2^n` limits of a given
//! period are exactly the fixed points of the `n`-fold iterate of `x^2 - 2`.
//!
//! Modules:
//! - [`pattern`]: sign patterns, parity, prefix products, minimal period.
//! - [`counting`]: number of patterns with a given minimal period.
//! - [`closedform`]: exact limit angles in integer arithmetic.
//! - [`numeric`]: truncated radicals and certified numeric limits.
//! - [`chebyshev`]: the map `x^2 - 2`, Chebyshev polynomials, fixed points.
//! - [`verify`]: the verification sweeps that tie everything together.

pub mod chebyshev;
pub mod closedform;
pub mod counting;
mod error;
pub mod exec;
pub mod numeric;
pub mod pattern;
pub mod rational;
pub mod verify;

pub use chebyshev::{Branch, FixedPoint, FixedPointSet};
pub use closedform::ClosedForm;
pub use error::{Error, Result};
pub use exec::Execution;
pub use numeric::TruncationResult;
pub use pattern::{PrefixProducts, Sign, SignPattern};
pub use rational::ExactRational;
