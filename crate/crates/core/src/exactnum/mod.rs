//! Exact scalar arithmetic: rationals, dense polynomials, rational functions
//! of `z` and truncated Laurent series at `z = 0`.
//!
//! Nothing in the crate uses floating point. Every value here is immutable
//! once built and can be shared freely across threads.

mod laurent;
mod poly;
mod ratfunc;
mod rational;

pub use laurent::{laurent_expand, LaurentSeries};
pub use poly::{Poly, PolyDisplay};
pub use ratfunc::RationalFunction;
pub use rational::{rat_arith, ArithOp, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error(
        "coefficient of z^{requested} requested but the series is only known through z^{order}"
    )]
    BeyondOrder { requested: i64, order: i64 },
}

/// Binomial coefficient `C(n, k)` as an exact rational (zero outside `0..=n`).
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: u64) -> Rational {
    Rational::from_integer((1..=n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i))
}
