//! Bernoulli numbers and polynomials, falling factorials, interpolated power
//! sums, integer compositions and (quasi-)shuffle enumeration.

use std::sync::OnceLock;

use parking_lot::RwLock;
use thiserror::Error;

use crate::exactnum::{binomial, Poly, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("[a]_(-1) = 1/(a+1) has a pole at a = -1")]
    Pole,
    #[error("falling factorial order must be >= -1, got {0}")]
    BadOrder(i64),
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Bernoulli number `B_k` with `B_1 = -1/2` (generating series `t/(e^t - 1)`).
///
/// Values are memoized; the table only grows, under a single writer.
pub fn bernoulli(k: usize) -> Rational {
    if let Some(b) = bernoulli_table().read().get(k) {
        return b.clone();
    }
    let mut table = bernoulli_table().write();
    while table.len() <= k {
        let n = table.len();
        // sum_{i<n} C(n+1, i) B_i + (n+1) B_n = 0
        let n1 = n as i64 + 1;
        let s: Rational = table
            .iter()
            .enumerate()
            .map(|(i, b)| binomial(n1, i as i64) * b)
            .sum();
        table.push(-s / Rational::from(n1));
    }
    table[k].clone()
}

/// `B_k(x) = sum_i C(k, i) B_{k-i} x^i`.
pub fn bernoulli_poly(k: usize, x: &Rational) -> Rational {
    bernoulli_polynomial(k).eval(x)
}

/// `B_k(x)` as a polynomial in `x`.
pub fn bernoulli_polynomial(k: usize) -> Poly {
    Poly::new(
        (0..=k)
            .map(|i| binomial(k as i64, i as i64) * bernoulli(k - i))
            .collect(),
    )
}

/// `[a]_m = a (a-1) ... (a-m+1)`, with `[a]_0 = 1` and `[a]_{-1} = 1/(a+1)`.
pub fn falling_factorial(a: &Rational, m: i64) -> Result<Rational, CombinatError> {
    match m {
        -1 => {
            let d = a + Rational::one();
            d.recip().map_err(|_| CombinatError::Pole)
        }
        m if m < -1 => Err(CombinatError::BadOrder(m)),
        m => Ok((0..m).map(|i| a - Rational::from(i)).product()),
    }
}

/// `[b - c z]_m` as a rational function of `z`. For `m = -1` this is
/// `1/(b + 1 - c z)`, otherwise a polynomial of degree `m`.
pub fn falling_factorial_affine(
    b: i64,
    c: &Rational,
    m: i64,
) -> Result<RationalFunction, CombinatError> {
    match m {
        -1 => {
            RationalFunction::inv_linear(Rational::from(b + 1), -c).map_err(|_| CombinatError::Pole)
        }
        m if m < -1 => Err(CombinatError::BadOrder(m)),
        m => Ok(RationalFunction::from_poly(
            (0..m).fold(Poly::one(), |acc, i| {
                &acc * &Poly::linear(Rational::from(b - i), -c)
            }),
        )),
    }
}

/// Interpolated power sum `(B_{b+1}(eta + v + 1) - B_{b+1}(1 + v)) / (b + 1)`,
/// which equals `sum_{n=1}^{eta} (n + v)^b` at integers `eta >= 0`.
pub fn faulhaber_interp(b: usize, v: &Rational, eta: &Rational) -> Rational {
    let one = Rational::one();
    let upper = bernoulli_poly(b + 1, &(eta + v + &one));
    let lower = bernoulli_poly(b + 1, &(v + &one));
    (upper - lower) / Rational::from(b as i64 + 1)
}

/// An ordered tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        (!parts.is_empty() && parts.iter().all(|&p| p > 0)).then_some(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Consecutive index ranges, one per part.
    pub fn packets(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.parts.iter().scan(0, |start, &p| {
            let r = *start..*start + p;
            *start += p;
            Some(r)
        })
    }
}

/// All `2^(n-1)` compositions of `n >= 1`, in lexicographic order of parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n.saturating_sub(1).min(30));
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// A `(k, l)`-quasi-shuffle: a surjection `pi` from `{0..k+l}` onto
/// `{0..target_size}` increasing on the first `k` and on the last `l`
/// positions. Targets with two preimages are merges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiShuffle {
    pub target_size: usize,
    pub assignment: Vec<usize>,
}

impl QuasiShuffle {
    /// Number of merged pairs, `k + l - target_size`.
    pub fn merge_count(&self) -> usize {
        self.assignment.len() - self.target_size
    }
}

/// Every `(k, l)`-quasi-shuffle of every type `r`.
///
/// Generation order is deterministic: targets are filled left to right,
/// trying "next letter of the left word", then "next of the right word",
/// then "merge both" at each step.
pub fn quasi_shuffles(k: usize, l: usize) -> Vec<QuasiShuffle> {
    let mut out = Vec::new();
    let mut assignment = vec![0; k + l];
    quasi_rec(k, l, 0, 0, 0, &mut assignment, &mut out, true);
    out
}

/// Ordinary `(k, l)`-shuffles, i.e. quasi-shuffles of type 0, in the same order.
pub fn shuffles(k: usize, l: usize) -> Vec<QuasiShuffle> {
    let mut out = Vec::new();
    let mut assignment = vec![0; k + l];
    quasi_rec(k, l, 0, 0, 0, &mut assignment, &mut out, false);
    out
}

#[allow(clippy::too_many_arguments)]
fn quasi_rec(
    k: usize,
    l: usize,
    i: usize,
    j: usize,
    target: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<QuasiShuffle>,
    merges: bool,
) {
    if i == k && j == l {
        out.push(QuasiShuffle {
            target_size: target,
            assignment: assignment.clone(),
        });
        return;
    }
    if i < k {
        assignment[i] = target;
        quasi_rec(k, l, i + 1, j, target + 1, assignment, out, merges);
    }
    if j < l {
        assignment[k + j] = target;
        quasi_rec(k, l, i, j + 1, target + 1, assignment, out, merges);
    }
    if merges && i < k && j < l {
        assignment[i] = target;
        assignment[k + j] = target;
        quasi_rec(k, l, i + 1, j + 1, target + 1, assignment, out, merges);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn bernoulli_recurrence_and_odd_vanishing() {
        for k in 2..=30usize {
            let s: Rational = (0..k)
                .map(|i| binomial(k as i64, i as i64) * bernoulli(i))
                .sum();
            assert!(s.is_zero(), "k = {k}");
            if k % 2 == 1 {
                assert!(bernoulli(k).is_zero());
            }
        }
    }

    #[test]
    fn bernoulli_poly_examples() {
        assert_eq!(bernoulli_poly(1, &q(1, 1)), q(1, 2));
        assert_eq!(bernoulli_poly(2, &q(0, 1)), q(1, 6));
        assert_eq!(bernoulli_poly(4, &q(1, 1)), q(-1, 30));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(&q(5, 1), 3).unwrap(), q(60, 1));
        assert_eq!(falling_factorial(&q(3, 1), 5).unwrap(), q(0, 1));
        assert_eq!(falling_factorial(&q(4, 1), -1).unwrap(), q(1, 5));
        assert_eq!(falling_factorial(&q(7, 1), 0).unwrap(), q(1, 1));
        assert_eq!(falling_factorial(&q(-1, 1), -1), Err(CombinatError::Pole));
        assert_eq!(
            falling_factorial(&q(2, 1), -2),
            Err(CombinatError::BadOrder(-2))
        );
    }

    #[test]
    fn affine_falling_factorial_matches_pointwise() {
        let c = q(3, 2);
        for b in -3..4i64 {
            for m in 0..5i64 {
                let f = falling_factorial_affine(b, &c, m).unwrap();
                for z in [q(1, 3), q(-2, 5), q(2, 1)] {
                    let a = Rational::from(b) - &c * &z;
                    assert_eq!(f.eval(&z).unwrap(), falling_factorial(&a, m).unwrap());
                }
            }
        }
        let inv = falling_factorial_affine(-1, &q(1, 1), -1).unwrap();
        assert_eq!(inv.pole_order(), 1);
    }

    #[test]
    fn faulhaber_examples() {
        assert_eq!(faulhaber_interp(1, &q(0, 1), &q(10, 1)), q(55, 1));
        assert_eq!(faulhaber_interp(0, &q(0, 1), &q(7, 1)), q(7, 1));
        assert_eq!(faulhaber_interp(2, &q(1, 2), &q(3, 1)), q(83, 4));
    }

    #[test]
    fn composition_examples() {
        let c3: Vec<Vec<usize>> = compositions(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c3, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        assert_eq!(compositions(1).len(), 1);
        assert_eq!(compositions(4).len(), 8);
        for n in 1..=8 {
            let cs = compositions(n);
            assert_eq!(cs.len(), 1 << (n - 1));
            assert!(cs.iter().all(|c| c.total() == n));
            assert!(cs.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn quasi_shuffle_examples() {
        assert_eq!(quasi_shuffles(1, 1).len(), 3);
        assert_eq!(quasi_shuffles(2, 1).len(), 5);
        let type0 = quasi_shuffles(1, 1)
            .into_iter()
            .filter(|q| q.merge_count() == 0)
            .count();
        assert_eq!(type0, 2);
        assert_eq!(shuffles(2, 3).len(), 10);
    }
}
