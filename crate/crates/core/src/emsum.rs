//! Residue and finite part at `z = 0` of cut-off nested power sums
//!
//! ```text
//! sum_{1 <= n_l < ... < n_1} prod_i (n_i + v)^(b_i - c_i z)
//! ```
//!
//! computed by peeling the innermost sum with Euler-Maclaurin and recursing
//! on depth. Slot 0 carries the largest index `n_1`; the last slot carries
//! the smallest. All but the last `b_i` must be nonnegative.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use parking_lot::RwLock;
use thiserror::Error;

use crate::combinat::{bernoulli, bernoulli_poly};
use crate::exactnum::{factorial, Poly, Rational};

/// One slot `(n + v)^(b - c z)` with `c > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineExponent {
    pub b: i64,
    pub c: Rational,
}

impl AffineExponent {
    pub fn new(b: i64, c: Rational) -> Self {
        AffineExponent { b, c }
    }

    /// `(b, 1)`
    pub fn unit(b: i64) -> Self {
        AffineExponent {
            b,
            c: Rational::one(),
        }
    }
}

impl fmt::Debug for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b, self.c)
    }
}

/// The `z^0` coefficient. It is transcendental (involves derivatives of
/// Hurwitz zeta at negative arguments or Euler-type constants) whenever the
/// innermost exponent is negative, and is then only tracked as a sentinel.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fp {
    Rational(Rational),
    NonRational,
}

impl Fp {
    pub fn rational(&self) -> Option<&Rational> {
        match self {
            Fp::Rational(r) => Some(r),
            Fp::NonRational => None,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fp::Rational(r) => write!(f, "{r}"),
            Fp::NonRational => write!(f, "<non-rational>"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentData {
    pub res: Rational,
    pub fp: Fp,
}

/// The `z^-1, z^0, z^1` coefficients of a local factor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LocalGerm {
    pub h_m1: Rational,
    pub h_0: Rational,
    pub h_1: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("empty exponent list")]
    Empty,
    #[error("slot {index} has b = {b} < 0 but is not the innermost slot")]
    StructuralViolation { index: usize, b: i64 },
    #[error("slot {index} has c = {c}, expected c > 0")]
    NonPositiveScale { index: usize, c: Rational },
    #[error("Hurwitz parameter v = {0} must exceed -1")]
    BadShift(Rational),
    #[error("non-rational finite part multiplied by nonzero coefficient {coeff} at {exponents:?}")]
    RationalityLeak {
        coeff: Rational,
        exponents: Vec<AffineExponent>,
    },
    #[error("finite part of {0:?} is not rational")]
    NotRational(Vec<AffineExponent>),
    #[error("interpolated polynomial disagrees with the engine at v = {v}")]
    InterpolationMismatch { v: Rational },
}

/// `J = max(1, ceil((sum_j max(b_j, 0) + l) / 2) + 1)`.
/// Depth-one lists never recurse and get 1.
pub fn j_truncation(exponents: &[AffineExponent]) -> usize {
    if exponents.len() < 2 {
        return 1;
    }
    let s: i64 = exponents.iter().map(|e| e.b.max(0)).sum::<i64>() + exponents.len() as i64;
    let half = (s + 1).div_euclid(2);
    (half + 1).max(1) as usize
}

/// Germ at `z = 0` of `(B_j / j!) [b - c z]_{j-1}`.
pub fn germ_h(j: usize, b: i64, c: &Rational) -> LocalGerm {
    if j == 0 {
        // 1 / (b + 1 - c z)
        if b == -1 {
            return LocalGerm {
                h_m1: -c.recip().expect("c > 0"),
                ..LocalGerm::default()
            };
        }
        let inv = Rational::from(b + 1).recip().expect("b != -1");
        return LocalGerm {
            h_m1: Rational::zero(),
            h_1: c * &inv * &inv,
            h_0: inv,
        };
    }
    let bj = bernoulli(j);
    if bj.is_zero() {
        return LocalGerm::default();
    }
    let scale = bj / factorial(j as u64);
    let factors: Vec<Rational> = (0..j as i64 - 1).map(|i| Rational::from(b - i)).collect();
    let h_0: Rational = factors.iter().cloned().product();
    let h_1: Rational = (0..factors.len())
        .map(|m| {
            factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != m)
                .map(|(_, f)| f.clone())
                .product::<Rational>()
        })
        .sum();
    LocalGerm {
        h_m1: Rational::zero(),
        h_0: &scale * h_0,
        h_1: -(scale * c * h_1),
    }
}

/// Boundary factor of the peeled sum at `n = 1`. `h_m1` is `1/c` when
/// `b = -1`. `h_0` is only meaningful for `b >= 0`, where it equals
/// `-B_{b+1}(1+v)/(b+1)`; it is left at zero otherwise. `h_1` always pairs
/// with a vanishing residue and is not computed.
pub fn germ_k(b: i64, c: &Rational, v: &Rational) -> LocalGerm {
    let mut g = LocalGerm::default();
    if b == -1 {
        g.h_m1 = c.recip().expect("c > 0");
    }
    if b >= 0 {
        let n = b as usize + 1;
        g.h_0 = -bernoulli_poly(n, &(v + Rational::one())) / Rational::from(n);
    }
    g
}

type MemoKey = (Vec<AffineExponent>, Rational);

/// Memoizing evaluator. Lookups and inserts are lock-protected and
/// idempotent, so one engine may be shared across threads.
pub struct Engine {
    memo: RwLock<HashMap<MemoKey, LaurentData>>,
    capacity: Option<usize>,
    j_offset: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine {
            memo: RwLock::new(HashMap::new()),
            capacity: None,
            j_offset: 0,
        }
    }

    /// Stops caching once `cap` entries are stored.
    pub fn with_capacity_limit(cap: usize) -> Self {
        Engine {
            capacity: Some(cap),
            ..Engine::new()
        }
    }

    /// Uses `j_truncation + offset` at every level of the recursion.
    pub fn with_j_offset(offset: usize) -> Self {
        Engine {
            j_offset: offset,
            ..Engine::new()
        }
    }

    pub fn cache_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn clear(&self) {
        self.memo.write().clear();
    }

    pub fn nested_fp_res(
        &self,
        exponents: &[AffineExponent],
        v: &Rational,
    ) -> Result<LaurentData, EngineError> {
        if exponents.is_empty() {
            return Err(EngineError::Empty);
        }
        if v <= &-Rational::one() {
            return Err(EngineError::BadShift(v.clone()));
        }
        for (index, e) in exponents.iter().enumerate() {
            if !e.c.is_positive() {
                return Err(EngineError::NonPositiveScale {
                    index,
                    c: e.c.clone(),
                });
            }
            if index + 1 < exponents.len() && e.b < 0 {
                return Err(EngineError::StructuralViolation { index, b: e.b });
            }
        }
        self.eval(exponents, v)
    }

    fn eval(&self, exps: &[AffineExponent], v: &Rational) -> Result<LaurentData, EngineError> {
        let key = (exps.to_vec(), v.clone());
        if let Some(hit) = self.memo.read().get(&key) {
            return Ok(hit.clone());
        }
        let out = if exps.len() == 1 {
            depth_one(&exps[0], v)
        } else {
            self.peel(exps, v)?
        };
        let mut memo = self.memo.write();
        if self.capacity.is_none_or(|cap| memo.len() < cap) {
            memo.insert(key, out.clone());
        }
        Ok(out)
    }

    fn peel(&self, exps: &[AffineExponent], v: &Rational) -> Result<LaurentData, EngineError> {
        let l = exps.len();
        let last = &exps[l - 1];
        let prev = &exps[l - 2];
        let jmax = 2 * (j_truncation(exps) + self.j_offset);
        let merged_c = &prev.c + &last.c;
        let leak = |coeff: &Rational| EngineError::RationalityLeak {
            coeff: coeff.clone(),
            exponents: exps.to_vec(),
        };
        let times = |coeff: &Rational, fp: &Fp| -> Result<Rational, EngineError> {
            if coeff.is_zero() {
                return Ok(Rational::zero());
            }
            match fp {
                Fp::Rational(x) => Ok(coeff * x),
                Fp::NonRational => Err(leak(coeff)),
            }
        };

        let mut res = Rational::zero();
        let mut fp = Rational::zero();
        let want_fp = last.b >= 0;
        let mut sub: Vec<AffineExponent> = exps[..l - 1].to_vec();
        for j in 0..=jmax {
            let h = germ_h(j, last.b, &last.c);
            if h == LocalGerm::default() {
                continue;
            }
            sub[l - 2] = AffineExponent::new(prev.b + last.b + 1 - j as i64, merged_c.clone());
            let d = self.eval(&sub, v)?;
            res += times(&h.h_m1, &d.fp)? + &h.h_0 * &d.res;
            if want_fp {
                fp += times(&h.h_0, &d.fp)? + &h.h_1 * &d.res;
            }
        }

        let k = germ_k(last.b, &last.c, v);
        let dk = self.eval(&exps[..l - 1], v)?;
        res += times(&k.h_m1, &dk.fp)?;
        if want_fp {
            fp += times(&k.h_0, &dk.fp)?;
        }
        Ok(LaurentData {
            res,
            fp: if want_fp {
                Fp::Rational(fp)
            } else {
                Fp::NonRational
            },
        })
    }

    /// The finite part as a polynomial in `v`, interpolated through
    /// `max(degree_bound, sum (b_i + 1)) + 1` nonnegative integer nodes and
    /// checked at two more.
    pub fn poly_in_v(
        &self,
        exponents: &[AffineExponent],
        degree_bound: usize,
    ) -> Result<Poly, EngineError> {
        let safe: i64 = exponents.iter().map(|e| e.b.max(0) + 1).sum();
        let deg = degree_bound.max(safe as usize);
        let value = |x: i64| -> Result<(Rational, Rational), EngineError> {
            let v = Rational::from(x);
            let d = self.nested_fp_res(exponents, &v)?;
            match d.fp {
                Fp::Rational(r) => Ok((v, r)),
                Fp::NonRational => Err(EngineError::NotRational(exponents.to_vec())),
            }
        };
        let nodes = (0..=deg as i64).map(value).collect::<Result<Vec<_>, _>>()?;
        let p = Poly::interpolate(&nodes).expect("distinct nodes");
        for x in deg as i64 + 1..=deg as i64 + 2 {
            let (v, y) = value(x)?;
            if p.eval(&v) != y {
                return Err(EngineError::InterpolationMismatch { v });
            }
        }
        Ok(p)
    }
}

fn depth_one(e: &AffineExponent, v: &Rational) -> LaurentData {
    match e.b {
        b if b >= 0 => {
            let n = b as usize + 1;
            LaurentData {
                res: Rational::zero(),
                fp: Fp::Rational(-bernoulli_poly(n, &(v + Rational::one())) / Rational::from(n)),
            }
        }
        -1 => LaurentData {
            res: e.c.recip().expect("c > 0"),
            fp: Fp::NonRational,
        },
        _ => LaurentData {
            res: Rational::zero(),
            fp: Fp::NonRational,
        },
    }
}

/// Process-wide engine. `MZV_CACHE_SIZE` caps the number of memo entries.
pub fn global_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| {
        match std::env::var("MZV_CACHE_SIZE")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            Some(cap) => Engine::with_capacity_limit(cap),
            None => Engine::new(),
        }
    })
}

pub fn nested_fp_res(
    exponents: &[AffineExponent],
    v: &Rational,
) -> Result<LaurentData, EngineError> {
    global_engine().nested_fp_res(exponents, v)
}

pub fn poly_in_v(exponents: &[AffineExponent], degree_bound: usize) -> Result<Poly, EngineError> {
    global_engine().poly_in_v(exponents, degree_bound)
}
