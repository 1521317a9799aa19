//! Renormalised multiple Hurwitz zeta values `zeta(-a_1, ..., -a_k; v)` at
//! nonpositive integers, in the strict, weak and alternative schemes, plus
//! checkers for the identities they satisfy.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::combinat::{bernoulli, bernoulli_poly, compositions, Composition};
use crate::emsum::{global_engine, AffineExponent, EngineError, Fp};
use crate::exactnum::{binomial, factorial, Poly, Rational};
use crate::words::{stuffle, SignMode, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Strict,
    Weak,
    Alt,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Strict => "strict",
            Variant::Weak => "weak",
            Variant::Alt => "alt",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Variant::Strict),
            "weak" => Ok(Variant::Weak),
            "alt" => Ok(Variant::Alt),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

/// The request `zeta(-a_1, ..., -a_k; v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZetaArgs {
    pub a: Vec<i64>,
    pub v: Rational,
    pub variant: Variant,
}

impl ZetaArgs {
    pub fn new(a: Vec<i64>, v: Rational, variant: Variant) -> Self {
        ZetaArgs { a, v, variant }
    }

    pub fn strict(a: &[i64]) -> Self {
        ZetaArgs::new(a.to_vec(), Rational::zero(), Variant::Strict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaValue {
    pub value: Rational,
    pub as_poly_in_v: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MzvError {
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("term {exponents:?} has nonzero residue {res}")]
    HolomorphyViolation {
        exponents: Vec<AffineExponent>,
        res: Rational,
    },
    #[error("interpolated polynomial in v disagrees with direct evaluation at v = {v}")]
    InterpolationMismatch { v: Rational },
}

fn validate(a: &[i64], v: &Rational) -> Result<(), MzvError> {
    if a.is_empty() {
        return Err(MzvError::InvalidArgs("empty argument list".into()));
    }
    if let Some(x) = a.iter().find(|&&x| x < 0) {
        return Err(MzvError::InvalidArgs(format!("exponent {x} is negative")));
    }
    if v <= &-Rational::one() {
        return Err(MzvError::InvalidArgs(format!("v = {v} must exceed -1")));
    }
    Ok(())
}

fn packet_sums(a: &[i64], comp: &Composition) -> Vec<i64> {
    comp.packets().map(|r| a[r].iter().sum()).collect()
}

/// The engine inputs of the strict value, each with its rational weight,
/// grouped so that equal exponent lists are evaluated once.
pub fn strict_terms(a: &[i64]) -> BTreeMap<Vec<AffineExponent>, Rational> {
    let k = a.len();
    let mut terms: BTreeMap<Vec<AffineExponent>, Rational> = BTreeMap::new();
    for outer in compositions(k) {
        let r = outer.len();
        let sums = packet_sums(a, &outer);
        let denom: Rational = outer.parts().iter().map(|&i| Rational::from(i)).product();
        let sign = if (k - r) % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        let outer_coeff = sign / denom;
        for inner in compositions(r) {
            let exps: Vec<AffineExponent> = inner
                .packets()
                .map(|p| AffineExponent::new(sums[p.clone()].iter().sum(), Rational::from(p.len())))
                .collect();
            let fact: Rational = inner.parts().iter().map(|&c| factorial(c as u64)).product();
            *terms.entry(exps).or_default() += &outer_coeff / fact;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    terms
}

type ValueKey = (Vec<i64>, Rational, Variant);

fn value_cache() -> &'static RwLock<HashMap<ValueKey, Rational>> {
    static CACHE: OnceLock<RwLock<HashMap<ValueKey, Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(
    a: &[i64],
    v: &Rational,
    variant: Variant,
    compute: impl FnOnce() -> Result<Rational, MzvError>,
) -> Result<Rational, MzvError> {
    let key = (a.to_vec(), v.clone(), variant);
    if let Some(x) = value_cache().read().get(&key) {
        return Ok(x.clone());
    }
    let x = compute()?;
    value_cache().write().insert(key, x.clone());
    Ok(x)
}

/// Strict renormalised value; every engine term is checked to be holomorphic.
pub fn zeta_strict(a: &[i64], v: &Rational) -> Result<Rational, MzvError> {
    validate(a, v)?;
    cached(a, v, Variant::Strict, || {
        let engine = global_engine();
        let mut total = Rational::zero();
        for (exps, coeff) in strict_terms(a) {
            let d = engine.nested_fp_res(&exps, v)?;
            if !d.res.is_zero() {
                return Err(MzvError::HolomorphyViolation {
                    exponents: exps,
                    res: d.res,
                });
            }
            match d.fp {
                Fp::Rational(x) => total += coeff * x,
                Fp::NonRational => return Err(EngineError::NotRational(exps).into()),
            }
        }
        Ok(total)
    })
}

/// Weak value: sum over compositions of the strict values at packet sums.
pub fn zeta_weak(a: &[i64], v: &Rational) -> Result<Rational, MzvError> {
    validate(a, v)?;
    cached(a, v, Variant::Weak, || {
        compositions(a.len())
            .iter()
            .map(|comp| zeta_strict(&packet_sums(a, comp), v))
            .sum()
    })
}

/// Inverse conversion: the strict value rebuilt from weak values,
/// `sum_I (-1)^(k-r) weak(packet sums)`.
pub fn strict_from_weak(a: &[i64], v: &Rational) -> Result<Rational, MzvError> {
    validate(a, v)?;
    let k = a.len();
    compositions(k)
        .iter()
        .map(|comp| {
            let w = zeta_weak(&packet_sums(a, comp), v)?;
            Ok(if (k - comp.len()) % 2 == 1 { -w } else { w })
        })
        .sum()
}

/// Alternative scheme: the common perturbation `-a_i + z` in every slot.
pub fn zeta_alt_value(a: &[i64], v: &Rational) -> Result<Rational, MzvError> {
    validate(a, v)?;
    cached(a, v, Variant::Alt, || {
        let exps: Vec<AffineExponent> = a.iter().map(|&x| AffineExponent::unit(x)).collect();
        let d = global_engine().nested_fp_res(&exps, v)?;
        if !d.res.is_zero() {
            return Err(MzvError::HolomorphyViolation {
                exponents: exps,
                res: d.res,
            });
        }
        d.fp.rational()
            .cloned()
            .ok_or_else(|| EngineError::NotRational(exps).into())
    })
}

pub fn zeta_value(a: &[i64], v: &Rational, variant: Variant) -> Result<Rational, MzvError> {
    match variant {
        Variant::Strict => zeta_strict(a, v),
        Variant::Weak => zeta_weak(a, v),
        Variant::Alt => zeta_alt_value(a, v),
    }
}

/// The value as a polynomial in `v`, interpolated at integer nodes with a
/// degree bound of weight plus depth and checked at two more nodes.
pub fn zeta_poly_in_v(a: &[i64], variant: Variant) -> Result<Poly, MzvError> {
    validate(a, &Rational::zero())?;
    let deg = (a.iter().sum::<i64>() + a.len() as i64) as usize;
    interpolate_in_v(deg, |v| zeta_value(a, v, variant))
}

fn interpolate_in_v(
    deg: usize,
    f: impl Fn(&Rational) -> Result<Rational, MzvError>,
) -> Result<Poly, MzvError> {
    let nodes = (0..=deg as i64)
        .map(|x| {
            let v = Rational::from(x);
            let y = f(&v)?;
            Ok((v, y))
        })
        .collect::<Result<Vec<_>, MzvError>>()?;
    let p = Poly::interpolate(&nodes).expect("distinct nodes");
    for x in deg as i64 + 1..=deg as i64 + 2 {
        let v = Rational::from(x);
        if p.eval(&v) != f(&v)? {
            return Err(MzvError::InterpolationMismatch { v });
        }
    }
    Ok(p)
}

fn evaluate(args: &ZetaArgs, with_poly: bool) -> Result<ZetaValue, MzvError> {
    let value = zeta_value(&args.a, &args.v, args.variant)?;
    let as_poly_in_v = if with_poly {
        let p = zeta_poly_in_v(&args.a, args.variant)?;
        if p.eval(&args.v) != value {
            return Err(MzvError::InterpolationMismatch { v: args.v.clone() });
        }
        Some(p)
    } else {
        None
    };
    Ok(ZetaValue {
        value,
        as_poly_in_v,
    })
}

/// Strict value, with its polynomial in `v` attached.
pub fn zeta_renorm(args: &ZetaArgs) -> Result<ZetaValue, MzvError> {
    evaluate(
        &ZetaArgs {
            variant: Variant::Strict,
            ..args.clone()
        },
        true,
    )
}

pub fn zeta_weak_renorm(args: &ZetaArgs) -> Result<ZetaValue, MzvError> {
    evaluate(
        &ZetaArgs {
            variant: Variant::Weak,
            ..args.clone()
        },
        true,
    )
}

pub fn zeta_alt(args: &ZetaArgs) -> Result<ZetaValue, MzvError> {
    evaluate(
        &ZetaArgs {
            variant: Variant::Alt,
            ..args.clone()
        },
        true,
    )
}

/// Dispatches on `args.variant`; the polynomial is computed only on request.
pub fn zeta(args: &ZetaArgs, with_poly: bool) -> Result<ZetaValue, MzvError> {
    evaluate(args, with_poly)
}

/// `zeta(-n) = -B_{n+1}(1)/(n+1)`, so `zeta(0) = -1/2`.
pub fn zeta1(n: i64) -> Rational {
    let m = (n + 1) as usize;
    -bernoulli_poly(m, &Rational::one()) / Rational::from(m)
}

/// Closed form for `zeta(-a, -b)` at `v = 0`, built from Bernoulli numbers only.
pub fn zeta2_closed(a: i64, b: i64) -> Rational {
    let b1 = b + 1;
    let sum: Rational = (0..=b1)
        .map(|s| binomial(b1, s) * bernoulli(s as usize) * zeta1(a + b - s + 1))
        .sum();
    let n = (a + b + 2) as usize;
    let sign = if (a + 1) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let last = sign * factorial(a as u64) * factorial(b as u64) * bernoulli(n)
        / (Rational::from(2) * factorial(n as u64));
    sum / Rational::from(b1) + zeta1(a) * zeta1(b) + last
}

/// `table[b][a] = zeta(-a, -b)` for `0 <= a, b <= max` (rows `b`, columns `a`).
pub fn zeta_table(max: usize) -> Result<Vec<Vec<Rational>>, MzvError> {
    let cells: Vec<(i64, i64)> = (0..=max as i64)
        .flat_map(|b| (0..=max as i64).map(move |a| (a, b)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(a, b)| zeta_strict(&[a, b], &Rational::zero()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(values.chunks(max + 1).map(<[Rational]>::to_vec).collect())
}

/// Published values of `zeta(-a, -b)`, row `b`, column `a`, as `(p, q)`.
pub const REFERENCE_TABLE: [[(i64, i64); 7]; 7] = [
    [
        (3, 8),
        (1, 12),
        (7, 720),
        (-1, 120),
        (-11, 2520),
        (1, 252),
        (1, 224),
    ],
    [
        (1, 24),
        (1, 288),
        (-1, 240),
        (-19, 10080),
        (1, 504),
        (41, 20160),
        (-1, 480),
    ],
    [
        (-7, 720),
        (-1, 240),
        (0, 1),
        (1, 504),
        (113, 151200),
        (-1, 480),
        (-307, 166320),
    ],
    [
        (-1, 240),
        (1, 840),
        (1, 504),
        (1, 28800),
        (-1, 480),
        (-281, 332640),
        (1, 264),
    ],
    [
        (11, 2520),
        (1, 504),
        (-113, 151200),
        (-1, 480),
        (0, 1),
        (1, 264),
        (117977, 75675600),
    ],
    [
        (1, 504),
        (-103, 60480),
        (-1, 480),
        (1, 1232),
        (1, 264),
        (1, 127008),
        (-691, 65520),
    ],
    [
        (-1, 224),
        (-1, 480),
        (307, 166320),
        (1, 264),
        (-117977, 75675600),
        (-691, 65520),
        (0, 1),
    ],
];

pub fn reference_value(a: usize, b: usize) -> Rational {
    let (p, q) = REFERENCE_TABLE[b][a];
    Rational::frac(p, q)
}

/// One identity that did not hold (or could not be evaluated).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            ..CheckReport::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one comparison of two computed sides.
    pub fn check<T, E>(&mut self, case: String, lhs: Result<T, E>, rhs: Result<T, E>)
    where
        T: PartialEq + fmt::Display,
        E: fmt::Display,
    {
        self.cases += 1;
        let show = |x: &Result<T, E>| match x {
            Ok(r) => r.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
        if !ok {
            self.failures.push(Failure {
                case,
                lhs: show(&lhs),
                rhs: show(&rhs),
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// The computed 7x7 table against the published values and against the
/// closed depth-two formula.
pub fn verify_table() -> CheckReport {
    let mut rep = CheckReport::new("table");
    let table = zeta_table(6);
    for b in 0..7 {
        for a in 0..7 {
            let got = table
                .as_ref()
                .map(|t| t[b][a].clone())
                .map_err(Clone::clone);
            rep.check(
                format!("zeta({}, {}) published", -(a as i64), -(b as i64)),
                got.clone(),
                Ok(reference_value(a, b)),
            );
            rep.check(
                format!("zeta({}, {}) closed form", -(a as i64), -(b as i64)),
                got,
                Ok(zeta2_closed(a as i64, b as i64)),
            );
        }
    }
    rep
}

/// All words of depth `1..=max_depth` with nonnegative letters and weight
/// at most `max_weight`, ordered by depth then lexicographically.
pub fn words_up_to(max_weight: i64, max_depth: usize) -> Vec<Word> {
    fn rec(depth: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Word>) {
        if depth == 0 {
            out.push(Word::new(prefix.iter().copied()));
            return;
        }
        for x in 0..=budget {
            prefix.push(x);
            rec(depth - 1, budget - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 1..=max_depth {
        rec(d, max_weight, &mut Vec::new(), &mut out);
    }
    out
}

/// `zeta(u * u') = zeta(u) zeta(u')` for every pair of words of depth at
/// most 3 and total weight at most `max_weight`. The strict and alternative
/// variants are checked against the unsigned stuffle, the weak variant
/// against the signed one.
pub fn verify_stuffle(max_weight: i64, v: &Rational, variant: Variant) -> CheckReport {
    let mode = match variant {
        Variant::Weak => SignMode::Weak,
        _ => SignMode::Strict,
    };
    let words = words_up_to(max_weight, 3);
    let pairs: Vec<(&Word, &Word)> = words
        .iter()
        .enumerate()
        .flat_map(|(i, u)| words[i..].iter().map(move |w| (u, w)))
        .filter(|(u, w)| u.weight() + w.weight() <= max_weight)
        .collect();
    let results: Vec<CheckReport> = pairs
        .par_iter()
        .map(|&(u, w)| {
            let mut rep = CheckReport::default();
            let lhs = stuffle(u, w, mode)
                .iter()
                .map(|(x, c)| Ok(c * zeta_value(&x.values(), v, variant)?))
                .sum::<Result<Rational, MzvError>>();
            let rhs = zeta_value(&u.values(), v, variant)
                .and_then(|x| Ok(x * zeta_value(&w.values(), v, variant)?));
            rep.check(format!("({u})*({w}) v={v} {variant}"), lhs, rhs);
            rep
        })
        .collect();
    let mut report = CheckReport::new("stuffle");
    for r in results {
        report.merge(r);
    }
    report
}

/// Shift identity
/// `zeta(a; v+1) = zeta(a; v) - (v+1)^{a_k} zeta(a_1..a_{k-1}; v+1)`
/// and, when every `a_i >= 1`, the derivative identity
/// `d/dv zeta(a; v) = sum_j a_j zeta(.., a_j - 1, ..; v)`
/// with the derivative taken on the interpolated polynomial in `v`.
pub fn verify_hurwitz_identities(a: &[i64], v: &Rational) -> CheckReport {
    let mut rep = CheckReport::new("hurwitz");
    let v1 = v + Rational::one();
    let k = a.len();
    let lhs = zeta_strict(a, &v1);
    let rhs = (|| {
        let head = if k == 1 {
            Rational::one()
        } else {
            zeta_strict(&a[..k - 1], &v1)?
        };
        let pw = v1.pow(a[k - 1]).expect("v + 1 > 0");
        Ok(zeta_strict(a, v)? - pw * head)
    })();
    rep.check(format!("shift {a:?} v={v}"), lhs, rhs);

    if a.iter().all(|&x| x >= 1) {
        let lhs = zeta_poly_in_v(a, Variant::Strict).map(|p| p.derivative().eval(v));
        let rhs = (0..k)
            .map(|j| {
                let mut b = a.to_vec();
                b[j] -= 1;
                Ok(Rational::from(a[j]) * zeta_strict(&b, v)?)
            })
            .sum::<Result<Rational, MzvError>>();
        rep.check(format!("d/dv {a:?} v={v}"), lhs, rhs);
    }
    rep
}

/// Coefficients of `A_n(t) = (2t+1)^n - (2t-1)^n` in powers of `t`.
pub fn a_n_coeffs(n: u32) -> Poly {
    let mut c = vec![Rational::zero(); n as usize];
    for j in 0..=(n as i64 - 1) / 2 {
        let e = n as i64 - 2 * j - 1;
        c[e as usize] = Rational::from(2)
            .pow(n as i64 - 2 * j)
            .expect("positive base")
            * binomial(n as i64, 2 * j + 1);
    }
    Poly::new(c)
}

/// Each slot weight `A_n(t) (t+v)^a` rewritten as a polynomial in `t + v`.
fn slot_expansion(n: u32, a: i64, v: &Rational) -> Vec<(i64, Rational)> {
    let an = a_n_coeffs(n);
    let mut by_power: BTreeMap<i64, Rational> = BTreeMap::new();
    for (m, alpha) in an.coeffs().iter().enumerate() {
        if alpha.is_zero() {
            continue;
        }
        // t^m = sum_p C(m, p) (t+v)^p (-v)^(m-p)
        for p in 0..=m as i64 {
            let c =
                alpha * binomial(m as i64, p) * (-v).pow(m as i64 - p).expect("nonnegative power");
            *by_power.entry(a + p).or_default() += c;
        }
    }
    by_power.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Renormalised value of the `n`-dimensional analog, where each nested
/// integer carries the weight `A_n(t)` counting lattice points on the
/// sup-norm sphere of radius `t`.
pub fn hdim_zeta(n: u32, args: &ZetaArgs) -> Result<ZetaValue, MzvError> {
    if n == 0 {
        return Err(MzvError::InvalidArgs("dimension must be positive".into()));
    }
    validate(&args.a, &args.v)?;
    let value = hdim_value(n, &args.a, &args.v, args.variant)?;
    Ok(ZetaValue {
        value,
        as_poly_in_v: None,
    })
}

fn hdim_value(n: u32, a: &[i64], v: &Rational, variant: Variant) -> Result<Rational, MzvError> {
    let slots: Vec<Vec<(i64, Rational)>> = a.iter().map(|&x| slot_expansion(n, x, v)).collect();
    let mut total = Rational::zero();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let args: Vec<i64> = idx.iter().zip(&slots).map(|(&i, s)| s[i].0).collect();
        let coeff: Rational = idx
            .iter()
            .zip(&slots)
            .map(|(&i, s)| s[i].1.clone())
            .product();
        total += coeff * zeta_value(&args, v, variant)?;
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(total);
            }
            idx[pos] += 1;
            if idx[pos] < slots[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Polynomial in `v` of the `n`-dimensional value, degree at most
/// `weight + n k`.
pub fn hdim_poly_in_v(n: u32, a: &[i64], variant: Variant) -> Result<Poly, MzvError> {
    validate(a, &Rational::zero())?;
    let deg = (a.iter().sum::<i64>() + (n as i64) * a.len() as i64) as usize;
    interpolate_in_v(deg, |v| hdim_value(n, a, v, variant))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn z(a: &[i64]) -> Rational {
        zeta_strict(a, &Rational::zero()).unwrap()
    }

    #[test]
    fn strict_examples() {
        assert_eq!(z(&[0, 0]), q(3, 8));
        assert_eq!(z(&[1, 1]), q(1, 288));
        assert_eq!(z(&[6, 6]), q(0, 1));
        assert_eq!(z(&[5]), q(-1, 252));
    }

    #[test]
    fn weak_examples() {
        let zero = Rational::zero();
        assert_eq!(zeta_weak(&[0, 0], &zero).unwrap(), q(-1, 8));
        assert_eq!(zeta_weak(&[3], &zero).unwrap(), z(&[3]));
        assert_eq!(strict_from_weak(&[1, 2, 0], &zero).unwrap(), z(&[1, 2, 0]));
    }

    #[test]
    fn alt_examples() {
        let zero = Rational::zero();
        assert_eq!(zeta_alt_value(&[3], &zero).unwrap(), q(1, 120));
        assert_eq!(zeta_alt_value(&[2, 1], &zero).unwrap(), q(-1, 240));
        let d = z(&[0, 1, 1]) - zeta_alt_value(&[0, 1, 1], &zero).unwrap();
        assert_eq!(d, q(1, 2880));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(zeta2_closed(0, 0), q(3, 8));
        assert_eq!(zeta2_closed(2, 1), q(-1, 240));
        assert_eq!(zeta2_closed(1, 2), -zeta1(3) / Rational::from(2));
    }

    #[test]
    fn strict_terms_of_depth_two() {
        let t = strict_terms(&[0, 0]);
        let unit = |b| AffineExponent::unit(b);
        assert_eq!(t[&vec![unit(0), unit(0)]], q(1, 1));
        assert_eq!(t[&vec![AffineExponent::new(0, q(2, 1))]], q(1, 2));
        assert_eq!(t[&vec![unit(0)]], q(-1, 2));
    }

    #[test]
    fn poly_in_v_depth_one() {
        // -B_2(1+v)/2
        let p = zeta_poly_in_v(&[1], Variant::Strict).unwrap();
        assert_eq!(p, Poly::new(vec![q(-1, 12), q(-1, 2), q(-1, 2)]));
    }

    #[test]
    fn stuffle_small_cases() {
        assert!(verify_stuffle(2, &Rational::zero(), Variant::Strict).passed());
        assert!(verify_stuffle(2, &Rational::zero(), Variant::Weak).passed());
    }

    #[test]
    fn hurwitz_small_cases() {
        assert!(verify_hurwitz_identities(&[1, 1], &q(1, 2)).passed());
        assert!(verify_hurwitz_identities(&[2, 1], &q(0, 1)).passed());
    }

    #[test]
    fn hdim_examples() {
        let val = |n, a: &[i64]| hdim_zeta(n, &ZetaArgs::strict(a)).unwrap().value;
        assert_eq!(val(2, &[0]), q(-2, 3));
        assert_eq!(val(3, &[0]), q(-1, 1));
        assert_eq!(val(1, &[1, 1]), q(1, 72));
        assert_eq!(a_n_coeffs(3), Poly::new(vec![q(2, 1), q(0, 1), q(24, 1)]));
    }

    #[test]
    fn invalid_args() {
        assert!(matches!(
            zeta_strict(&[], &q(0, 1)),
            Err(MzvError::InvalidArgs(_))
        ));
        assert!(matches!(
            zeta_strict(&[-1], &q(0, 1)),
            Err(MzvError::InvalidArgs(_))
        ));
        assert!(matches!(
            zeta_strict(&[1], &q(-3, 2)),
            Err(MzvError::InvalidArgs(_))
        ));
    }
}
