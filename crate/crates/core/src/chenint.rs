//! Iterated integrals on `[1, oo)` of power-log symbols
//! `coeff(z) t^(b - c z) (log t)^m`, their cut-off (finite part) values,
//! the shuffle character they define and its Birkhoff factorisation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::combinat::shuffles;
use crate::exactnum::{
    factorial, laurent_expand, LaurentError, LaurentSeries, Rational, RationalFunction,
};
use crate::mzv::CheckReport;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChenError {
    #[error("Laurent window too short: bracket only known through z^{order}")]
    InsufficientOrder { order: i64 },
    #[error("cannot evaluate at a finite bound: {0}")]
    NotEvaluable(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
}

impl From<LaurentError> for ChenError {
    fn from(e: LaurentError) -> Self {
        match e {
            LaurentError::BeyondOrder { order, .. } => ChenError::InsufficientOrder { order },
        }
    }
}

/// `coeff(z) t^(b - c z) (log t)^m`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerLogTerm {
    pub coeff: RationalFunction,
    pub b: i64,
    pub c: Rational,
    pub m: u32,
}

type TermKey = (i64, Rational, u32);

/// Sum of power-log terms, one per distinct `(b, c, m)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PowerLogExpr {
    terms: BTreeMap<TermKey, RationalFunction>,
}

impl PowerLogExpr {
    pub fn zero() -> Self {
        PowerLogExpr::default()
    }

    pub fn one() -> Self {
        PowerLogExpr::from_term(PowerLogTerm {
            coeff: RationalFunction::one(),
            b: 0,
            c: Rational::zero(),
            m: 0,
        })
    }

    pub fn from_term(t: PowerLogTerm) -> Self {
        let mut e = PowerLogExpr::zero();
        e.add_term(t);
        e
    }

    /// `t^(b - c z)`
    pub fn power(b: i64, c: Rational) -> Self {
        PowerLogExpr::from_term(PowerLogTerm {
            coeff: RationalFunction::one(),
            b,
            c,
            m: 0,
        })
    }

    /// The regularised symbol `t^(-s - z)`.
    pub fn sigma(s: i64) -> Self {
        PowerLogExpr::power(-s, Rational::one())
    }

    pub fn add_term(&mut self, t: PowerLogTerm) {
        if t.coeff.is_zero() {
            return;
        }
        let key = (t.b, t.c, t.m);
        let sum = match self.terms.get(&key) {
            Some(old) => old + &t.coeff,
            None => t.coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = PowerLogTerm> + '_ {
        self.terms.iter().map(|((b, c, m), coeff)| PowerLogTerm {
            coeff: coeff.clone(),
            b: *b,
            c: c.clone(),
            m: *m,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &PowerLogExpr) -> PowerLogExpr {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_term(t);
        }
        out
    }

    pub fn sub(&self, rhs: &PowerLogExpr) -> PowerLogExpr {
        self.add(&rhs.scale(&RationalFunction::constant(-Rational::one())))
    }

    pub fn scale(&self, k: &RationalFunction) -> PowerLogExpr {
        let mut out = PowerLogExpr::zero();
        for mut t in self.terms() {
            t.coeff = &t.coeff * k;
            out.add_term(t);
        }
        out
    }

    pub fn mul(&self, rhs: &PowerLogExpr) -> PowerLogExpr {
        let mut out = PowerLogExpr::zero();
        for x in self.terms() {
            for y in rhs.terms() {
                out.add_term(PowerLogTerm {
                    coeff: &x.coeff * &y.coeff,
                    b: x.b + y.b,
                    c: &x.c + &y.c,
                    m: x.m + y.m,
                });
            }
        }
        out
    }

    /// True when every coefficient is constant in `z` and every power is `z`-free.
    pub fn is_z_free(&self) -> bool {
        self.terms
            .iter()
            .all(|((_, c, _), k)| c.is_zero() && k.as_constant().is_some())
    }

    /// Value at a positive rational `t`, for `z`-free expressions without logs.
    pub fn eval_at(&self, t: &Rational) -> Result<Rational, ChenError> {
        if !t.is_positive() {
            return Err(ChenError::NotEvaluable(format!("t = {t} is not positive")));
        }
        let mut acc = Rational::zero();
        for term in self.terms() {
            let k = term.coeff.as_constant();
            match k {
                Some(k) if term.c.is_zero() && term.m == 0 => {
                    acc += k * t.pow(term.b).expect("t > 0");
                }
                _ => return Err(ChenError::NotEvaluable("term depends on z or log t".into())),
            }
        }
        Ok(acc)
    }
}

impl fmt::Debug for PowerLogExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PowerLogExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}]", t.coeff)?;
            if t.b != 0 || !t.c.is_zero() {
                if t.c.is_zero() {
                    write!(f, "*t^({})", t.b)?;
                } else {
                    write!(f, "*t^({} - {}*z)", t.b, t.c)?;
                }
            }
            if t.m > 0 {
                write!(f, "*log(t)^{}", t.m)?;
            }
        }
        Ok(())
    }
}

fn is_log_case(b: i64, c: &Rational) -> bool {
    b == -1 && c.is_zero()
}

/// `1/(alpha + 1)^n` for `alpha = b - c z`.
fn inv_alpha1_pow(b: i64, c: &Rational, n: u32) -> RationalFunction {
    RationalFunction::inv_linear(Rational::from(b + 1), -c)
        .expect("alpha + 1 is not identically zero")
        .pow(n)
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Finite part of `int_1^oo e(t) dt`. Growing powers and pure log growth
/// have zero finite part, so only the `t = 1` boundary survives.
pub fn cutoff_integral(e: &PowerLogExpr) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for t in e.terms() {
        if is_log_case(t.b, &t.c) {
            continue;
        }
        let k = sign(t.m + 1) * factorial(t.m as u64);
        acc = &acc + &(&t.coeff * &inv_alpha1_pow(t.b, &t.c, t.m + 1)).scale(&k);
    }
    acc
}

/// Antiderivative vanishing at `t = 1`.
pub fn ptilde(e: &PowerLogExpr) -> PowerLogExpr {
    let mut out = PowerLogExpr::zero();
    for t in e.terms() {
        if is_log_case(t.b, &t.c) {
            out.add_term(PowerLogTerm {
                coeff: t
                    .coeff
                    .scale(&Rational::from(t.m as i64 + 1).recip().expect("nonzero")),
                b: 0,
                c: Rational::zero(),
                m: t.m + 1,
            });
            continue;
        }
        // t^(a+1) sum_i (-1)^i [m]_i log^(m-i) t / (a+1)^(i+1)
        let mut falling = Rational::one();
        for i in 0..=t.m {
            if i > 0 {
                falling *= &Rational::from((t.m - i + 1) as i64);
            }
            let k = sign(i) * &falling;
            out.add_term(PowerLogTerm {
                coeff: (&t.coeff * &inv_alpha1_pow(t.b, &t.c, i + 1)).scale(&k),
                b: t.b + 1,
                c: t.c.clone(),
                m: t.m - i,
            });
        }
        let boundary = sign(t.m) * factorial(t.m as u64);
        out.add_term(PowerLogTerm {
            coeff: (&t.coeff * &inv_alpha1_pow(t.b, &t.c, t.m + 1)).scale(&-boundary),
            b: 0,
            c: Rational::zero(),
            m: 0,
        });
    }
    out
}

/// A tensor word of symbols; slot 0 is integrated over the largest variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChenWord {
    pub symbols: Vec<PowerLogExpr>,
}

impl ChenWord {
    pub fn new(symbols: Vec<PowerLogExpr>) -> Self {
        ChenWord { symbols }
    }

    /// `t^(-s_1 - z) ⊗ ... ⊗ t^(-s_k - z)`
    pub fn from_exponents(s: &[i64]) -> Self {
        ChenWord::new(s.iter().map(|&x| PowerLogExpr::sigma(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Interleavings of the two words, repeated by multiplicity.
    pub fn shuffle(&self, other: &ChenWord) -> Vec<ChenWord> {
        shuffles(self.len(), other.len())
            .into_iter()
            .map(|q| {
                let mut slots = vec![PowerLogExpr::zero(); q.target_size];
                for (pos, &t) in q.assignment.iter().enumerate() {
                    slots[t] = if pos < self.len() {
                        self.symbols[pos].clone()
                    } else {
                        other.symbols[pos - self.len()].clone()
                    };
                }
                ChenWord::new(slots)
            })
            .collect()
    }

    /// `sigma_1 * ptilde(sigma_2 * ptilde(... ptilde(sigma_k)))`, the
    /// integrand of the outermost variable.
    pub fn nested_integrand(&self) -> PowerLogExpr {
        let mut acc: Option<PowerLogExpr> = None;
        for sym in self.symbols.iter().rev() {
            acc = Some(match acc {
                None => sym.clone(),
                Some(inner) => sym.mul(&ptilde(&inner)),
            });
        }
        acc.unwrap_or_else(PowerLogExpr::one)
    }
}

/// Cut-off iterated integral as an exact rational function of `z`.
pub fn chen_rational(w: &ChenWord) -> RationalFunction {
    if w.is_empty() {
        return RationalFunction::one();
    }
    cutoff_integral(&w.nested_integrand())
}

pub fn chen_character(w: &ChenWord, order: i64) -> LaurentSeries {
    laurent_expand(&chen_rational(w), order)
}

/// Iterated integral over `lower <= t_k <= ... <= t_1 <= upper`, for
/// `z`-free symbols whose nested antiderivatives never produce `log t`.
pub fn iterated_integral(
    w: &ChenWord,
    lower: &Rational,
    upper: &Rational,
) -> Result<Rational, ChenError> {
    let mut inner = PowerLogExpr::one();
    for sym in w.symbols.iter().rev() {
        inner = antiderivative_from(&sym.mul(&inner), lower)?;
    }
    inner.eval_at(upper)
}

fn antiderivative_from(e: &PowerLogExpr, lower: &Rational) -> Result<PowerLogExpr, ChenError> {
    if !e.is_z_free() {
        return Err(ChenError::NotEvaluable("symbol depends on z".into()));
    }
    let mut out = PowerLogExpr::zero();
    let mut at_lower = Rational::zero();
    for t in e.terms() {
        if t.m > 0 || t.b == -1 {
            return Err(ChenError::NotEvaluable(
                "antiderivative involves log t".into(),
            ));
        }
        let k = t.coeff.as_constant().expect("z-free") / Rational::from(t.b + 1);
        at_lower += &k
            * lower
                .pow(t.b + 1)
                .map_err(|_| ChenError::NotEvaluable("zero bound".into()))?;
        out.add_term(PowerLogTerm {
            coeff: RationalFunction::constant(k),
            b: t.b + 1,
            c: Rational::zero(),
            m: 0,
        });
    }
    out.add_term(PowerLogTerm {
        coeff: RationalFunction::constant(-at_lower),
        b: 0,
        c: Rational::zero(),
        m: 0,
    });
    Ok(out)
}

/// Birkhoff factorisation of a character on words with the deconcatenation
/// coproduct, by minimal subtraction. Counterterms are memoized per prefix.
pub struct Birkhoff<'a, T> {
    phi: &'a dyn Fn(&[T]) -> LaurentSeries,
    minus: HashMap<Vec<T>, LaurentSeries>,
}

impl<'a, T: Clone + Eq + Hash> Birkhoff<'a, T> {
    pub fn new(phi: &'a dyn Fn(&[T]) -> LaurentSeries) -> Self {
        Birkhoff {
            phi,
            minus: HashMap::new(),
        }
    }

    /// `Phi(w) + sum_{w = w' w'', both nonempty} Phi_-(w') Phi(w'')`
    fn bracket(&mut self, w: &[T]) -> Result<LaurentSeries, ChenError> {
        let mut acc = (self.phi)(w);
        for i in 1..w.len() {
            let m = self.phi_minus(&w[..i])?;
            acc = acc.add(&m.mul(&(self.phi)(&w[i..])));
        }
        Ok(acc)
    }

    pub fn phi_minus(&mut self, w: &[T]) -> Result<LaurentSeries, ChenError> {
        if w.is_empty() {
            return Ok(LaurentSeries::constant(Rational::one()));
        }
        if let Some(m) = self.minus.get(w) {
            return Ok(m.clone());
        }
        let b = self.bracket(w)?;
        let m = b.pole_part()?.neg();
        self.minus.insert(w.to_vec(), m.clone());
        Ok(m)
    }

    pub fn phi_plus(&mut self, w: &[T]) -> Result<LaurentSeries, ChenError> {
        if w.is_empty() {
            return Ok(LaurentSeries::constant(Rational::one()));
        }
        let b = self.bracket(w)?;
        if b.order() < 0 {
            return Err(ChenError::InsufficientOrder { order: b.order() });
        }
        Ok(b.regular_part())
    }
}

/// `(Phi_-(w), Phi_+(w))`.
pub fn bir_factorize<T: Clone + Eq + Hash>(
    phi: &dyn Fn(&[T]) -> LaurentSeries,
    w: &[T],
) -> Result<(LaurentSeries, LaurentSeries), ChenError> {
    let mut bk = Birkhoff::new(phi);
    Ok((bk.phi_minus(w)?, bk.phi_plus(w)?))
}

/// The character on exponent words `s`, expanded through `z^order`.
pub fn sigma_character(order: i64) -> impl Fn(&[i64]) -> LaurentSeries {
    move |s: &[i64]| chen_character(&ChenWord::from_exponents(s), order)
}

/// Renormalised continuous zeta value: `Phi_+(0)` of the word
/// `t^(-s_1 - z) ⊗ ... ⊗ t^(-s_k - z)`.
pub fn zeta_tilde_renorm(s: &[i64]) -> Result<Rational, ChenError> {
    if let Some(x) = s.iter().find(|&&x| x < 1) {
        return Err(ChenError::InvalidSymbol(format!(
            "exponent {x} must be a positive integer"
        )));
    }
    let phi = sigma_character(s.len().max(1) as i64);
    let (_, plus) = bir_factorize(&phi, s)?;
    Ok(plus.finite_part()?)
}

/// Exponent words with letters in `1..=max_letter` and length `1..=max_len`.
pub fn exponent_words(max_letter: i64, max_len: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![];
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=max_letter).map(move |s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Multiplicativity of the character under the shuffle product for
/// `|u| + |w| <= max_total`, and of `Phi_+(0)` for `|u| + |w| <= max_renorm`.
pub fn verify_shuffle_cont(max_letter: i64, max_total: usize, max_renorm: usize) -> CheckReport {
    let mut rep = CheckReport::new("shuffle-cont");
    let words = exponent_words(max_letter, max_total.saturating_sub(1));
    for (i, u) in words.iter().enumerate() {
        for w in &words[i..] {
            let total = u.len() + w.len();
            if total > max_total {
                continue;
            }
            let cu = ChenWord::from_exponents(u);
            let cw = ChenWord::from_exponents(w);
            let lhs = cu
                .shuffle(&cw)
                .iter()
                .fold(RationalFunction::zero(), |acc, x| &acc + &chen_rational(x));
            let rhs = &chen_rational(&cu) * &chen_rational(&cw);
            rep.check::<_, ChenError>(format!("phi({u:?} sh {w:?})"), Ok(lhs), Ok(rhs));

            if total <= max_renorm {
                let shuffled = crate::words::shuffle(
                    &Word::new(u.iter().copied()),
                    &Word::new(w.iter().copied()),
                );
                let lhs = shuffled
                    .iter()
                    .map(|(x, c)| Ok(c * zeta_tilde_renorm(&x.values())?))
                    .sum::<Result<Rational, ChenError>>();
                let rhs = zeta_tilde_renorm(u).and_then(|a| Ok(a * zeta_tilde_renorm(w)?));
                rep.check(format!("phi_+({u:?} sh {w:?})(0)"), lhs, rhs);
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Poly;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn rf_const(x: Rational) -> RationalFunction {
        RationalFunction::constant(x)
    }

    #[test]
    fn cutoff_examples() {
        assert_eq!(
            cutoff_integral(&PowerLogExpr::power(-3, q(0, 1))),
            rf_const(q(1, 2))
        );
        // t^(-1 + 2z)
        let e = PowerLogExpr::power(-1, q(-2, 1));
        let expect = RationalFunction::new(Poly::constant(q(-1, 2)), Poly::x()).unwrap();
        assert_eq!(cutoff_integral(&e), expect);
        let tlog = PowerLogExpr::from_term(PowerLogTerm {
            coeff: RationalFunction::one(),
            b: -2,
            c: q(0, 1),
            m: 1,
        });
        assert_eq!(cutoff_integral(&tlog), rf_const(q(1, 1)));
        // pure log growth
        assert!(cutoff_integral(&PowerLogExpr::power(-1, q(0, 1))).is_zero());
    }

    #[test]
    fn ptilde_examples() {
        // t^(-1-z) -> (1 - t^(-z))/z
        let p = ptilde(&PowerLogExpr::sigma(1));
        let inv_z = RationalFunction::new(Poly::one(), Poly::x()).unwrap();
        let mut expect = PowerLogExpr::zero();
        expect.add_term(PowerLogTerm {
            coeff: inv_z.clone(),
            b: 0,
            c: q(0, 1),
            m: 0,
        });
        expect.add_term(PowerLogTerm {
            coeff: -&inv_z,
            b: 0,
            c: q(1, 1),
            m: 0,
        });
        assert_eq!(p, expect);

        let p = ptilde(&PowerLogExpr::one());
        let expect = PowerLogExpr::power(1, q(0, 1)).sub(&PowerLogExpr::one());
        assert_eq!(p, expect);

        let p = ptilde(&PowerLogExpr::power(-1, q(0, 1)));
        let log = PowerLogExpr::from_term(PowerLogTerm {
            coeff: RationalFunction::one(),
            b: 0,
            c: q(0, 1),
            m: 1,
        });
        assert_eq!(p, log);
    }

    #[test]
    fn character_examples() {
        assert_eq!(
            chen_character(&ChenWord::from_exponents(&[1]), 1),
            LaurentSeries::new(-1, vec![q(1, 1)], 1)
        );
        let phi11 = chen_character(&ChenWord::from_exponents(&[1, 1]), 2);
        assert_eq!(phi11, LaurentSeries::new(-2, vec![q(1, 2)], 2));
        let phi32 = chen_character(&ChenWord::from_exponents(&[3, 2]), 2);
        assert_eq!(phi32.finite_part().unwrap(), q(1, 6));
    }

    #[test]
    fn birkhoff_examples() {
        let a = q(7, 3);
        let phi = |w: &[i64]| match w.len() {
            0 => LaurentSeries::constant(Rational::one()),
            _ => LaurentSeries::new(-1, vec![q(1, 1), a.clone()], 2),
        };
        let (m, p) = bir_factorize(&phi, &[5]).unwrap();
        assert_eq!(m, LaurentSeries::monomial(q(-1, 1), -1));
        assert_eq!(p.finite_part().unwrap(), a);

        let hol =
            |w: &[i64]| LaurentSeries::polynomial(0, vec![Rational::from(w.len() as i64), q(1, 1)]);
        let (m, p) = bir_factorize(&hol, &[1, 2]).unwrap();
        assert!(m.is_zero());
        assert_eq!(p, hol(&[1, 2]));
    }

    #[test]
    fn zeta_tilde_examples() {
        assert_eq!(zeta_tilde_renorm(&[3, 2]).unwrap(), q(1, 6));
        assert_eq!(zeta_tilde_renorm(&[1]).unwrap(), q(0, 1));
        assert_eq!(zeta_tilde_renorm(&[1, 1]).unwrap(), q(0, 1));
        assert!(zeta_tilde_renorm(&[0]).is_err());
    }

    #[test]
    fn finite_bounds() {
        // int_1^2 t^-2 dt = 1/2
        let w = ChenWord::new(vec![PowerLogExpr::power(-2, q(0, 1))]);
        assert_eq!(iterated_integral(&w, &q(1, 1), &q(2, 1)).unwrap(), q(1, 2));
        let w = ChenWord::new(vec![PowerLogExpr::power(-1, q(0, 1))]);
        assert!(iterated_integral(&w, &q(1, 1), &q(2, 1)).is_err());
    }
}
