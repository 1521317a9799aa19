use std::fmt;

use super::{LaurentError, Rational, RationalFunction};

/// Truncated Laurent series in `z` around `z = 0`.
///
/// The series is known exactly through `z^order`; asking for any higher
/// coefficient is an error. Coefficients of exponents below `min_exponent`
/// are zero. Exact Laurent polynomials carry `order == LaurentSeries::EXACT`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exponent: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl LaurentSeries {
    /// Validity order of a finite Laurent polynomial.
    pub const EXACT: i64 = i64::MAX / 4;

    /// Series with `coeffs[i]` the coefficient of `z^(min_exponent + i)`,
    /// valid through `z^order`. Entries past `order` are discarded.
    pub fn new(min_exponent: i64, coeffs: Vec<Rational>, order: i64) -> Self {
        let mut s = LaurentSeries {
            min_exponent,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// An exact Laurent polynomial.
    pub fn polynomial(min_exponent: i64, coeffs: Vec<Rational>) -> Self {
        LaurentSeries::new(min_exponent, coeffs, Self::EXACT)
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries::new(0, Vec::new(), order)
    }

    pub fn constant(c: Rational) -> Self {
        LaurentSeries::polynomial(0, vec![c])
    }

    /// `c z^e`, exact.
    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentSeries::polynomial(e, vec![c])
    }

    fn normalize(&mut self) {
        let keep = (self.order - self.min_exponent + 1).max(0);
        if (self.coeffs.len() as i64) > keep {
            self.coeffs.truncate(keep as usize);
        }
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exponent += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exponent = 0;
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= Self::EXACT
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    /// Lowest exponent with a nonzero coefficient; `None` if the series
    /// vanishes on its whole window.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.min_exponent)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the pole at zero (0 if none).
    pub fn pole_order(&self) -> i64 {
        self.valuation().map_or(0, |v| (-v).max(0))
    }

    pub fn coeff(&self, e: i64) -> Result<Rational, LaurentError> {
        if e > self.order {
            return Err(LaurentError::BeyondOrder {
                requested: e,
                order: self.order,
            });
        }
        let idx = e - self.min_exponent;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[idx as usize].clone())
    }

    pub fn residue(&self) -> Result<Rational, LaurentError> {
        self.coeff(-1)
    }

    pub fn finite_part(&self) -> Result<Rational, LaurentError> {
        self.coeff(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs inside the window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exponent + i as i64, c))
    }

    fn low_bound(&self) -> i64 {
        // Lowest exponent that may be nonzero, counting the unknown tail.
        self.valuation()
            .unwrap_or_else(|| self.order.saturating_add(1))
    }

    pub fn truncate(&self, order: i64) -> Result<LaurentSeries, LaurentError> {
        if order > self.order {
            return Err(LaurentError::BeyondOrder {
                requested: order,
                order: self.order,
            });
        }
        Ok(LaurentSeries::new(
            self.min_exponent,
            self.coeffs.clone(),
            order,
        ))
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &LaurentSeries, negate: bool) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let lo = self.min_exponent.min(rhs.min_exponent);
        let hi_a = self.min_exponent + self.coeffs.len() as i64;
        let hi_b = rhs.min_exponent + rhs.coeffs.len() as i64;
        let hi = hi_a.max(hi_b).min(order.saturating_add(1));
        let coeffs = (lo..hi.max(lo))
            .map(|e| {
                let a = self.stored(e);
                let b = rhs.stored(e);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        LaurentSeries::new(lo, coeffs, order)
    }

    fn stored(&self, e: i64) -> Rational {
        let idx = e - self.min_exponent;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Cauchy product. The result is valid through
    /// `min(a.order + val(b), b.order + val(a))`.
    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let bound = |a: &LaurentSeries, b: &LaurentSeries| {
            if a.is_exact() {
                Self::EXACT
            } else {
                a.order.saturating_add(b.low_bound())
            }
        };
        let order = bound(self, rhs).min(bound(rhs, self)).min(Self::EXACT);
        if self.is_zero() || rhs.is_zero() {
            return LaurentSeries::zero(order);
        }
        let lo = self.min_exponent + rhs.min_exponent;
        let hi = (self.min_exponent + self.coeffs.len() as i64 - 1)
            + (rhs.min_exponent + rhs.coeffs.len() as i64 - 1);
        let hi = hi.min(order);
        if hi < lo {
            return LaurentSeries::zero(order);
        }
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= out.len() {
                    break;
                }
                out[k] += a * b;
            }
        }
        LaurentSeries::new(lo, out, order)
    }

    pub fn scale(&self, c: &Rational) -> LaurentSeries {
        LaurentSeries::new(
            self.min_exponent,
            self.coeffs.iter().map(|a| a * c).collect(),
            self.order,
        )
    }

    pub fn neg(&self) -> LaurentSeries {
        self.scale(&-Rational::one())
    }

    /// Terms with negative exponent, as an exact Laurent polynomial.
    pub fn pole_part(&self) -> Result<LaurentSeries, LaurentError> {
        if self.order < -1 {
            return Err(LaurentError::BeyondOrder {
                requested: -1,
                order: self.order,
            });
        }
        let coeffs = self
            .terms()
            .filter(|(e, _)| *e < 0)
            .map(|(e, c)| (e, c.clone()))
            .collect::<Vec<_>>();
        Ok(match coeffs.first() {
            None => LaurentSeries::zero(Self::EXACT),
            Some(&(lo, _)) => {
                let mut dense = vec![Rational::zero(); (-lo) as usize];
                for (e, c) in coeffs {
                    dense[(e - lo) as usize] = c;
                }
                LaurentSeries::polynomial(lo, dense)
            }
        })
    }

    /// Terms with nonnegative exponent, same window.
    pub fn regular_part(&self) -> LaurentSeries {
        let coeffs = (0..=(self.min_exponent + self.coeffs.len() as i64 - 1).max(-1))
            .map(|e| self.stored(e))
            .collect();
        LaurentSeries::new(0, coeffs, self.order)
    }
}

/// Laurent expansion of `f` at `z = 0`, valid through `z^order`.
pub fn laurent_expand(f: &RationalFunction, order: i64) -> LaurentSeries {
    let pole = f.pole_order() as i64;
    let unit = f.den().shift_down(pole as usize);
    let u0_inv = unit.coeff(0).recip().expect("unit part nonzero at 0");
    let count = order + pole + 1;
    let mut out: Vec<Rational> = Vec::with_capacity(count.max(0) as usize);
    for i in 0..count.max(0) as usize {
        let mut acc = f.num().coeff(i);
        for j in 1..=i.min(unit.coeffs().len().saturating_sub(1)) {
            acc -= unit.coeff(j) * &out[i - j];
        }
        out.push(acc * &u0_inv);
    }
    LaurentSeries::new(-pole, out, order)
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                e if e < 0 => {
                    let zpow = if e == -1 {
                        "z".to_string()
                    } else {
                        format!("z^{}", -e)
                    };
                    if mag.is_integer() {
                        write!(f, "{}/{zpow}", mag)?
                    } else {
                        write!(f, "{}/({}*{zpow})", mag.numer(), mag.denom())?
                    }
                }
                _ => {
                    let zpow = if e == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{e}")
                    };
                    if mag.is_one() {
                        write!(f, "{zpow}")?
                    } else {
                        write!(f, "{mag}*{zpow}")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.is_exact() {
            write!(f, " + O(z^{})", self.order + 1)?;
        }
        Ok(())
    }
}
