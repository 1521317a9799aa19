use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::fmt_poly;
use super::{ArithError, Poly, Rational};

/// Quotient of two polynomials in `z`, kept reduced with a monic denominator,
/// so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lc = den.leading().expect("nonzero").clone();
        let lc_inv = lc.recip()?;
        Ok(RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    /// `1 / (a + b z)`
    pub fn inv_linear(a: Rational, b: Rational) -> Result<Self, ArithError> {
        RationalFunction::new(Poly::one(), Poly::linear(a, b))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value if this function does not depend on `z`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Order of the pole at `z = 0` (zero when holomorphic there).
    pub fn pole_order(&self) -> usize {
        self.den.zero_multiplicity().unwrap_or(0)
    }

    /// Value at a point that is not a pole.
    pub fn eval(&self, z: &Rational) -> Result<Rational, ArithError> {
        self.num.eval(z).checked_div(&self.den.eval(z))
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, ArithError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(RationalFunction::one(), |acc, _| &acc * self)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<&Rational> = self.num.coeffs().iter().filter(|c| !c.is_zero()).collect();
        let simple_num = nonzero.len() <= 1 && nonzero.iter().all(|c| c.is_integer());
        if self.den == Poly::one() {
            return fmt_poly(&self.num, "z", f);
        }
        if simple_num {
            fmt_poly(&self.num, "z", f)?;
        } else {
            write!(f, "(")?;
            fmt_poly(&self.num, "z", f)?;
            write!(f, ")")?;
        }
        match self.den.zero_multiplicity() {
            Some(k)
                if self.den.degree() == Some(k)
                    && self.den.leading().is_some_and(Rational::is_one) =>
            {
                if k == 1 {
                    write!(f, "/z")
                } else {
                    write!(f, "/z^{k}")
                }
            }
            _ => {
                write!(f, "/(")?;
                fmt_poly(&self.den, "z", f)?;
                write!(f, ")")
            }
        }
    }
}
