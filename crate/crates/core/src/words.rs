//! Word algebra on integer letters: shuffle, stuffle, deconcatenation and
//! the Hoffman exponential/logarithm.
//!
//! A letter stores the exponent `a` of `(n + v)^a`, so the zeta argument it
//! stands for is `-a`. The bullet product of two letters adds exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::combinat::{compositions, quasi_shuffles, shuffles, Composition, QuasiShuffle};
use crate::exactnum::{factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

/// Sign convention of the stuffle product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignMode {
    /// Merged letters enter with coefficient `+1`.
    Strict,
    /// Each merged pair contributes a factor `-1`.
    Weak,
}

/// Sign of the bullet product `x • y = ±[x + y]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BulletSign {
    Plus,
    Minus,
}

impl SignMode {
    pub fn bullet(self) -> BulletSign {
        match self {
            SignMode::Strict => BulletSign::Plus,
            SignMode::Weak => BulletSign::Minus,
        }
    }
}

impl BulletSign {
    /// Sign picked up after `merges` binary bullet products.
    fn sign(self, merges: usize) -> Rational {
        match self {
            BulletSign::Minus if merges % 2 == 1 => -Rational::one(),
            _ => Rational::one(),
        }
    }
}

impl Word {
    pub fn new(values: impl IntoIterator<Item = i64>) -> Self {
        Word(values.into_iter().map(Letter).collect())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.0).collect()
    }

    /// Sum of the letter values.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|l| l.0).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `I[w]`: each packet of `comp` is bullet-contracted into one letter.
    /// Returns the contracted word and the accumulated bullet sign.
    pub fn contract(&self, comp: &Composition, bullet: BulletSign) -> (Word, Rational) {
        debug_assert_eq!(comp.total(), self.len());
        let letters = comp
            .packets()
            .map(|r| Letter(self.0[r].iter().map(|l| l.0).sum()))
            .collect();
        let merges = self.len() - comp.len();
        (Word(letters), bullet.sign(merges))
    }
}

impl fmt::Display for Word {
    /// Canonical form "a1,a2,...,ak"; the empty word prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map(Letter))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Finite linear combination of words with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    terms: BTreeMap<Word, Rational>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn unit() -> Self {
        TensorPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(w, Rational::one());
        t
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Applies a linear map given on words.
    pub fn map_linear(&self, f: impl Fn(&Word) -> TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in &self.terms {
            for (w2, c2) in f(w).terms {
                out.add_term(w2, c * c2);
            }
        }
        out
    }

    /// Bilinear extension of a product given on words.
    pub fn bilinear(&self, rhs: &TensorPoly, f: impl Fn(&Word, &Word) -> TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (u, a) in &self.terms {
            for (w, b) in &rhs.terms {
                let ab = a * b;
                for (x, c) in f(u, w).terms {
                    out.add_term(x, &ab * c);
                }
            }
        }
        out
    }

    pub fn shuffle(&self, rhs: &TensorPoly) -> TensorPoly {
        self.bilinear(rhs, shuffle)
    }

    pub fn stuffle(&self, rhs: &TensorPoly, mode: SignMode) -> TensorPoly {
        self.bilinear(rhs, |u, w| stuffle(u, w, mode))
    }
}

impl From<Word> for TensorPoly {
    fn from(w: Word) -> Self {
        TensorPoly::from_word(w)
    }
}

impl Add<&TensorPoly> for &TensorPoly {
    type Output = TensorPoly;
    fn add(self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&TensorPoly> for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &TensorPoly) -> TensorPoly {
        self + &(-rhs)
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;
    fn neg(self) -> TensorPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*({w})")?;
        }
        Ok(())
    }
}

fn place(u: &Word, w: &Word, q: &QuasiShuffle) -> Word {
    let mut slots: Vec<i64> = vec![0; q.target_size];
    for (pos, &t) in q.assignment.iter().enumerate() {
        let l = if pos < u.len() {
            u.0[pos]
        } else {
            w.0[pos - u.len()]
        };
        slots[t] += l.0;
    }
    Word::new(slots)
}

pub fn shuffle(u: &Word, w: &Word) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for q in shuffles(u.len(), w.len()) {
        out.add_term(place(u, w, &q), Rational::one());
    }
    out
}

/// Quasi-shuffle product; merged letters add their values.
pub fn stuffle(u: &Word, w: &Word, mode: SignMode) -> TensorPoly {
    let mut out = TensorPoly::zero();
    let bullet = mode.bullet();
    for q in quasi_shuffles(u.len(), w.len()) {
        out.add_term(place(u, w, &q), bullet.sign(q.merge_count()));
    }
    out
}

/// All splits `(prefix, suffix)` of `w`, from `(1, w)` to `(w, 1)`.
pub fn deconcat(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.len())
        .map(|i| (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())))
        .collect()
}

/// Splits with both sides nonempty.
pub fn reduced_deconcat(w: &Word) -> Vec<(Word, Word)> {
    (1..w.len())
        .map(|i| (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())))
        .collect()
}

/// `exp u = sum_{I in P(n)} I[u] / (i_1! ... i_k!)`, extended linearly.
pub fn hoffman_exp(t: &TensorPoly, bullet: BulletSign) -> TensorPoly {
    t.map_linear(|w| {
        hoffman_sum(w, bullet, |comp| {
            let d: Rational = comp.parts().iter().map(|&i| factorial(i as u64)).product();
            d.recip().expect("nonzero")
        })
    })
}

/// `log u = sum_{I in P(n)} (-1)^(n-k) / (i_1 ... i_k) I[u]`, extended linearly.
pub fn hoffman_log(t: &TensorPoly, bullet: BulletSign) -> TensorPoly {
    t.map_linear(|w| {
        hoffman_sum(w, bullet, |comp| {
            let d: Rational = comp.parts().iter().map(|&i| Rational::from(i)).product();
            let c = d.recip().expect("nonzero");
            if (w.len() - comp.len()) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    })
}

fn hoffman_sum(
    w: &Word,
    bullet: BulletSign,
    coeff: impl Fn(&Composition) -> Rational,
) -> TensorPoly {
    if w.is_empty() {
        return TensorPoly::unit();
    }
    let mut out = TensorPoly::zero();
    for comp in compositions(w.len()) {
        let (contracted, sign) = w.contract(&comp, bullet);
        out.add_term(contracted, coeff(&comp) * sign);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Word {
        Word::new(v.iter().copied())
    }

    fn tp(terms: &[(&[i64], Rational)]) -> TensorPoly {
        let mut t = TensorPoly::zero();
        for (v, c) in terms {
            t.add_term(w(v), c.clone());
        }
        t
    }

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            shuffle(&w(&[1]), &w(&[2])),
            tp(&[(&[1, 2], one()), (&[2, 1], one())])
        );
        assert_eq!(
            shuffle(&Word::empty(), &w(&[4, 5])),
            TensorPoly::from_word(w(&[4, 5]))
        );
        assert_eq!(
            shuffle(&w(&[1, 2]), &w(&[3])),
            tp(&[
                (&[1, 2, 3], one()),
                (&[1, 3, 2], one()),
                (&[3, 1, 2], one())
            ])
        );
        // repeated letters collect multiplicities
        assert_eq!(
            shuffle(&w(&[1]), &w(&[1])),
            tp(&[(&[1, 1], Rational::from(2))])
        );
    }

    #[test]
    fn stuffle_examples() {
        let strict = stuffle(&w(&[1]), &w(&[2]), SignMode::Strict);
        assert_eq!(
            strict,
            tp(&[(&[1, 2], one()), (&[2, 1], one()), (&[3], one())])
        );
        let weak = stuffle(&w(&[1]), &w(&[2]), SignMode::Weak);
        assert_eq!(
            weak,
            tp(&[(&[1, 2], one()), (&[2, 1], one()), (&[3], -one())])
        );
        assert_eq!(
            stuffle(&Word::empty(), &w(&[7]), SignMode::Strict),
            TensorPoly::from_word(w(&[7]))
        );
    }

    #[test]
    fn deconcat_examples() {
        assert_eq!(
            deconcat(&w(&[1, 2])),
            vec![
                (w(&[]), w(&[1, 2])),
                (w(&[1]), w(&[2])),
                (w(&[1, 2]), w(&[]))
            ]
        );
        assert_eq!(deconcat(&Word::empty()), vec![(w(&[]), w(&[]))]);
        assert_eq!(
            reduced_deconcat(&w(&[1, 2, 3])),
            vec![(w(&[1]), w(&[2, 3])), (w(&[1, 2]), w(&[3]))]
        );
    }

    #[test]
    fn hoffman_examples() {
        let half = Rational::frac(1, 2);
        let third = Rational::frac(1, 3);
        let e = hoffman_exp(&w(&[1, 2]).into(), BulletSign::Plus);
        assert_eq!(e, tp(&[(&[1, 2], one()), (&[3], half.clone())]));
        let l = hoffman_log(&w(&[1, 2, 4]).into(), BulletSign::Plus);
        assert_eq!(
            l,
            tp(&[
                (&[1, 2, 4], one()),
                (&[3, 4], -half.clone()),
                (&[1, 6], -half.clone()),
                (&[7], third),
            ])
        );
        assert_eq!(
            hoffman_exp(&w(&[5]).into(), BulletSign::Minus),
            TensorPoly::from_word(w(&[5]))
        );
        let em = hoffman_exp(&w(&[1, 2]).into(), BulletSign::Minus);
        assert_eq!(em, tp(&[(&[1, 2], one()), (&[3], -half)]));
    }

    #[test]
    fn word_string_form() {
        assert_eq!(w(&[1, 0, 3]).to_string(), "1,0,3");
        assert_eq!(" 2, 5 ".parse::<Word>().unwrap(), w(&[2, 5]));
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert!("1,x".parse::<Word>().is_err());
    }
}
