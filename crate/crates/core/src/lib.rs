//! Renormalised multiple (Hurwitz) zeta values at nonpositive integers,
//! computed in exact rational arithmetic.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactnum`]: rationals, polynomials, rational functions, Laurent series
//! - [`combinat`]: Bernoulli numbers, Faulhaber sums, compositions, quasi-shuffles
//! - [`words`]: shuffle and stuffle products, deconcatenation, Hoffman exp/log
//! - [`emsum`]: residue and finite part of regularised nested power sums
//! - [`mzv`]: renormalised strict, weak and alternative zeta values, identity checks
//! - [`chenint`]: the continuous side, iterated integrals of power-log symbols
//! - [`cli`]: the `mzv` command-line front end

pub mod chenint;
pub mod cli;
pub mod combinat;
pub mod emsum;
pub mod exactnum;
pub mod mzv;
pub mod words;

pub use exactnum::{LaurentSeries, Poly, Rational, RationalFunction};
