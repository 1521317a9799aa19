use mzv::exactnum::laurent_expand;
use mzv::{Poly, Rational, RationalFunction};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

/// `num / (z^k * unit)` with `unit(0) != 0`.
fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(3), 0usize..=2, rational(), poly(2)).prop_filter_map(
        "unit vanishes at 0",
        |(num, k, u0, rest)| {
            if u0.is_zero() {
                return None;
            }
            let unit = &Poly::constant(u0) + &(&Poly::x() * &rest);
            let den = &Poly::monomial(Rational::one(), k) * &unit;
            RationalFunction::new(num, den).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn display_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_eval_is_a_ring_map(p in poly(5), r in poly(5), x in rational()) {
        prop_assert_eq!((&p + &r).eval(&x), p.eval(&x) + r.eval(&x));
        prop_assert_eq!((&p * &r).eval(&x), p.eval(&x) * r.eval(&x));
        prop_assert_eq!((&p - &r).eval(&x), p.eval(&x) - r.eval(&x));
    }

    #[test]
    fn poly_division(p in poly(6), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let (quo, rem) = p.div_rem(&d).unwrap();
        prop_assert_eq!(&(&quo * &d) + &rem, p);
        if let (Some(rd), Some(dd)) = (rem.degree(), d.degree()) {
            prop_assert!(rd < dd);
        }
    }

    #[test]
    fn interpolation_recovers(p in poly(6)) {
        let points: Vec<(Rational, Rational)> =
            (0..7).map(|i| { let x = Rational::from(i as i64); (x.clone(), p.eval(&x)) }).collect();
        prop_assert_eq!(Poly::interpolate(&points).unwrap(), p);
    }

    #[test]
    fn laurent_expansion_is_multiplicative(f in ratfunc(), g in ratfunc(), order in 0i64..=3) {
        let pf = f.pole_order() as i64;
        let pg = g.pole_order() as i64;
        let lhs = laurent_expand(&(&f * &g), order);
        let rhs = laurent_expand(&f, order + pg).mul(&laurent_expand(&g, order + pf)).truncate(order).unwrap();
        for e in -(pf + pg)..=order {
            prop_assert_eq!(lhs.coeff(e).unwrap(), rhs.coeff(e).unwrap(), "z^{}", e);
        }
    }

    #[test]
    fn ratfunc_normalised(f in ratfunc()) {
        prop_assert!(f.is_zero() || f.den().leading().unwrap().is_one());
        prop_assert!(f.num().gcd(f.den()).degree() == Some(0) || f.is_zero());
    }
}

#[test]
fn laurent_window_is_enforced() {
    let f = RationalFunction::new(Poly::one(), Poly::x()).unwrap();
    let s = laurent_expand(&f, 2);
    assert!(s.coeff(3).is_err());
    assert_eq!(s.residue().unwrap(), Rational::one());
}
