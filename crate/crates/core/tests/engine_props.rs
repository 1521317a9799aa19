use mzv::emsum::{j_truncation, nested_fp_res, AffineExponent, Engine, Fp};
use mzv::mzv::{
    strict_from_weak, zeta_poly_in_v, zeta_renorm, zeta_strict, zeta_weak, Variant, ZetaArgs,
};
use mzv::Rational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn ex(list: &[(i64, i64)]) -> Vec<AffineExponent> {
    list.iter()
        .map(|&(b, c)| AffineExponent::new(b, Rational::from(c)))
        .collect()
}

fn fp(list: &[(i64, i64)], v: &Rational) -> Rational {
    match nested_fp_res(&ex(list), v).unwrap().fp {
        Fp::Rational(x) => x,
        Fp::NonRational => panic!("{list:?} has a non-rational finite part"),
    }
}

/// Bernoulli numbers with B_1 = -1/2 from sum_{i<k} C(k,i) B_i = 0.
fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut binom = vec![vec![Rational::one()]];
    for k in 1..=n + 1 {
        let prev = &binom[k - 1];
        let row: Vec<Rational> = (0..=k)
            .map(|i| {
                let left = if i > 0 {
                    prev[i - 1].clone()
                } else {
                    Rational::zero()
                };
                let right = if i < k {
                    prev[i].clone()
                } else {
                    Rational::zero()
                };
                left + right
            })
            .collect();
        binom.push(row);
    }
    let mut b = vec![Rational::one()];
    for k in 1..=n {
        let s: Rational = (0..k).map(|i| &binom[k + 1][i] * &b[i]).sum();
        b.push(-s / Rational::from(k as i64 + 1));
    }
    b
}

fn fact(n: i64) -> Rational {
    (1..=n).map(Rational::from).product()
}

fn choose(n: i64, k: i64) -> Rational {
    fact(n) / (fact(k) * fact(n - k))
}

/// Closed form for zeta(-a,-b) built from Bernoulli numbers alone.
fn depth_two_oracle(a: i64, b: i64) -> Rational {
    let bn = bernoulli_table(20);
    let zeta1 = |n: i64| {
        // zeta(-n) = -B_{n+1}(1)/(n+1), with B_1(1) = +1/2
        let b1 = if n == 0 {
            q(1, 2)
        } else {
            bn[(n + 1) as usize].clone()
        };
        -b1 / Rational::from(n + 1)
    };
    let first: Rational = (0..=b + 1)
        .map(|s| choose(b + 1, s) * &bn[s as usize] * zeta1(a + b - s + 1))
        .sum::<Rational>()
        / Rational::from(b + 1);
    let sign = if (a + 1) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let last = sign * fact(a) * fact(b) / (Rational::from(2) * fact(a + b + 2))
        * &bn[(a + b + 2) as usize];
    first + zeta1(a) * zeta1(b) + last
}

#[test]
fn depth_two_matches_bernoulli_formula() {
    for a in 0..=6 {
        for b in 0..=6 {
            assert_eq!(
                fp(&[(a, 1), (b, 1)], &q(0, 1)),
                depth_two_oracle(a, b),
                "a={a} b={b}"
            );
        }
    }
}

#[test]
fn regularised_stuffle_at_equal_perturbation() {
    for v in [q(0, 1), q(1, 2)] {
        for a in 0..=5 {
            for b in 0..=5 {
                let lhs = fp(&[(a, 1)], &v) * fp(&[(b, 1)], &v);
                let rhs =
                    fp(&[(a, 1), (b, 1)], &v) + fp(&[(b, 1), (a, 1)], &v) + fp(&[(a + b, 2)], &v);
                assert_eq!(lhs, rhs, "a={a} b={b} v={v}");
            }
        }
    }
}

#[test]
fn holomorphic_on_nonnegative_exponents() {
    let engine = Engine::new();
    for v in [q(0, 1), q(1, 3)] {
        for b1 in 0..=4 {
            for b2 in 0..=4 {
                for c1 in 1..=3 {
                    for c2 in 1..=3 {
                        for tail in [vec![], vec![(1, 1)], vec![(3, 2), (0, 3)]] {
                            let mut list = vec![(b1, c1), (b2, c2)];
                            list.extend(tail);
                            let d = engine.nested_fp_res(&ex(&list), &v).unwrap();
                            assert!(d.res.is_zero(), "{list:?} v={v}");
                            assert!(matches!(d.fp, Fp::Rational(_)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn truncation_examples() {
    assert_eq!(j_truncation(&ex(&[(-3, 1)])), 1);
    assert_eq!(j_truncation(&ex(&[(2, 1), (1, 1)])), 4);
}

#[test]
fn capped_cache_gives_the_same_values() {
    let capped = Engine::with_capacity_limit(4);
    let free = Engine::new();
    for list in [
        &[(2, 1), (1, 1), (0, 2)][..],
        &[(4, 1), (0, 1), (3, 3), (1, 1)],
        &[(0, 1), (-2, 1)],
    ] {
        let v = q(3, 7);
        assert_eq!(
            capped.nested_fp_res(&ex(list), &v),
            free.nested_fp_res(&ex(list), &v)
        );
    }
    assert!(capped.cache_len() <= 4);
}

#[test]
fn conversion_between_variants() {
    for a in 0..=5 {
        for b in 0..=5 {
            let v = q(0, 1);
            let gap = zeta_weak(&[a, b], &v).unwrap() - zeta_strict(&[a, b], &v).unwrap();
            assert_eq!(gap, zeta_strict(&[a + b], &v).unwrap(), "a={a} b={b}");
        }
    }
}

fn args() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=4, 1..=3)
}

fn shift() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn weak_to_strict_round_trip(a in args(), v in shift()) {
        prop_assert_eq!(strict_from_weak(&a, &v).unwrap(), zeta_strict(&a, &v).unwrap());
    }

    #[test]
    fn polynomial_in_v_agrees(a in args(), v in shift()) {
        let p = zeta_poly_in_v(&a, Variant::Strict).unwrap();
        prop_assert_eq!(p.eval(&v), zeta_strict(&a, &v).unwrap());
        let deg = a.iter().sum::<i64>() as usize + a.len();
        prop_assert!(p.degree().is_none_or(|d| d <= deg));
        let r = zeta_renorm(&ZetaArgs::new(a.clone(), v.clone(), Variant::Strict)).unwrap();
        prop_assert_eq!(r.as_poly_in_v, Some(p));
    }

    #[test]
    fn j_stability(list in prop::collection::vec((0i64..=4, 1i64..=3), 1..=3), last in (-4i64..=4, 1i64..=3), v in shift()) {
        let mut list = list;
        list.push(last);
        let e = ex(&list);
        let base = Engine::new().nested_fp_res(&e, &v).unwrap();
        prop_assert_eq!(&Engine::with_j_offset(1).nested_fp_res(&e, &v).unwrap(), &base);
        prop_assert_eq!(&Engine::with_j_offset(2).nested_fp_res(&e, &v).unwrap(), &base);
    }
}
