use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use spk::polynomial::{gamma_decompose, gamma_recompose, subs_map};
use spk::{poly, var, Monomial, Polynomial, RationalPoint};

fn arb_poly(laurent: bool) -> impl Strategy<Value = Polynomial> {
    let lo = if laurent { -2 } else { 0 };
    let term = (-20i64..=20, lo..=3i32, lo..=3i32, 0..=2i32);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (c, a, b, e) in terms {
            let m = Monomial::from_pairs([(var("x"), a), (var("y"), b), (var("z"), e)]);
            p += &Polynomial::term(c, m);
        }
        p
    })
}

fn point(x: i64, y: i64, z: i64) -> RationalPoint {
    let r = |v: i64| BigRational::from_integer(v.into());
    RationalPoint::new().with(var("x"), r(x)).with(var("y"), r(y)).with(var("z"), r(z))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(true), b in arb_poly(true), c in arb_poly(true)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in arb_poly(true)) {
        let text = a.to_string();
        let back: Polynomial = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(false), b in arb_poly(false), x in -3i64..4, y in -3i64..4, z in -3i64..4) {
        let pt = point(x, y, z);
        let ev = |p: &Polynomial| p.eval_at(&pt).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn substitution_commutes_with_evaluation(a in arb_poly(false), u in arb_poly(false), x in -3i64..4, y in -3i64..4, z in -3i64..4) {
        let pt = point(x, y, z);
        let mut subs = BTreeMap::new();
        subs.insert(var("x"), u.clone());
        let lhs = a.substitute(&subs).unwrap().eval_at(&pt).unwrap();
        let ux = u.eval_at(&pt).unwrap();
        let rhs = a.eval_at(&RationalPoint::new().with(var("x"), ux).with(var("y"), BigRational::from_integer(y.into())).with(var("z"), BigRational::from_integer(z.into()))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_leibniz(a in arb_poly(false), b in arb_poly(false)) {
        let x = var("x");
        let lhs = (&a * &b).diff(x).unwrap();
        let rhs = &(&a.diff(x).unwrap() * &b) + &(&a * &b.diff(x).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_round_trip(g in prop::collection::vec(-30i64..30, 1..5), extra in 0usize..2) {
        let n = 2 * g.len() - 1 + extra;
        let g: Vec<BigInt> = g.into_iter().map(BigInt::from).collect();
        let p = gamma_recompose(&g, n, var("x"));
        let back = gamma_decompose(&p, n).unwrap();
        let len = back.len().min(g.len());
        prop_assert_eq!(&back[..len], &g[..len]);
        prop_assert!(back[len..].iter().all(|c| c == &BigInt::from(0)));
    }
}

#[test]
fn thousand_random_polynomials_serialize_stably() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strat = arb_poly(true);
    for _ in 0..1000 {
        let p = strat.new_tree(&mut runner).unwrap().current();
        let s = p.to_string();
        assert_eq!(s.parse::<Polynomial>().unwrap().to_string(), s);
    }
}

#[test]
fn addition_examples() {
    assert_eq!((poly("x") + poly("y")).to_string(), "x + y");
    assert!((poly("x") + poly("-x")).is_zero());
    let b2 = poly("1 + y + x*y + x*y^2") + poly("2*y + 2*x*y");
    assert_eq!(b2, poly("1 + 3*y + 3*x*y + x*y^2"));
}

#[test]
fn multiplication_examples() {
    assert_eq!(poly("x") * poly("y"), poly("x*y"));
    assert_eq!(poly("1 + x").pow(2), poly("1 + 2*x + x^2"));
    assert_eq!(
        poly("x*y*z") * poly("x*y + y*z + z*x"),
        poly("x^2*y^2*z + x*y^2*z^2 + x^2*y*z^2")
    );
}

#[test]
fn substitution_examples() {
    let c2 = poly("x^2*y^2*z + x*y^2*z^2 + x^2*y*z^2");
    let s = subs_map([("u", poly("x + y + z"))]);
    assert_eq!(poly("u").substitute(&s).unwrap(), poly("x + y + z"));
    let s = subs_map([("v", poly("x*y + y*z + z*x")), ("w", poly("x*y*z"))]);
    assert_eq!(poly("v*w").substitute(&s).unwrap(), c2);
    let s = subs_map([("a", poly("1 + y")), ("b", poly("x*y + y")), ("c", poly("x*y")), ("d", poly("1 + x*y")), ("E", poly("1"))]);
    let b2 = poly("a*E*d + 2*b*E").substitute(&s).unwrap();
    assert_eq!(b2, poly("1 + 3*y + 3*x*y + x*y^2"));
}

#[test]
fn derivative_examples() {
    let x = var("x");
    assert_eq!(poly("x^2").diff(x).unwrap(), poly("2*x"));
    assert_eq!(poly("x*y").diff(x).unwrap(), poly("y"));
    let t2 = poly("x + x^2");
    let t3 = poly("x*(2*x + 1)") * t2.clone() + poly("x*(1 - x^2)") * t2.diff(x).unwrap();
    assert_eq!(t3, poly("x + 3*x^2 + 2*x^3"));
    assert_eq!(t3.coefficient_sum(), BigInt::from(6));
}

#[test]
fn evaluation_examples() {
    let one = |names: &[&str]| {
        names.iter().fold(RationalPoint::new(), |pt, v| pt.with(var(v), BigRational::from_integer(1.into())))
    };
    let b2 = poly("1 + 3*y + 3*x*y + x*y^2");
    assert_eq!(b2.eval_at(&one(&["x", "y"])).unwrap(), BigRational::from_integer(8.into()));
    let c2 = poly("x^2*y^2*z + x*y^2*z^2 + x^2*y*z^2");
    assert_eq!(c2.eval_at(&one(&["x", "y", "z"])).unwrap(), BigRational::from_integer(3.into()));
    let laurent = poly("x^-1");
    let zero = RationalPoint::new().with(var("x"), BigRational::from_integer(0.into()));
    assert!(laurent.eval_at(&zero).is_err());
}

#[test]
fn coefficient_extraction() {
    let vars = [var("a"), var("b"), var("E")].into_iter().collect();
    let got = poly("a*E*d + 2*b*E").coeff_extract(&vars);
    assert_eq!(got.len(), 2);
    assert_eq!(got[&Monomial::from_pairs([(var("a"), 1), (var("E"), 1)])], poly("d"));
    assert_eq!(got[&Monomial::from_pairs([(var("b"), 1), (var("E"), 1)])], poly("2"));
    let got = poly("a*E*(d^2 + 8*c) + 6*b*E*d").coeff_extract(&vars);
    assert_eq!(got[&Monomial::from_pairs([(var("a"), 1), (var("E"), 1)])], poly("d^2 + 8*c"));
    assert_eq!(got[&Monomial::from_pairs([(var("b"), 1), (var("E"), 1)])], poly("6*d"));
    assert!(Polynomial::zero().coeff_extract(&vars).is_empty());
}

#[test]
fn gamma_examples() {
    let ints = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    assert_eq!(gamma_decompose(&poly("1 + 4*x + x^2"), 3).unwrap(), ints(&[1, 2]));
    assert_eq!(gamma_decompose(&poly("1 + 6*x + x^2"), 3).unwrap(), ints(&[1, 4]));
    assert_eq!(gamma_decompose(&poly("(1 + x)^2"), 3).unwrap(), ints(&[1, 0]));
    assert!(gamma_decompose(&poly("1 + 2*x"), 3).is_err());
}

#[test]
fn derivative_rejects_negative_exponents() {
    assert!(poly("x^-1 + y").diff(var("x")).is_err());
    assert_eq!(poly("x^-1 + y").diff(var("y")).unwrap(), poly("1"));
}

#[test]
fn canonical_text() {
    assert_eq!(Polynomial::zero().to_string(), "0");
    // ascending graded order, so constants lead
    assert_eq!(poly("x^2*y - 3").to_string(), "-3 + x^2*y");
    assert_eq!(poly("y + 1").to_string(), "1 + y");
}
