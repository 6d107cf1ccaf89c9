use proptest::prelude::*;
use spk::catalog::{g1_route, g2_route, lemma21_route, signed_poly};
use spk::grammar::{builtin, Grammar, GrammarName};
use spk::{poly, var, Monomial, Polynomial};

fn arb_in(names: &'static [&'static str]) -> impl Strategy<Value = Polynomial> {
    let term = (-9i64..=9, prop::collection::vec(0..=2i32, names.len()));
    prop::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = Polynomial::zero();
        for (c, exps) in terms {
            let m = Monomial::from_pairs(names.iter().map(|n| var(n)).zip(exps));
            p += &Polynomial::term(c, m);
        }
        p
    })
}

const GPRIME: &[&str] = &["a", "b", "c", "d", "E", "q"];
const LEMMA: &[&str] = &["P", "N", "E", "A", "D"];

fn check_derivation(g: &Grammar, p: &Polynomial, q: &Polynomial) -> Result<(), TestCaseError> {
    let d = |x: &Polynomial| g.derive(x).unwrap();
    prop_assert_eq!(d(&(p + q)), &d(p) + &d(q));
    prop_assert_eq!(d(&(p * q)), &(&d(p) * q) + &(p * &d(q)));
    Ok(())
}

proptest! {
    #[test]
    fn gprime_is_a_derivation(p in arb_in(GPRIME), q in arb_in(GPRIME)) {
        check_derivation(&builtin(GrammarName::GPrime), &p, &q)?;
    }

    #[test]
    fn lemma21_is_a_derivation(p in arb_in(LEMMA), q in arb_in(LEMMA)) {
        check_derivation(&builtin(GrammarName::Lemma21), &p, &q)?;
    }

    #[test]
    fn iterate_composes(p in arb_in(LEMMA), j in 0usize..3, k in 0usize..3) {
        let g = builtin(GrammarName::Lemma21);
        let once = g.derive_iter(&g.derive_iter(&p, j).unwrap(), k).unwrap();
        prop_assert_eq!(once, g.derive_iter(&p, j + k).unwrap());
    }
}

#[test]
fn h_and_i_agree_up_to_t_marking() {
    let h = builtin(GrammarName::H);
    let i = builtin(GrammarName::I);
    for n in 1..=8usize {
        let from_h = h.derive_iter(&poly("w"), n - 1).unwrap();
        let from_i = i.derive_iter(&poly("P"), n - 1).unwrap();
        // each u -> 3w step keeps the degree and is the step I marks with t
        let mut marked = Polynomial::zero();
        for (m, c) in from_h.terms() {
            let renamed = Monomial::from_pairs(m.exponents().iter().map(|&(v, e)| {
                let to = match v.name() {
                    "w" => "P",
                    "v" => "P1",
                    "u" => "P2",
                    other => panic!("unexpected variable {other}"),
                };
                (var(to), e)
            }));
            let t = n as i32 - m.total_degree() as i32;
            marked.add_term(renamed.mul(&Monomial::pow_of(var("t"), t)), c.clone());
        }
        assert_eq!(marked, from_i, "n={n}");
    }
}

#[test]
fn lemma21_route_matches_enumeration() {
    for n in 1..=7 {
        let b = signed_poly(n, &["x", "y"], u64::MAX, |r| vec![r.des_a as i32, r.des_b as i32]).unwrap();
        assert_eq!(lemma21_route(n).unwrap(), b, "n={n}");
    }
}

#[test]
fn g1_and_g2_routes_agree() {
    for n in 1..=7 {
        assert_eq!(g1_route(n).unwrap(), g2_route(n).unwrap(), "n={n}");
    }
}

#[test]
fn derive_examples() {
    assert_eq!(builtin(GrammarName::H).derive(&poly("w")).unwrap(), poly("v*w"));
    assert_eq!(builtin(GrammarName::Gxyz).derive(&poly("x")).unwrap(), poly("x*y*z"));
    let gp = builtin(GrammarName::GPrime);
    assert_eq!(gp.derive(&poly("a*E")).unwrap(), poly("a*d*E + 2*b*E"));
    assert_eq!(gp.derive_iter(&poly("a*E"), 2).unwrap(), poly("a*E*(d^2 + 8*c) + 6*b*E*d"));
    assert_eq!(builtin(GrammarName::H).derive_iter(&poly("w"), 1).unwrap(), poly("v*w"));
    let i2 = builtin(GrammarName::I).derive_iter(&poly("P"), 2).unwrap();
    assert_eq!(i2, poly("P*(P1^2 + 2*P*P2)"));
}

#[test]
fn builtin_rule_sets() {
    let rules = |g: GrammarName| {
        builtin(g).rules().iter().map(|(v, p)| (v.name().to_string(), p.clone())).collect::<Vec<_>>()
    };
    let expect = |pairs: &[(&str, &str)]| {
        let mut v: Vec<_> = pairs.iter().map(|&(a, b)| (a.to_string(), poly(b))).collect();
        v.sort_by_key(|x| var(&x.0));
        v
    };
    assert_eq!(
        rules(GrammarName::GPrime),
        expect(&[("a", "2*b"), ("b", "2*a*c + b*d"), ("c", "2*c*d"), ("d", "4*c"), ("E", "d*E")])
    );
    assert_eq!(
        rules(GrammarName::G1),
        expect(&[
            ("P", "P*D + q*N*A"),
            ("N", "P*D + q*N*A"),
            ("E", "(A + q*D)*E"),
            ("A", "(1 + q)*A*D"),
            ("D", "(1 + q)*A*D"),
        ])
    );
    assert_eq!(
        rules(GrammarName::J),
        expect(&[("delta", "delta*delta1"), ("delta1", "2*delta*delta2"), ("delta2", "3*t*delta")])
    );
    assert!("nonesuch".parse::<GrammarName>().is_err());
}

#[test]
fn zero_steps_is_identity() {
    for g in GrammarName::ALL {
        assert_eq!(builtin(g).derive_iter(&g.seed(), 0).unwrap(), g.seed());
    }
}
