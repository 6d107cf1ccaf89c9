use num_bigint::BigInt;
use spk::catalog::{
    family_poly, family_poly_enumerated, gamma_substitute, gamma_table, run_check, run_check_at,
    stirling2, CheckId, CheckOptions, FamilyName, GammaSpec, SpecName,
};
use spk::enumerate::DEFAULT_CAP;
use spk::poly;

fn table_rows(n: usize) -> Vec<((u32, u32, u32), i64)> {
    let mut rows: Vec<_> = gamma_table(n)
        .unwrap()
        .rows()
        .into_iter()
        .map(|(ijk, g)| (ijk, i64::try_from(g).unwrap()))
        .collect();
    rows.sort();
    rows
}

#[test]
fn gamma_tables_listed_and_frozen() {
    assert_eq!(table_rows(1), [((0, 0, 1), 1)]);
    assert_eq!(table_rows(2), [((0, 1, 1), 1)]);
    assert_eq!(table_rows(3), [((0, 2, 1), 1), ((1, 0, 2), 2)]);
    assert_eq!(table_rows(4), [((0, 0, 3), 6), ((0, 3, 1), 1), ((1, 1, 2), 8)]);
    // checked against brute-force C_5 and C_6 over all Stirling permutations
    assert_eq!(table_rows(5), [((0, 1, 3), 42), ((0, 4, 1), 1), ((1, 2, 2), 22), ((2, 0, 3), 16)]);
    assert_eq!(
        table_rows(6),
        [((0, 2, 3), 192), ((0, 5, 1), 1), ((1, 0, 4), 180), ((1, 3, 2), 52), ((2, 1, 3), 136)]
    );
    assert_eq!(
        table_rows(8),
        [
            ((0, 1, 5), 9612),
            ((0, 4, 3), 2538),
            ((0, 7, 1), 1),
            ((1, 2, 4), 17928),
            ((1, 5, 2), 240),
            ((2, 0, 5), 7056),
            ((2, 3, 3), 3072),
            ((3, 1, 4), 3968),
        ]
    );
    for n in 1..=10 {
        gamma_table(n).unwrap().validate().unwrap();
    }
}

#[test]
fn substitution_examples() {
    let sub = |n: usize, s: SpecName| gamma_substitute(&gamma_table(n).unwrap(), &GammaSpec::builtin(s)).unwrap();
    assert_eq!(sub(2, SpecName::C3), poly("x^2*y^2*z + x*y^2*z^2 + x^2*y*z^2"));
    assert_eq!(sub(2, SpecName::Q8), poly("x*y*z*p*q*r*s*(x*y*p + x*z*q + y*z*r)"));
    assert_eq!(sub(1, SpecName::F17), poly("x*y*z*p*q*r*s"));
    // C_4 by brute force over the 105 words of Q_4
    let c4 = poly(
        "x*y^4*z^4 + 11*x^2*y^3*z^4 + 11*x^2*y^4*z^3 + 11*x^3*y^2*z^4 + 36*x^3*y^3*z^3 \
         + 11*x^3*y^4*z^2 + x^4*y*z^4 + 11*x^4*y^2*z^3 + 11*x^4*y^3*z^2 + x^4*y^4*z",
    );
    assert_eq!(sub(4, SpecName::C3), c4);
}

#[test]
fn family_examples() {
    let b3 = "(1 + y + 10*x*y + 10*x*y^2 + x^2*y^2 + x^2*y^3) + (6*y + 6*x*y + 6*x*y^2 + 6*x^2*y^2)";
    assert_eq!(family_poly(FamilyName::LowerB, 3).unwrap(), poly(b3));
    assert_eq!(family_poly(FamilyName::Xi, 3).unwrap(), poly("1 + 2*x"));
    assert_eq!(family_poly(FamilyName::Zeta, 3).unwrap(), poly("6"));
    assert_eq!(family_poly(FamilyName::T, 2).unwrap(), poly("x + x^2"));
    // b_4 by brute force over the 384 signed permutations
    let b4 = poly(
        "1 + 15*y + 61*x*y + 115*x*y^2 + 115*x^2*y^2 + 61*x^2*y^3 + 15*x^3*y^3 + x^3*y^4",
    );
    assert_eq!(family_poly(FamilyName::LowerB, 4).unwrap(), b4);
}

#[test]
fn fast_routes_match_enumeration() {
    for name in FamilyName::ALL {
        for n in name.min_n()..=5 {
            let fast = family_poly(name, n).unwrap();
            if let Some(slow) = family_poly_enumerated(name, n, DEFAULT_CAP).unwrap() {
                assert_eq!(fast, slow, "{} n={n}", name.as_str());
            }
        }
    }
}

#[test]
fn stirling_numbers() {
    assert_eq!(stirling2(3, 2).unwrap(), BigInt::from(3));
    for n in 1..=8 {
        assert_eq!(stirling2(n, n).unwrap(), BigInt::from(1));
        assert_eq!(stirling2(n, 0).unwrap(), BigInt::from(0));
    }
    assert_eq!(stirling2(0, 0).unwrap(), BigInt::from(1));
}

#[test]
fn named_checks() {
    let o = CheckOptions::default();
    for (id, n) in [(CheckId::ThmBnExpansion, 7), (CheckId::CorOneMinusY, 6), (CheckId::Carlitz, 6)] {
        let rows = run_check(id, n, &o);
        assert_eq!(rows.last().unwrap().n, n);
        assert!(rows.iter().all(|r| r.passed), "{rows:?}");
    }
    let row = run_check_at(CheckId::TypeDStembridge, 1, &o);
    assert!(!row.passed && row.counterexample.is_some());
}

#[test]
fn every_check_passes_at_small_n() {
    let o = CheckOptions::default();
    for &id in CheckId::ALL {
        let rows = run_check(id, 4, &o);
        assert!(!rows.is_empty(), "{id}");
        assert!(rows.iter().all(|r| r.passed), "{rows:?}");
        assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
    }
    assert!("not-a-check".parse::<CheckId>().is_err());
}

#[test]
fn ceilings_and_deep() {
    let shallow = run_check(CheckId::Thm34F17, 99, &CheckOptions::default());
    assert_eq!(shallow.last().unwrap().n, 5);
    let deep = CheckOptions { deep: true, ..CheckOptions::default() };
    assert_eq!(spk::catalog::check_range(CheckId::Thm34F17, 99, &deep), 1..=6);
}
