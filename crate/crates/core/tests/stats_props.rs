use proptest::prelude::*;
use spk::enumerate::{code_to_word, word_to_code, QZeroIter, SignedPerm, SignedPermIter, SpCode, StirlingIter, StirlingWord};
use spk::stats::{StatRecord, code_stats, des_d, perm_stats, qzero_stats, signed_stats, word_stats, Stat};

fn word(s: &str) -> StirlingWord {
    StirlingWord::new(s.bytes().map(|b| b - b'0').collect()).unwrap()
}

fn q0(s: &str) -> StirlingWord {
    StirlingWord::new_single_one(s.bytes().map(|b| b - b'0').collect()).unwrap()
}

fn perm(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

/// Code-side record with `ap`, which the code does not determine, taken from the word.
fn via_code(c: &SpCode, w: &StirlingWord) -> StatRecord {
    let mut r = code_stats(c);
    r.ap = word_stats(w).ap;
    r
}

fn arb_signed(max_n: usize) -> impl Strategy<Value = SignedPerm> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(p, signs)| {
            SignedPerm::new(p.into_iter().zip(signs).map(|(v, s)| if s { -v } else { v }).collect()).unwrap()
        })
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Vec<u8>> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn signed_invariants(p in arb_signed(9)) {
        let s = signed_stats(&p);
        prop_assert_eq!(s.des_b, s.des_a + u32::from(p.values()[0] < 0));
        prop_assert_eq!(s.fdes, s.des_a + s.des_b);
        prop_assert_eq!(s.neg as usize, p.values().iter().filter(|&&v| v < 0).count());
    }

    #[test]
    fn perm_invariants(p in arb_perm(9)) {
        let s = perm_stats(&p);
        let n = p.len() as u32;
        prop_assert!(s.udrun >= 1);
        prop_assert!(s.des < n);
        prop_assert!(s.exc + s.fix <= n);
        prop_assert!(s.ipk <= s.lpk);
    }
}

#[test]
fn word_examples() {
    let s = word_stats(&word("1122"));
    assert_eq!((s.asc, s.plat, s.des), (2, 2, 1));
    assert_eq!((s.lap, s.eud, s.rpd, s.apd, s.vv), (2, 1, 1, 1, 0));
    let s = word_stats(&word("2211"));
    assert_eq!((s.asc, s.plat, s.des), (1, 2, 2));
    assert_eq!((s.lap, s.eud, s.apd, s.dplat, s.dd), (1, 1, 1, 1, 1));
    // the paper's weight x y^2 z^2 p q r^2 s for 2211 puts rpd at 2
    assert_eq!(s.rpd, 2);
    let s = word_stats(&word("11"));
    assert_eq!((s.asc, s.plat, s.des, s.lap, s.eud, s.rpd, s.apd), (1, 1, 1, 1, 1, 1, 1));
    for st in [Stat::vv, Stat::dplat, Stat::dasc, Stat::dd, Stat::uu, Stat::ddes, Stat::apap, Stat::dpa, Stat::pdpd] {
        assert_eq!(s.get(st), 0, "{st}");
    }
}

#[test]
fn code_examples() {
    let c = SpCode::new(vec![(0, 0), (1, 3)]).unwrap();
    assert_eq!(via_code(&c, &word("1122")), word_stats(&word("1122")));
    assert_eq!(code_stats(&c).ap, 0);
    assert_eq!(code_stats(&SpCode::new(vec![(0, 0)]).unwrap()), word_stats(&word("11")));
    let c = SpCode::new(vec![(0, 0), (1, 1), (1, 2), (1, 3)]).unwrap();
    assert_eq!(code_stats(&c).vv, 1);
    let w = code_to_word(&c).unwrap();
    let l = w.letters();
    let first = l.iter().position(|&x| x == 1).unwrap();
    let second = l.iter().rposition(|&x| x == 1).unwrap();
    let valley = |i: usize| (i == 0 || l[i - 1] > 1) && (i + 1 == l.len() || l[i + 1] > 1);
    assert!(valley(first) && valley(second), "{w:?}");
}

#[test]
fn qzero_examples() {
    let s = qzero_stats(&q0("122"));
    assert_eq!((s.lap, s.ap, s.even), (1, 1, 1));
    let s = qzero_stats(&q0("221"));
    assert_eq!((s.lap, s.ap, s.even), (1, 0, 0));
    assert_eq!(qzero_stats(&q0("23321")).even, 1);
    for n in 1..=6 {
        for w in QZeroIter::new(n) {
            assert!(qzero_stats(&w).even as usize <= n);
        }
    }
}

#[test]
fn signed_examples() {
    let s = signed_stats(&SignedPerm::new(vec![-2, 3, -1, 5, 4]).unwrap());
    assert_eq!((s.des_a, s.des_b, s.neg), (2, 3, 2));
    let s = signed_stats(&SignedPerm::new(vec![1, 2, 3, 4]).unwrap());
    assert_eq!((s.des_a, s.des_b, s.neg), (0, 0, 0));
    let s = signed_stats(&SignedPerm::new(vec![-1]).unwrap());
    assert_eq!((s.des_a, s.des_b, s.neg), (0, 1, 1));
    assert!(des_d(&SignedPerm::new(vec![-1]).unwrap()).is_err());
    assert_eq!(des_d(&SignedPerm::new(vec![-2, 1]).unwrap()).unwrap(), 1);
}

#[test]
fn perm_examples() {
    assert_eq!(perm_stats(&perm("623415")).udrun, 5);
    let s = perm_stats(&perm("12345"));
    assert_eq!((s.udrun, s.des, s.exc, s.ipk, s.lpk, s.fix), (1, 0, 0, 0, 0, 5));
    let s = perm_stats(&perm("21"));
    assert_eq!((s.lpk, s.ipk, s.des, s.exc, s.fix), (1, 0, 1, 1, 0));
}

#[test]
fn table_one_pointwise_and_word_invariants() {
    for n in 1..=6 {
        for (w, c) in StirlingIter::new(n, false) {
            let s = word_stats(&w);
            assert_eq!(via_code(&c, &w), s, "{w:?}");
            assert_eq!(word_to_code(&w).unwrap(), c);
            assert_eq!((s.asc + s.plat + s.des) as usize, 2 * n + 1);
            assert!(s.apd <= s.lap && s.apd <= s.eud && s.apd <= s.rpd);
            let classes = s.class_counts();
            assert!(classes.iter().all(|&k| k >= 0), "{w:?}");
            assert_eq!(classes.iter().sum::<i64>(), n as i64, "{w:?}");
        }
    }
}

#[test]
fn signed_stats_agree_with_a_direct_count() {
    for p in SignedPermIter::new(5) {
        let v = p.values();
        let padded: Vec<i32> = std::iter::once(0).chain(v.iter().copied()).collect();
        let des_b = padded.windows(2).filter(|w| w[0] > w[1]).count() as u32;
        assert_eq!(signed_stats(&p).des_b, des_b);
    }
}
