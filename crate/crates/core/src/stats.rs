//! Statistics on Stirling words, SP-codes, signed permutations and permutations.
//!
//! Words are padded with `0` at both ends. Writing `L = 2n`:
//! `asc` and `des` range over `i` in `1..=L`, the plateau family over
//! `1..L`, `rpd`/`pasc` over `2..=L`, and `ap` over `2..L`. The pair
//! statistics look at the two copies of each value.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{SignedPerm, SpCode, StirlingWord};
use crate::error::{Result, SpkError};

macro_rules! stat_record {
    ($($field:ident),* $(,)?) => {
        /// Counters for every Stirling-permutation statistic.
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
        pub struct StatRecord {
            $(pub $field: u32,)*
        }

        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        #[allow(non_camel_case_types)]
        pub enum Stat {
            $($field,)*
        }

        impl Stat {
            pub const ALL: &'static [Stat] = &[$(Stat::$field,)*];

            pub fn name(&self) -> &'static str {
                match self {
                    $(Stat::$field => stringify!($field),)*
                }
            }
        }

        impl StatRecord {
            pub fn get(&self, s: Stat) -> u32 {
                match s {
                    $(Stat::$field => self.$field,)*
                }
            }
        }
    };
}

stat_record!(
    asc, plat, des, lap, rpd, eud, apd, vv, dplat, dasc, dd, uu, ddes, pasc, apap, dpa, pdpd, ap,
);

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = SpkError;

    fn from_str(s: &str) -> Result<Stat> {
        Stat::ALL
            .iter()
            .copied()
            .find(|st| st.name() == s)
            .ok_or_else(|| SpkError::OutOfRange(format!("unknown statistic `{s}`")))
    }
}

impl StatRecord {
    /// Number of values whose slot set `S_a` is, in order: empty, `{1}`,
    /// `{2}`, `{3}`, `{1,2}`, `{1,3}`, `{2,3}`, `{1,2,3}`.
    pub fn class_counts(&self) -> [i64; 8] {
        let g = |x: u32| x as i64;
        [
            g(self.apd),
            g(self.dplat) - g(self.dpa),
            g(self.dasc) - g(self.apap),
            g(self.pasc) - g(self.dpa),
            g(self.pdpd),
            g(self.dpa),
            g(self.apap),
            g(self.vv),
        ]
    }

    /// `n + 2 apd - lap - eud - rpd - vv`, the exponent of the `1/3` factor in
    /// the homogenized expansion.
    pub fn alpha_exponent(&self, n: usize) -> i64 {
        n as i64 + 2 * self.apd as i64
            - self.lap as i64
            - self.eud as i64
            - self.rpd as i64
            - self.vv as i64
    }
}

/// Statistics of a word of `Q_n`, read directly off the letters.
pub fn word_stats(w: &StirlingWord) -> StatRecord {
    letter_stats(w.letters())
}

/// As [`word_stats`] on a raw letter slice of even length.
pub fn letter_stats(letters: &[u8]) -> StatRecord {
    let n = letters.len() / 2;
    let l = 2 * n;
    let mut s = vec![0u8; l + 3];
    s[1..=l].copy_from_slice(letters);
    // s[l + 2] is an extra sentinel so the `i + 2` lookahead stays in range
    let mut r = StatRecord::default();
    for i in 1..=l {
        let (a, b, c) = (s[i - 1], s[i], s[i + 1]);
        r.asc += (a < b) as u32;
        r.des += (b > c) as u32;
        r.dasc += (a < b && b < c) as u32;
        r.ddes += (a > b && b > c) as u32;
        if i < l {
            let d = s[i + 2];
            let plat = b == c;
            r.plat += plat as u32;
            r.lap += (a < b && plat) as u32;
            r.dplat += (a > b && plat) as u32;
            r.apd += (a < b && plat && c > d) as u32;
            r.dpa += (a > b && plat && c < d) as u32;
            r.ap += (i >= 2 && a < b && plat) as u32;
        }
        if i >= 2 {
            r.rpd += (a == b && b > c) as u32;
            r.pasc += (a == b && b < c) as u32;
        }
    }
    let mut first = vec![0usize; n + 1];
    let mut second = vec![0usize; n + 1];
    for i in 1..=l {
        let v = s[i] as usize;
        if first[v] == 0 {
            first[v] = i;
        } else {
            second[v] = i;
        }
    }
    for v in 1..=n {
        let (i, j) = (first[v], second[v]);
        let up_i = s[i - 1] < s[i];
        let down_j = s[j] > s[j + 1];
        r.eud += (up_i && down_j) as u32;
        r.dd += (s[i - 1] > s[i] && down_j) as u32;
        r.uu += (up_i && s[j] < s[j + 1]) as u32;
        let valley = |k: usize| s[k - 1] > s[k] && s[k] < s[k + 1];
        r.vv += (valley(i) && valley(j)) as u32;
        r.apap += (up_i && s[i] < s[i + 1] && s[j] < s[j + 1]) as u32;
        r.pdpd += (s[i - 1] > s[i] && s[j - 1] > s[j] && s[j] > s[j + 1]) as u32;
    }
    r
}

/// Statistics of the word encoded by `c`, read off the slot sets `S_a`.
///
/// `ap` is not determined by the code and is left at zero.
pub fn code_stats(c: &SpCode) -> StatRecord {
    let mut r = StatRecord::default();
    for &m in &c.slot_masks()[1..] {
        let (u1, u2, u3) = (m & 1 != 0, m & 2 != 0, m & 4 != 0);
        let add = |x: &mut u32, b: bool| *x += b as u32;
        add(&mut r.asc, !u1);
        add(&mut r.plat, !u2);
        add(&mut r.des, !u3);
        add(&mut r.lap, !u1 && !u2);
        add(&mut r.rpd, !u2 && !u3);
        add(&mut r.eud, !u1 && !u3);
        add(&mut r.apd, !u1 && !u2 && !u3);
        add(&mut r.vv, u1 && u2 && u3);
        add(&mut r.dplat, u1 && !u2);
        add(&mut r.dasc, !u1 && u2);
        add(&mut r.dd, u1 && !u3);
        add(&mut r.uu, !u1 && u3);
        add(&mut r.ddes, u2 && !u3);
        add(&mut r.pasc, !u2 && u3);
        add(&mut r.apap, !u1 && u2 && u3);
        add(&mut r.dpa, u1 && !u2 && u3);
        add(&mut r.pdpd, u1 && u2 && !u3);
    }
    r
}

/// The statistics of a word in `Q^(0)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct QZeroStatRecord {
    pub lap: u32,
    pub ap: u32,
    pub even: u32,
}

/// Statistics of a `Q^(0)` word: positions are 1-based and `sigma_0 = 0`.
pub fn qzero_stats(w: &StirlingWord) -> QZeroStatRecord {
    qzero_letter_stats(w.letters())
}

pub fn qzero_letter_stats(letters: &[u8]) -> QZeroStatRecord {
    let l = letters.len();
    let at = |i: usize| if i == 0 { 0 } else { letters[i - 1] };
    let mut r = QZeroStatRecord::default();
    for i in 1..l {
        if at(i - 1) < at(i) && at(i) == at(i + 1) {
            r.lap += 1;
            r.ap += (i >= 2) as u32;
        }
    }
    let mut seen = vec![false; l + 2];
    for (k, &v) in letters.iter().enumerate() {
        let v = v as usize;
        if !seen[v] {
            seen[v] = true;
            r.even += (v >= 2 && (k + 1) % 2 == 0) as u32;
        }
    }
    r
}

/// Descent statistics of a signed permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SignedStatRecord {
    pub des_a: u32,
    pub des_b: u32,
    pub neg: u32,
    pub fdes: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub des_d: Option<u32>,
}

/// `desA` ignores position 0, `desB` uses `pi(0) = 0`, `desD` uses
/// `pi(0) = -pi(2)` and is only defined for `n >= 2`.
pub fn signed_stats(p: &SignedPerm) -> SignedStatRecord {
    let v = p.values();
    let des_a = v.windows(2).filter(|w| w[0] > w[1]).count() as u32;
    let first_neg = v.first().is_some_and(|&x| x < 0) as u32;
    let des_b = des_a + first_neg;
    let des_d = (v.len() >= 2).then(|| des_a + (v[0] + v[1] < 0) as u32);
    SignedStatRecord {
        des_a,
        des_b,
        neg: p.neg() as u32,
        fdes: des_a + des_b,
        des_d,
    }
}

/// `desD` alone, failing for `n < 2`.
pub fn des_d(p: &SignedPerm) -> Result<u32> {
    signed_stats(p)
        .des_d
        .ok_or_else(|| SpkError::OutOfRange("desD needs n >= 2".into()))
}

/// Statistics of an ordinary permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PermStatRecord {
    pub des: u32,
    pub exc: u32,
    pub ipk: u32,
    pub lpk: u32,
    pub udrun: u32,
    pub fix: u32,
}

pub fn perm_stats(p: &[u8]) -> PermStatRecord {
    let n = p.len();
    let at = |i: usize| if i == 0 { 0 } else { p[i - 1] };
    let mut r = PermStatRecord::default();
    for i in 1..=n {
        let v = at(i) as usize;
        r.exc += (v > i) as u32;
        r.fix += (v == i) as u32;
        if i < n {
            r.des += (at(i) > at(i + 1)) as u32;
            let peak = at(i - 1) < at(i) && at(i) > at(i + 1);
            r.lpk += peak as u32;
            r.ipk += (peak && i >= 2) as u32;
        }
    }
    if n >= 1 {
        // runs of 0 p(1) ... p(n): one plus the number of direction changes
        r.udrun = 1;
        for i in 1..n {
            let up_before = at(i - 1) < at(i);
            let up_after = at(i) < at(i + 1);
            r.udrun += (up_before != up_after) as u32;
        }
    }
    r
}
