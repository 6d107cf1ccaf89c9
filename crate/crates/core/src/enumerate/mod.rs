//! Combinatorial families and the bijections between them.

mod bijection;
mod iter;
mod objects;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

pub use bijection::{code_to_tree, code_to_word, tree_to_code, tree_to_word, word_to_code, word_to_tree};
pub use iter::{next_permutation, CodeIter, PermIter, QZeroIter, SignedPermIter, StirlingIter};
pub use objects::{
    is_permutation, is_stirling, SignedPerm, SpCode, StirlingVariant, StirlingWord, TernaryTree,
};

use crate::error::{Result, SpkError};

/// Default cap on the number of objects a single enumeration may produce.
pub const DEFAULT_CAP: u64 = 21_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Stirling permutations `Q_n`.
    Q,
    /// `Q_n^(1)`: the two 1s are adjacent.
    Q1,
    /// `Q_n^(0)`: one copy of 1, two of each of `2..=n`.
    Q0,
    /// Signed permutations.
    SB,
    /// Signed permutations with an even number of negative entries.
    SD,
    /// Permutations.
    S,
    /// SP-codes.
    Code,
    /// Ternary increasing trees.
    Tree,
    /// Fixed-point-free permutations.
    Derange,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Q,
        Family::Q1,
        Family::Q0,
        Family::SB,
        Family::SD,
        Family::S,
        Family::Code,
        Family::Tree,
        Family::Derange,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Q => "q",
            Family::Q1 => "q1",
            Family::Q0 => "q0",
            Family::SB => "sb",
            Family::SD => "sd",
            Family::S => "s",
            Family::Code => "code",
            Family::Tree => "tree",
            Family::Derange => "derange",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = SpkError;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| SpkError::UnknownFamily(s.to_string()))
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn double_factorial_odd(n: u64) -> BigUint {
    // (2n-1)!!
    (1..=n).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

fn derangements(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    if n == 0 {
        return a;
    }
    for k in 2..=n {
        let c = (&a + &b) * (k - 1);
        a = b;
        b = c;
    }
    b
}

/// Closed-form size of a family. Families that start at `n = 1` are empty at `n = 0`.
pub fn count_family(family: Family, n: usize) -> BigUint {
    let m = n as u64;
    let two_pow = |e: u64| BigUint::one() << e;
    match family {
        Family::Q | Family::Code | Family::Tree if n == 0 => BigUint::zero(),
        Family::Q1 | Family::Q0 if n == 0 => BigUint::zero(),
        Family::Q | Family::Code | Family::Tree => double_factorial_odd(m),
        Family::Q1 | Family::Q0 => two_pow(m - 1) * factorial(m - 1),
        Family::SB => two_pow(m) * factorial(m),
        Family::SD if n == 0 => BigUint::one(),
        Family::SD => two_pow(m - 1) * factorial(m),
        Family::S => factorial(m),
        Family::Derange => derangements(m),
    }
}

/// Fails with a resource-guard error when the family at `n` exceeds `cap` objects.
pub fn guard(family: Family, n: usize, cap: u64) -> Result<()> {
    let size = match family {
        // derangements are filtered from all of S_n
        Family::Derange => count_family(Family::S, n),
        // SD is filtered from SB
        Family::SD => count_family(Family::SB, n),
        _ => count_family(family, n),
    };
    if size.to_u64().is_none_or(|s| s > cap) {
        return Err(SpkError::ResourceGuard {
            family: family.to_string(),
            n,
            size: size.to_string(),
            cap,
        });
    }
    Ok(())
}

/// One member of some family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Word(StirlingWord),
    Signed(SignedPerm),
    Perm(Vec<u8>),
    Code(SpCode),
    Tree(TernaryTree),
}

impl Object {
    /// JSON form: words and permutations as integer arrays, codes as pair
    /// arrays, trees as parallel parent and slot arrays.
    pub fn to_json(&self) -> Value {
        match self {
            Object::Word(w) => json!(w.letters()),
            Object::Signed(p) => json!(p.values()),
            Object::Perm(p) => json!(p),
            Object::Code(c) => json!(c.pairs()),
            Object::Tree(t) => {
                let ps = t.parent_slots();
                json!({
                    "parent": ps.iter().map(|p| p.0).collect::<Vec<_>>(),
                    "slot": ps.iter().map(|p| p.1).collect::<Vec<_>>(),
                })
            }
        }
    }
}

impl Serialize for Object {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(" ");
        match self {
            Object::Word(w) => write!(f, "{w}"),
            Object::Signed(p) => f.write_str(&join(p.values().iter().map(|v| v.to_string()).collect())),
            Object::Perm(p) => f.write_str(&join(p.iter().map(|v| v.to_string()).collect())),
            Object::Code(c) => {
                for (a, b) in c.pairs() {
                    write!(f, "({a},{b})")?;
                }
                Ok(())
            }
            Object::Tree(t) => {
                let parts: Vec<String> = (1..=t.size() as u8)
                    .map(|v| {
                        let [l, m, r] = t.children(v);
                        format!("{v}:[{l},{m},{r}]")
                    })
                    .collect();
                f.write_str(&join(parts))
            }
        }
    }
}

/// Streams every member of `family` at size `n`, each exactly once.
///
/// Q, Q1, Q0 follow the insertion recursion; S and SB are lexicographic
/// (SB: permutation first, then sign mask); CODE is lexicographic and TREE
/// follows CODE.
pub fn enumerate_family(
    family: Family,
    n: usize,
    cap: u64,
) -> Result<Box<dyn Iterator<Item = Object> + Send>> {
    guard(family, n, cap)?;
    let needs_positive = matches!(
        family,
        Family::Q | Family::Q1 | Family::Q0 | Family::Code | Family::Tree
    );
    if needs_positive && n == 0 {
        return Ok(Box::new(std::iter::empty()));
    }
    Ok(match family {
        Family::Q => Box::new(StirlingIter::new(n, false).map(|(w, _)| Object::Word(w))),
        Family::Q1 => Box::new(StirlingIter::new(n, true).map(|(w, _)| Object::Word(w))),
        Family::Q0 => Box::new(QZeroIter::new(n).map(Object::Word)),
        Family::SB => Box::new(SignedPermIter::new(n).map(Object::Signed)),
        Family::SD => Box::new(
            SignedPermIter::new(n)
                .filter(|p| p.neg() % 2 == 0)
                .map(Object::Signed),
        ),
        Family::S => Box::new(PermIter::new(n).map(Object::Perm)),
        Family::Derange => Box::new(
            PermIter::new(n)
                .filter(|p| p.iter().enumerate().all(|(i, &v)| v as usize != i + 1))
                .map(Object::Perm),
        ),
        Family::Code => Box::new(CodeIter::new(n).map(Object::Code)),
        Family::Tree => Box::new(CodeIter::new(n).map(|c| {
            Object::Tree(code_to_tree(&c).expect("generated codes are valid"))
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(f: Family, n: usize) -> u64 {
        count_family(f, n).to_u64().unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(count(Family::SB, 3), 48);
        assert_eq!(count(Family::Q, 3), 15);
        assert_eq!(count(Family::Q1, 3), 8);
        assert_eq!(count(Family::Q0, 2), 2);
        assert_eq!(count(Family::SD, 3), 24);
        assert_eq!(count(Family::Derange, 4), 9);
        assert_eq!(count(Family::Derange, 1), 0);
        assert_eq!(count(Family::Code, 4), 105);
    }

    #[test]
    fn streams_match_counts() {
        for f in Family::ALL {
            for n in 1..=5 {
                let got = enumerate_family(f, n, DEFAULT_CAP).unwrap().count() as u64;
                assert_eq!(got, count(f, n), "{f} at n={n}");
            }
        }
    }

    #[test]
    fn q2_set() {
        let mut got: Vec<String> = enumerate_family(Family::Q, 2, DEFAULT_CAP)
            .unwrap()
            .map(|o| o.to_string())
            .collect();
        got.sort();
        assert_eq!(got, ["1122", "1221", "2211"]);
    }

    #[test]
    fn resource_guard() {
        assert!(matches!(
            enumerate_family(Family::Q, 9, DEFAULT_CAP),
            Err(SpkError::ResourceGuard { .. })
        ));
        assert!(enumerate_family(Family::Q, 8, DEFAULT_CAP).is_ok());
        assert!(enumerate_family(Family::SB, 3, 47).is_err());
        assert!("Q1".parse::<Family>().is_ok());
        assert!("q2".parse::<Family>().is_err());
    }

    #[test]
    fn object_json() {
        let t = code_to_tree(&SpCode::new(vec![(0, 0), (1, 3)]).unwrap()).unwrap();
        assert_eq!(
            Object::Tree(t).to_json().to_string(),
            r#"{"parent":[0,1],"slot":[0,3]}"#
        );
        let c = Object::Code(SpCode::new(vec![(0, 0), (1, 3)]).unwrap());
        assert_eq!(c.to_json().to_string(), "[[0,0],[1,3]]");
        assert_eq!(c.to_string(), "(0,0)(1,3)");
    }
}
