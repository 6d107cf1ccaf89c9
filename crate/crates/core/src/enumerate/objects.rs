use serde::Serialize;

use crate::error::{Result, SpkError};

/// Which restriction a Stirling word satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StirlingVariant {
    /// Any Stirling permutation of `{1,1,2,2,...,n,n}`.
    Full,
    /// The two copies of 1 are adjacent.
    AdjacentOnes,
    /// Multiset `{1,2,2,...,n,n}` with a single 1.
    SingleOne,
}

/// A Stirling permutation (or one of its restricted variants).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingWord {
    letters: Vec<u8>,
}

impl StirlingWord {
    /// Validates `letters` as a member of `Q_n` for `n = len / 2`.
    pub fn new(letters: Vec<u8>) -> Result<StirlingWord> {
        if letters.is_empty() || letters.len() % 2 != 0 {
            return Err(SpkError::InvalidObject(format!(
                "Stirling word must have positive even length: {letters:?}"
            )));
        }
        let n = letters.len() / 2;
        if !has_multiplicities(&letters, n, 2) || !is_stirling(&letters) {
            return Err(SpkError::InvalidObject(format!(
                "not a Stirling permutation: {letters:?}"
            )));
        }
        Ok(StirlingWord { letters })
    }

    /// Validates `letters` as a member of `Q^(0)` (single 1, other values twice).
    pub fn new_single_one(letters: Vec<u8>) -> Result<StirlingWord> {
        if letters.len() % 2 != 1 {
            return Err(SpkError::InvalidObject(format!(
                "Q0 word must have odd length: {letters:?}"
            )));
        }
        let n = letters.len().div_ceil(2);
        let mut counts = vec![0usize; n + 1];
        for &l in &letters {
            if l == 0 || l as usize > n {
                return Err(SpkError::InvalidObject(format!("letter {l} out of range")));
            }
            counts[l as usize] += 1;
        }
        if counts[1] != 1 || counts[2..].iter().any(|&c| c != 2) || !is_stirling(&letters) {
            return Err(SpkError::InvalidObject(format!(
                "not a Q0 Stirling word: {letters:?}"
            )));
        }
        Ok(StirlingWord { letters })
    }

    pub(crate) fn from_trusted(letters: Vec<u8>) -> StirlingWord {
        StirlingWord { letters }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    /// Number of distinct values.
    pub fn order(&self) -> usize {
        self.letters.len().div_ceil(2)
    }

    pub fn variant(&self) -> StirlingVariant {
        if self.letters.len() % 2 == 1 {
            StirlingVariant::SingleOne
        } else if self.letters.windows(2).any(|w| w == [1, 1]) {
            StirlingVariant::AdjacentOnes
        } else {
            StirlingVariant::Full
        }
    }
}

impl std::fmt::Display for StirlingWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.letters.iter().any(|&l| l > 9) { "," } else { "" };
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

fn has_multiplicities(letters: &[u8], n: usize, each: usize) -> bool {
    let mut counts = vec![0usize; n + 1];
    for &l in letters {
        if l == 0 || l as usize > n {
            return false;
        }
        counts[l as usize] += 1;
    }
    counts[1..].iter().all(|&c| c == each)
}

/// Independent check of the Stirling property: between two equal letters,
/// every letter is strictly larger.
pub fn is_stirling(letters: &[u8]) -> bool {
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[j] == letters[i] {
                if letters[i + 1..j].iter().any(|&s| s <= letters[i]) {
                    return false;
                }
                break;
            }
        }
    }
    true
}

/// A signed permutation `pi(1) ... pi(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SignedPerm {
    values: Vec<i32>,
}

impl SignedPerm {
    pub fn new(values: Vec<i32>) -> Result<SignedPerm> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(SpkError::InvalidObject(format!(
                    "not a signed permutation: {values:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { values })
    }

    pub(crate) fn from_trusted(values: Vec<i32>) -> SignedPerm {
        SignedPerm { values }
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn neg(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }
}

/// A Stirling permutation code `((0,0),(a_1,b_1),...,(a_{n-1},b_{n-1}))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SpCode {
    pairs: Vec<(u8, u8)>,
}

impl SpCode {
    pub fn new(pairs: Vec<(u8, u8)>) -> Result<SpCode> {
        let code = SpCode { pairs };
        code.validate()?;
        Ok(code)
    }

    pub(crate) fn from_trusted(pairs: Vec<(u8, u8)>) -> SpCode {
        SpCode { pairs }
    }

    /// Checks `1 <= a_i <= i`, `1 <= b_i <= 3` and that all pairs are distinct.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SpkError::InvalidObject(msg));
        if self.pairs.first() != Some(&(0, 0)) {
            return bad(format!("SP-code must start with (0,0): {:?}", self.pairs));
        }
        let mut used = std::collections::HashSet::new();
        for (i, &(a, b)) in self.pairs.iter().enumerate().skip(1) {
            if a == 0 || a as usize > i || !(1..=3).contains(&b) {
                return bad(format!("pair {i} = ({a},{b}) out of range"));
            }
            if !used.insert((a, b)) {
                return bad(format!("pair ({a},{b}) repeated"));
            }
        }
        Ok(())
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// For each value `a` in `1..=n`, the bitmask of slots `b` with `(a,b)` in the code
    /// (bit 0 = slot 1, bit 1 = slot 2, bit 2 = slot 3).
    pub fn slot_masks(&self) -> Vec<u8> {
        let mut masks = vec![0u8; self.pairs.len() + 1];
        for &(a, b) in &self.pairs[1..] {
            masks[a as usize] |= 1 << (b - 1);
        }
        masks
    }
}

/// A ternary increasing tree on `1..=n` in simplified form: each node has three
/// ordered slots (left, middle, right), each empty or holding a larger label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryTree {
    /// `children[v - 1][s]` is the label in slot `s` of node `v`, or 0 when empty.
    children: Vec<[u8; 3]>,
}

impl TernaryTree {
    pub fn single() -> TernaryTree {
        TernaryTree {
            children: vec![[0; 3]],
        }
    }

    pub fn from_children(children: Vec<[u8; 3]>) -> Result<TernaryTree> {
        let t = TernaryTree { children };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_trusted(children: Vec<[u8; 3]>) -> TernaryTree {
        TernaryTree { children }
    }

    /// Checks increasing labels and that every non-root node has exactly one parent.
    pub fn validate(&self) -> Result<()> {
        let n = self.children.len();
        let mut parent = vec![0usize; n + 1];
        for (i, slots) in self.children.iter().enumerate() {
            let v = i + 1;
            for &c in slots {
                let c = c as usize;
                if c == 0 {
                    continue;
                }
                if c <= v || c > n || parent[c] != 0 {
                    return Err(SpkError::InvalidObject(format!(
                        "bad child {c} under node {v}"
                    )));
                }
                parent[c] = v;
            }
        }
        if (2..=n).any(|c| parent[c] == 0) {
            return Err(SpkError::InvalidObject("tree is not connected".into()));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: u8) -> [u8; 3] {
        self.children[v as usize - 1]
    }

    pub(crate) fn children_mut(&mut self) -> &mut Vec<[u8; 3]> {
        &mut self.children
    }

    /// `(parent, slot)` for every node, with `(0, 0)` for the root.
    pub fn parent_slots(&self) -> Vec<(u8, u8)> {
        let mut out = vec![(0u8, 0u8); self.children.len()];
        for (i, slots) in self.children.iter().enumerate() {
            for (s, &c) in slots.iter().enumerate() {
                if c != 0 {
                    out[c as usize - 1] = ((i + 1) as u8, (s + 1) as u8);
                }
            }
        }
        out
    }

    /// Counts of exterior left, middle and right nodes of the full tree, i.e.
    /// empty slots of each kind.
    pub fn exterior_counts(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for slots in &self.children {
            for s in 0..3 {
                if slots[s] == 0 {
                    out[s] += 1;
                }
            }
        }
        out
    }
}

/// Checks that `values` is a permutation of `1..=n`.
pub fn is_permutation(values: &[u8]) -> bool {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    values.iter().all(|&v| {
        let v = v as usize;
        v >= 1 && v <= n && !std::mem::replace(&mut seen[v], true)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_validation() {
        assert!(StirlingWord::new(vec![1, 2, 2, 1]).is_ok());
        assert!(StirlingWord::new(vec![1, 2, 1, 2]).is_err());
        assert!(StirlingWord::new(vec![2, 1, 1, 2]).is_err());
        assert!(StirlingWord::new(vec![1, 1, 2]).is_err());
        assert!(StirlingWord::new_single_one(vec![2, 2, 1]).is_ok());
        assert!(StirlingWord::new_single_one(vec![2, 1, 2]).is_err());
        let w = StirlingWord::new(vec![3, 3, 1, 1, 2, 2]).unwrap();
        assert_eq!(w.variant(), StirlingVariant::AdjacentOnes);
        assert_eq!(w.to_string(), "331122");
    }

    #[test]
    fn code_validation() {
        assert!(SpCode::new(vec![(0, 0), (1, 3)]).is_ok());
        assert!(SpCode::new(vec![(0, 0), (2, 1)]).is_err());
        assert!(SpCode::new(vec![(0, 0), (1, 1), (1, 1)]).is_err());
        assert!(SpCode::new(vec![(0, 0), (1, 4)]).is_err());
        assert!(SpCode::new(vec![(1, 1)]).is_err());
    }

    #[test]
    fn signed_validation() {
        assert!(SignedPerm::new(vec![-2, 3, -1, 5, 4]).is_ok());
        assert!(SignedPerm::new(vec![-2, 2]).is_err());
        assert!(SignedPerm::new(vec![0]).is_err());
    }

    #[test]
    fn tree_validation() {
        assert!(TernaryTree::from_children(vec![[2, 3, 0], [0; 3], [0; 3]]).is_ok());
        assert!(TernaryTree::from_children(vec![[2, 0, 0], [0; 3], [0; 3]]).is_err());
        assert!(TernaryTree::from_children(vec![[0; 3], [1, 0, 0]]).is_err());
        let t = TernaryTree::from_children(vec![[0, 0, 2], [0; 3]]).unwrap();
        assert_eq!(t.exterior_counts(), [2, 2, 1]);
        assert_eq!(t.parent_slots(), vec![(0, 0), (1, 3)]);
    }
}
