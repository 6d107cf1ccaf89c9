//! The bijections between ternary increasing trees, Stirling permutations and
//! SP-codes.

use std::cmp::Ordering;

use super::objects::{SpCode, StirlingWord, TernaryTree};
use crate::error::{Result, SpkError};

/// Depth-first reading: `read(L) v read(M) v read(R)` at each node `v`.
pub fn tree_to_word(t: &TernaryTree) -> StirlingWord {
    fn read(t: &TernaryTree, v: u8, out: &mut Vec<u8>) {
        let [l, m, r] = t.children(v);
        if l != 0 {
            read(t, l, out);
        }
        out.push(v);
        if m != 0 {
            read(t, m, out);
        }
        out.push(v);
        if r != 0 {
            read(t, r, out);
        }
    }
    let mut out = Vec::with_capacity(2 * t.size());
    read(t, 1, &mut out);
    StirlingWord::from_trusted(out)
}

/// Inverse of [`tree_to_word`]: split `u1 m u2 m u3` at the two copies of the
/// minimum `m` and hang the minimum of each nonempty part in slot 1, 2, 3.
pub fn word_to_tree(w: &StirlingWord) -> Result<TernaryTree> {
    let letters = w.letters();
    if letters.len() % 2 != 0 {
        return Err(SpkError::InvalidObject(format!(
            "word_to_tree needs a word of Q_n: {w}"
        )));
    }
    let n = letters.len() / 2;
    let mut children = vec![[0u8; 3]; n];
    fn build(part: &[u8], children: &mut Vec<[u8; 3]>) -> Result<u8> {
        let m = *part.iter().min().expect("nonempty part");
        let pos: Vec<usize> = (0..part.len()).filter(|&i| part[i] == m).collect();
        let &[i, j] = pos.as_slice() else {
            return Err(SpkError::InvalidObject(format!(
                "value {m} does not occur exactly twice"
            )));
        };
        let pieces = [&part[..i], &part[i + 1..j], &part[j + 1..]];
        for (slot, piece) in pieces.into_iter().enumerate() {
            if !piece.is_empty() {
                let c = build(piece, children)?;
                children[m as usize - 1][slot] = c;
            }
        }
        Ok(m)
    }
    let root = build(letters, &mut children)?;
    if root != 1 {
        return Err(SpkError::InvalidObject(format!("minimum of {w} is not 1")));
    }
    TernaryTree::from_children(children)
}

/// The build-tree code: node `i` gets `(parent, slot)`.
pub fn tree_to_code(t: &TernaryTree) -> SpCode {
    SpCode::from_trusted(t.parent_slots())
}

pub fn code_to_tree(c: &SpCode) -> Result<TernaryTree> {
    let pairs = c.pairs();
    if pairs.first() != Some(&(0, 0)) {
        return Err(SpkError::InvalidObject("SP-code must start with (0,0)".into()));
    }
    let mut t = TernaryTree::from_trusted(vec![[0u8; 3]; pairs.len()]);
    for (i, &(a, b)) in pairs.iter().enumerate().skip(1) {
        if a == 0 || a as usize > i || !(1..=3).contains(&b) {
            return Err(SpkError::InvalidObject(format!("pair ({a},{b}) out of range")));
        }
        let slot = &mut t.children_mut()[a as usize - 1][b as usize - 1];
        if *slot != 0 {
            return Err(SpkError::InvalidObject(format!(
                "slot {b} of node {a} already occupied"
            )));
        }
        *slot = (i + 1) as u8;
    }
    Ok(t)
}

/// Classifies the gap between `left` and `right` (0 at either boundary) into
/// the code pair recorded when `nn` is inserted there.
pub(crate) fn gap_pair(left: u8, right: u8) -> (u8, u8) {
    match left.cmp(&right) {
        Ordering::Less => (right, 1),
        Ordering::Equal => (right, 2),
        Ordering::Greater => (left, 3),
    }
}

/// `Gamma`: reads off the insertion history by deleting `nn, (n-1)(n-1), ..., 22`.
///
/// Each deletion leaves a gap of the smaller word, classified as ascent,
/// plateau or descent. Fails if two insertions would produce the same pair.
pub fn word_to_code(w: &StirlingWord) -> Result<SpCode> {
    let mut cur = w.letters().to_vec();
    if cur.len() % 2 != 0 {
        return Err(SpkError::InvalidObject(format!("word_to_code needs Q_n: {w}")));
    }
    let n = cur.len() / 2;
    let mut pairs = vec![(0u8, 0u8); n];
    for k in (2..=n as u8).rev() {
        let i = cur
            .iter()
            .position(|&l| l == k)
            .ok_or_else(|| SpkError::InvalidObject(format!("{w} lacks value {k}")))?;
        if cur.get(i + 1) != Some(&k) {
            return Err(SpkError::InvalidObject(format!(
                "largest value {k} is not a plateau in {w}"
            )));
        }
        cur.drain(i..i + 2);
        let left = if i == 0 { 0 } else { cur[i - 1] };
        let right = cur.get(i).copied().unwrap_or(0);
        pairs[k as usize - 1] = gap_pair(left, right);
    }
    if cur != [1, 1] {
        return Err(SpkError::InvalidObject(format!("{w} does not reduce to 11")));
    }
    let mut seen = std::collections::HashSet::new();
    if !pairs[1..].iter().all(|p| seen.insert(*p)) {
        return Err(SpkError::Invariant(format!(
            "gap labels of {w} are not unique: {pairs:?}"
        )));
    }
    Ok(SpCode::from_trusted(pairs))
}

/// `Gamma^{-1}`, computed as `code_to_tree` followed by `tree_to_word`.
pub fn code_to_word(c: &SpCode) -> Result<StirlingWord> {
    Ok(tree_to_word(&code_to_tree(c)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> StirlingWord {
        StirlingWord::new(s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    fn tree(children: Vec<[u8; 3]>) -> TernaryTree {
        TernaryTree::from_children(children).unwrap()
    }

    #[test]
    fn figure_one_trees() {
        assert_eq!(tree_to_word(&tree(vec![[2, 0, 0], [0; 3]])), word("2211"));
        assert_eq!(tree_to_word(&tree(vec![[0, 2, 0], [0; 3]])), word("1221"));
        assert_eq!(tree_to_word(&TernaryTree::single()), word("11"));
        assert_eq!(word_to_tree(&word("1122")).unwrap(), tree(vec![[0, 0, 2], [0; 3]]));
        assert_eq!(word_to_tree(&word("11")).unwrap(), TernaryTree::single());
    }

    #[test]
    fn word_221331() {
        let w = word("221331");
        let t = word_to_tree(&w).unwrap();
        assert_eq!(t, tree(vec![[2, 3, 0], [0; 3], [0; 3]]));
        assert_eq!(tree_to_word(&t), w);
    }

    #[test]
    fn codes() {
        let t = tree(vec![[0, 0, 2], [0; 3]]);
        assert_eq!(tree_to_code(&t).pairs(), &[(0, 0), (1, 3)]);
        assert_eq!(
            code_to_tree(&SpCode::new(vec![(0, 0)]).unwrap()).unwrap(),
            TernaryTree::single()
        );
        let c = SpCode::new(vec![(0, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(code_to_tree(&c).unwrap(), tree(vec![[2, 3, 0], [0; 3], [0; 3]]));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(word_to_code(&word("2211")).unwrap().pairs(), &[(0, 0), (1, 1)]);
        assert_eq!(word_to_code(&word("1221")).unwrap().pairs(), &[(0, 0), (1, 2)]);
        assert_eq!(word_to_code(&word("11")).unwrap().pairs(), &[(0, 0)]);
        let c = SpCode::new(vec![(0, 0), (1, 3)]).unwrap();
        assert_eq!(code_to_word(&c).unwrap(), word("1122"));
    }

    #[test]
    fn code_to_tree_rejects_reused_slot() {
        let c = SpCode::from_trusted(vec![(0, 0), (1, 1), (1, 1)]);
        assert!(code_to_tree(&c).is_err());
    }
}
