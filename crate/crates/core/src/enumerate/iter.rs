//! Lazy generators for every family.

use super::bijection::gap_pair;
use super::objects::{SignedPerm, SpCode, StirlingWord};

/// Stirling permutations built by inserting `kk` into each gap of a word of
/// order `k-1`, for `k = 2..=n`.
///
/// Every word comes with its code under `Gamma`, read off the insertion
/// history. With `adjacent_ones` the gap between the two 1s is skipped, which
/// yields exactly the words whose 1s stay contiguous.
#[derive(Clone, Debug)]
pub struct StirlingIter {
    n: usize,
    adjacent_ones: bool,
    gaps: Vec<usize>,
    words: Vec<Vec<u8>>,
    pairs: Vec<(u8, u8)>,
    done: bool,
}

impl StirlingIter {
    pub fn new(n: usize, adjacent_ones: bool) -> StirlingIter {
        assert!(n >= 1, "Stirling words need n >= 1");
        let mut it = StirlingIter {
            n,
            adjacent_ones,
            gaps: vec![0; n + 1],
            words: vec![vec![1, 1]; n],
            pairs: vec![(0, 0); n],
            done: false,
        };
        for k in 2..=n {
            it.gaps[k] = it.first_gap(k);
            it.rebuild(k);
        }
        it
    }

    fn skipped(&self, k: usize) -> Option<usize> {
        if !self.adjacent_ones {
            return None;
        }
        let prev = &self.words[k - 2];
        prev.iter().position(|&l| l == 1).map(|i| i + 1)
    }

    fn first_gap(&self, k: usize) -> usize {
        if self.skipped(k) == Some(0) {
            1
        } else {
            0
        }
    }

    fn next_gap(&self, k: usize) -> Option<usize> {
        let last = self.words[k - 2].len();
        let mut g = self.gaps[k] + 1;
        if self.skipped(k) == Some(g) {
            g += 1;
        }
        (g <= last).then_some(g)
    }

    fn rebuild(&mut self, k: usize) {
        let g = self.gaps[k];
        let prev = &self.words[k - 2];
        let left = if g == 0 { 0 } else { prev[g - 1] };
        let right = prev.get(g).copied().unwrap_or(0);
        let mut w = Vec::with_capacity(prev.len() + 2);
        w.extend_from_slice(&prev[..g]);
        w.extend_from_slice(&[k as u8, k as u8]);
        w.extend_from_slice(&prev[g..]);
        self.words[k - 1] = w;
        self.pairs[k - 1] = gap_pair(left, right);
    }

    fn advance(&mut self) {
        let mut k = self.n;
        while k >= 2 {
            if let Some(g) = self.next_gap(k) {
                self.gaps[k] = g;
                self.rebuild(k);
                for j in k + 1..=self.n {
                    self.gaps[j] = self.first_gap(j);
                    self.rebuild(j);
                }
                return;
            }
            k -= 1;
        }
        self.done = true;
    }
}

impl Iterator for StirlingIter {
    type Item = (StirlingWord, SpCode);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = (
            StirlingWord::from_trusted(self.words[self.n - 1].clone()),
            SpCode::from_trusted(self.pairs.clone()),
        );
        self.advance();
        Some(out)
    }
}

/// Words of `Q^(0)` on `{1,2,2,...,n,n}`: each word of `Q^(1)_n` with one of
/// its adjacent 1s deleted.
#[derive(Clone, Debug)]
pub struct QZeroIter {
    inner: StirlingIter,
}

impl QZeroIter {
    pub fn new(n: usize) -> QZeroIter {
        QZeroIter {
            inner: StirlingIter::new(n, true),
        }
    }
}

impl Iterator for QZeroIter {
    type Item = StirlingWord;

    fn next(&mut self) -> Option<StirlingWord> {
        let (w, _) = self.inner.next()?;
        let mut letters = w.into_letters();
        let i = letters.iter().position(|&l| l == 1).expect("word contains 1");
        letters.remove(i);
        Some(StirlingWord::from_trusted(letters))
    }
}

/// Permutations of `1..=n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct PermIter {
    cur: Option<Vec<u8>>,
}

impl PermIter {
    pub fn new(n: usize) -> PermIter {
        PermIter {
            cur: Some((1..=n as u8).collect()),
        }
    }
}

/// Advances `p` to the next permutation in lexicographic order; false at the last one.
pub fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("pivot exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl Iterator for PermIter {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.cur.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            self.cur = Some(next);
        }
        Some(cur)
    }
}

/// Signed permutations: permutations in lexicographic order, and for each the
/// sign masks `0..2^n` in increasing order (bit `i` negates position `i+1`).
#[derive(Clone, Debug)]
pub struct SignedPermIter {
    perms: PermIter,
    cur: Option<Vec<u8>>,
    mask: u32,
    n: usize,
}

impl SignedPermIter {
    pub fn new(n: usize) -> SignedPermIter {
        assert!(n < 32, "sign masks are 32-bit");
        let mut perms = PermIter::new(n);
        let cur = perms.next();
        SignedPermIter {
            perms,
            cur,
            mask: 0,
            n,
        }
    }
}

impl Iterator for SignedPermIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        let p = self.cur.as_ref()?;
        let values = p
            .iter()
            .enumerate()
            .map(|(i, &v)| if self.mask >> i & 1 == 1 { -(v as i32) } else { v as i32 })
            .collect();
        self.mask += 1;
        if self.mask >> self.n != 0 {
            self.mask = 0;
            self.cur = self.perms.next();
        }
        Some(SignedPerm::from_trusted(values))
    }
}

/// SP-codes in lexicographic order of their pair sequences.
#[derive(Clone, Debug)]
pub struct CodeIter {
    pairs: Vec<(u8, u8)>,
    done: bool,
}

impl CodeIter {
    pub fn new(n: usize) -> CodeIter {
        assert!(n >= 1, "codes need n >= 1");
        let mut it = CodeIter {
            pairs: vec![(0, 0); n],
            done: false,
        };
        for i in 1..n {
            it.pairs[i] = it.first_free(i, (1, 1)).expect("a free slot exists");
        }
        it
    }

    /// The first pair `>= from` for position `i` not used by positions `1..i`.
    fn first_free(&self, i: usize, from: (u8, u8)) -> Option<(u8, u8)> {
        let used = &self.pairs[1..i];
        let (mut a, mut b) = from;
        while a as usize <= i {
            if b > 3 {
                a += 1;
                b = 1;
                continue;
            }
            if !used.contains(&(a, b)) {
                return Some((a, b));
            }
            b += 1;
        }
        None
    }
}

impl Iterator for CodeIter {
    type Item = SpCode;

    fn next(&mut self) -> Option<SpCode> {
        if self.done {
            return None;
        }
        let out = SpCode::from_trusted(self.pairs.clone());
        let n = self.pairs.len();
        let mut i = n - 1;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            let (a, b) = self.pairs[i];
            if let Some(p) = self.first_free(i, (a, b + 1)) {
                self.pairs[i] = p;
                for j in i + 1..n {
                    self.pairs[j] = self.first_free(j, (1, 1)).expect("a free slot exists");
                }
                break;
            }
            i -= 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::objects::is_stirling;

    fn words(it: impl Iterator<Item = StirlingWord>) -> Vec<String> {
        it.map(|w| w.to_string()).collect()
    }

    #[test]
    fn q2_insertion_order() {
        let got = words(StirlingIter::new(2, false).map(|(w, _)| w));
        assert_eq!(got, ["2211", "1221", "1122"]);
    }

    #[test]
    fn q1_3_matches_listing() {
        let mut got = words(StirlingIter::new(3, true).map(|(w, _)| w));
        got.sort();
        let mut want = vec![
            "112233", "112332", "113322", "331122", "221133", "223311", "233211", "332211",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn q0_2() {
        let mut got = words(QZeroIter::new(2));
        got.sort();
        assert_eq!(got, ["122", "221"]);
    }

    #[test]
    fn stirling_counts_and_validity() {
        let all: Vec<_> = StirlingIter::new(5, false).collect();
        assert_eq!(all.len(), 945);
        assert!(all.iter().all(|(w, c)| is_stirling(w.letters()) && c.validate().is_ok()));
    }

    #[test]
    fn perms_and_signed() {
        let p: Vec<_> = PermIter::new(3).collect();
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], [1, 2, 3]);
        assert_eq!(p[5], [3, 2, 1]);
        assert_eq!(SignedPermIter::new(3).count(), 48);
        let first: Vec<_> = SignedPermIter::new(2).take(3).collect();
        assert_eq!(first[1].values(), &[-1, 2]);
        assert_eq!(first[2].values(), &[1, -2]);
        assert_eq!(PermIter::new(1).count(), 1);
    }

    #[test]
    fn codes_lexicographic() {
        let c: Vec<_> = CodeIter::new(3).collect();
        assert_eq!(c.len(), 15);
        assert_eq!(c[0].pairs(), &[(0, 0), (1, 1), (1, 2)]);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(CodeIter::new(1).count(), 1);
    }
}
