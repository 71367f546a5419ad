use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Int;

use super::format_symbols;

/// Word over {1..n} in which every letter occurs exactly k times and all
/// entries between two occurrences of i are at least i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KStirlingWord {
    letters: Vec<usize>,
    n: usize,
    k: usize,
}

impl KStirlingWord {
    pub fn new(letters: Vec<usize>, n: usize, k: usize) -> Result<Self> {
        if !is_k_stirling(&letters, n, k) {
            return Err(Error::InvalidStirlingWord(format!(
                "not a valid word of order {n} with {k} copies per letter"
            )));
        }
        Ok(KStirlingWord { letters, n, k })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>, n: usize, k: usize) -> Self {
        debug_assert!(is_k_stirling(&letters, n, k));
        KStirlingWord { letters, n, k }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for KStirlingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_symbols(&self.letters, self.n, f)
    }
}

/// Membership test: multiplicity condition plus the betweenness condition,
/// checked between consecutive occurrences of every letter (equivalent to
/// checking all pairs).
pub fn is_k_stirling(letters: &[usize], n: usize, k: usize) -> bool {
    if n == 0 || k == 0 || letters.len() != n * k {
        return false;
    }
    let mut count = vec![0usize; n + 1];
    for &l in letters {
        if l < 1 || l > n {
            return false;
        }
        count[l] += 1;
    }
    if count[1..].iter().any(|&c| c != k) {
        return false;
    }
    let mut last_seen = vec![usize::MAX; n + 1];
    for (pos, &l) in letters.iter().enumerate() {
        if last_seen[l] != usize::MAX && letters[last_seen[l] + 1..pos].iter().any(|&m| m < l) {
            return false;
        }
        last_seen[l] = pos;
    }
    true
}

/// Number of k-Stirling words of order n: prod_{i=1}^{n-1} (ik + 1).
pub fn k_stirling_count(n: usize, k: usize) -> Int {
    let mut acc = Int::from(1);
    for i in 1..n {
        acc *= Int::from(i * k + 1);
    }
    acc
}

/// Streams every k-Stirling word of order n exactly once, depth-first by
/// insertion offset: the word of order m is obtained from the word of
/// order m-1 by inserting the block m^k at an offset counted from the
/// right end, offset 0 (append) first. The stream therefore opens with
/// 1^k 2^k ... n^k and is memory-bounded: only the n partial words live
/// at any time.
pub fn k_stirling_words(n: usize, k: usize) -> KStirlingWords {
    assert!(n >= 1 && k >= 1, "k-Stirling words need n, k >= 1");
    let mut words = Vec::with_capacity(n);
    let mut offsets = Vec::with_capacity(n.saturating_sub(1));
    words.push(vec![1; k]);
    for m in 2..=n {
        let appended = insert_block(&words[m - 2], m, k, 0);
        words.push(appended);
        offsets.push(0);
    }
    KStirlingWords {
        n,
        k,
        words,
        offsets,
        started: false,
        done: false,
    }
}

pub struct KStirlingWords {
    n: usize,
    k: usize,
    /// words[m-1] holds the current word of order m.
    words: Vec<Vec<usize>>,
    /// offsets[m-2] is the right-offset at which block m^k was inserted.
    offsets: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for KStirlingWords {
    type Item = KStirlingWord;

    fn next(&mut self) -> Option<KStirlingWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        // Deepest level whose offset can still grow; the block m^k fits
        // into k(m-1) + 1 gaps of the order-(m-1) word.
        for idx in (0..self.offsets.len()).rev() {
            if self.offsets[idx] < self.k * (idx + 1) {
                self.offsets[idx] += 1;
                self.rebuild_from(idx);
                return Some(self.current());
            }
            self.offsets[idx] = 0;
        }
        self.done = true;
        None
    }
}

impl KStirlingWords {
    fn rebuild_from(&mut self, level: usize) {
        for idx in level..self.offsets.len() {
            self.words[idx + 1] =
                insert_block(&self.words[idx], idx + 2, self.k, self.offsets[idx]);
        }
    }

    fn current(&self) -> KStirlingWord {
        KStirlingWord::from_letters_unchecked(self.words[self.n - 1].clone(), self.n, self.k)
    }
}

fn insert_block(base: &[usize], letter: usize, k: usize, right_offset: usize) -> Vec<usize> {
    let pos = base.len() - right_offset;
    let mut word = Vec::with_capacity(base.len() + k);
    word.extend_from_slice(&base[..pos]);
    word.extend(std::iter::repeat_n(letter, k));
    word.extend_from_slice(&base[pos..]);
    word
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::super::permutation::permutations;
    use super::*;

    #[test]
    fn membership_examples() {
        assert!(is_k_stirling(&[1, 2, 2, 1], 2, 2));
        assert!(!is_k_stirling(&[1, 2, 1, 2], 2, 2));
        assert!(is_k_stirling(&[1, 1, 2, 2, 3, 3, 3, 2, 1], 3, 3));
    }

    #[test]
    fn membership_rejects_bad_multiplicities() {
        assert!(!is_k_stirling(&[1, 1, 1, 2], 2, 2));
        assert!(!is_k_stirling(&[1, 1, 3, 3], 2, 2));
        assert!(!is_k_stirling(&[1, 1], 2, 2));
    }

    #[test]
    fn order_two_stream_matches_golden_order() {
        let all: Vec<String> = k_stirling_words(2, 2).map(|w| w.to_string()).collect();
        assert_eq!(all, vec!["1122", "1221", "2211"]);
    }

    #[test]
    fn single_letter_word() {
        let all: Vec<String> = k_stirling_words(1, 3).map(|w| w.to_string()).collect();
        assert_eq!(all, vec!["111"]);
    }

    #[test]
    fn order_three_stream_is_valid_distinct_and_counted() {
        let all: Vec<_> = k_stirling_words(3, 2).collect();
        assert_eq!(all.len(), 15);
        assert_eq!(k_stirling_count(3, 2), Int::from(15));
        let distinct: HashSet<_> = all.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(distinct.len(), 15);
        for w in &all {
            assert!(is_k_stirling(w.letters(), 3, 2));
        }
    }

    #[test]
    fn one_copy_per_letter_gives_the_symmetric_group() {
        let words: HashSet<Vec<usize>> = k_stirling_words(4, 1)
            .map(|w| w.letters().to_vec())
            .collect();
        let perms: HashSet<Vec<usize>> = permutations(4).map(|p| p.values().to_vec()).collect();
        assert_eq!(words, perms);
    }

    #[test]
    fn stream_is_deterministic() {
        let a: Vec<_> = k_stirling_words(4, 2).collect();
        let b: Vec<_> = k_stirling_words(4, 2).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn full_grid_yields_are_valid_distinct_and_counted() {
        // largest cell: |Q_7(3)| = 1106560
        for n in 1..=7 {
            for k in 1..=3 {
                let mut distinct: HashSet<Vec<u8>> = HashSet::new();
                let mut yielded = 0u64;
                for w in k_stirling_words(n, k) {
                    yielded += 1;
                    assert!(is_k_stirling(w.letters(), n, k), "n={n} k={k} word={w}");
                    distinct.insert(w.letters().iter().map(|&l| l as u8).collect());
                }
                assert_eq!(Int::from(yielded), k_stirling_count(n, k), "n={n} k={k}");
                assert_eq!(
                    Int::from(distinct.len()),
                    k_stirling_count(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }
}
