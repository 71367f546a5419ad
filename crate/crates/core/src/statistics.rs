//! Scalar statistics on permutations, words, and inversion sequences,
//! as pure stateless functions. Index ranges follow the definitions
//! exactly; the comparisons are all integer-exact (the inversion-sequence
//! ascent uses cross-multiplication instead of fractions).

use crate::error::{Error, Result};
use crate::objects::{InversionSequence, KStirlingWord, Permutation};

/// Ascents of a k-inversion sequence: positions i in {1..n-1} with
/// e_i / ((i-1)k+1) < e_{i+1} / (ik+1), decided exactly as
/// e_i (ik+1) < e_{i+1} ((i-1)k+1).
pub fn inversion_ascents(e: &InversionSequence) -> usize {
    let k = e.k();
    let entries = e.entries();
    let mut count = 0;
    for t in 0..entries.len().saturating_sub(1) {
        let i = t + 1;
        if entries[t] * (i * k + 1) < entries[t + 1] * ((i - 1) * k + 1) {
            count += 1;
        }
    }
    count
}

/// Longest ascent-plateaux of a k-Stirling word: indices i in
/// {2, ..., nk-k+1} with w_{i-1} < w_i = w_{i+1} = ... = w_{i+k-1}.
/// Requires k >= 2.
pub fn ascent_plateaus(word: &KStirlingWord) -> Result<usize> {
    let k = word.k();
    if k < 2 {
        return Err(Error::RequiresK2 { k });
    }
    Ok(count_plateaus(word.letters(), k, false))
}

/// The variant with a virtual leading 0: indices start at 1, so an
/// initial run of k equal letters also counts. Requires k >= 2.
pub fn ascent_plateaus0(word: &KStirlingWord) -> Result<usize> {
    let k = word.k();
    if k < 2 {
        return Err(Error::RequiresK2 { k });
    }
    Ok(count_plateaus(word.letters(), k, true))
}

fn count_plateaus(letters: &[usize], k: usize, virtual_zero: bool) -> usize {
    let len = letters.len();
    let lo = if virtual_zero { 1 } else { 2 };
    let hi = len + 1 - k; // nk - k + 1
    let mut count = 0;
    for i in lo..=hi {
        let prev = if i == 1 { 0 } else { letters[i - 2] };
        let v = letters[i - 1];
        if prev < v && letters[i - 1..i + k - 1].iter().all(|&m| m == v) {
            count += 1;
        }
    }
    count
}

/// Excedances: positions i in {1..n-1} with p_i > i.
pub fn excedances(p: &Permutation) -> usize {
    p.values()
        .iter()
        .enumerate()
        .take(p.len().saturating_sub(1))
        .filter(|&(idx, &v)| v > idx + 1)
        .count()
}

/// Cycles in the disjoint cycle representation of i -> p_i.
pub fn cycles(p: &Permutation) -> usize {
    let values = p.values();
    let mut visited = vec![false; values.len()];
    let mut count = 0;
    for start in 0..values.len() {
        if visited[start] {
            continue;
        }
        count += 1;
        let mut at = start;
        while !visited[at] {
            visited[at] = true;
            at = values[at] - 1;
        }
    }
    count
}

/// Ascents of a letter sequence: positions i with w_i < w_{i+1}.
pub fn word_ascents(w: &[usize]) -> usize {
    w.windows(2).filter(|pair| pair[0] < pair[1]).count()
}

/// Plateaux: positions i with w_i = w_{i+1}.
pub fn word_plateaus(w: &[usize]) -> usize {
    w.windows(2).filter(|pair| pair[0] == pair[1]).count()
}

/// Descents: positions i with w_i > w_{i+1}.
pub fn word_descents(w: &[usize]) -> usize {
    w.windows(2).filter(|pair| pair[0] > pair[1]).count()
}

/// Interior peaks: indices i in {2..n-1} with p_{i-1} < p_i > p_{i+1}.
pub fn interior_peaks(p: &Permutation) -> usize {
    p.values()
        .windows(3)
        .filter(|w| w[0] < w[1] && w[1] > w[2])
        .count()
}

/// Left peaks: indices i in {1..n-1} with p_{i-1} < p_i > p_{i+1},
/// taking p_0 = 0.
pub fn left_peaks(p: &Permutation) -> usize {
    let values = p.values();
    let mut count = interior_peaks(p);
    if values.len() >= 2 && values[0] > values[1] {
        count += 1;
    }
    count
}

/// Alternating runs: 1 plus the number of interior direction changes.
/// Undefined for permutations of length < 2.
pub fn alternating_runs(p: &Permutation) -> Result<usize> {
    let values = p.values();
    if values.len() < 2 {
        return Err(Error::RunsUndefined { n: values.len() });
    }
    let changes = values
        .windows(3)
        .filter(|w| (w[0] < w[1] && w[1] > w[2]) || (w[0] > w[1] && w[1] < w[2]))
        .count();
    Ok(changes + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{k_stirling_words, permutations};

    fn perm(values: &[usize]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    fn inv(entries: &[usize], k: usize) -> InversionSequence {
        InversionSequence::new(entries.to_vec(), k).unwrap()
    }

    fn word(letters: &[usize], n: usize, k: usize) -> KStirlingWord {
        KStirlingWord::new(letters.to_vec(), n, k).unwrap()
    }

    #[test]
    fn inversion_ascents_examples() {
        assert_eq!(inversion_ascents(&inv(&[0, 0], 1)), 0);
        assert_eq!(inversion_ascents(&inv(&[0, 1], 1)), 1);
        assert_eq!(inversion_ascents(&inv(&[0, 2, 0], 2)), 1);
    }

    #[test]
    fn ascent_plateau_examples() {
        assert_eq!(
            ascent_plateaus(&word(&[1, 1, 2, 2, 3, 3, 3, 2, 1], 3, 3)).unwrap(),
            1
        );
        assert_eq!(
            ascent_plateaus(&word(&[3, 3, 2, 2, 1, 1], 3, 2)).unwrap(),
            0
        );
        assert_eq!(ascent_plateaus(&word(&[1, 1, 2, 2], 2, 2)).unwrap(), 1);
        assert_eq!(ascent_plateaus(&word(&[1, 2, 2, 1], 2, 2)).unwrap(), 1);
        assert_eq!(ascent_plateaus(&word(&[2, 2, 1, 1], 2, 2)).unwrap(), 0);
    }

    #[test]
    fn ascent_plateau_rejects_single_copies() {
        let w = word(&[2, 1], 2, 1);
        assert_eq!(ascent_plateaus(&w).unwrap_err(), Error::RequiresK2 { k: 1 });
        assert_eq!(
            ascent_plateaus0(&w).unwrap_err(),
            Error::RequiresK2 { k: 1 }
        );
    }

    #[test]
    fn ascent_plateau0_examples() {
        assert_eq!(
            ascent_plateaus0(&word(&[1, 1, 2, 3, 3, 2], 3, 2)).unwrap(),
            2
        );
        assert_eq!(ascent_plateaus0(&word(&[1, 1, 2, 2], 2, 2)).unwrap(), 2);
        assert_eq!(ascent_plateaus0(&word(&[1, 2, 2, 1], 2, 2)).unwrap(), 1);
        assert_eq!(ascent_plateaus0(&word(&[2, 2, 1, 1], 2, 2)).unwrap(), 1);
        assert_eq!(ascent_plateaus0(&word(&[1, 1, 1], 1, 3)).unwrap(), 1);
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(excedances(&Permutation::identity(5)), 0);
        assert_eq!(excedances(&perm(&[2, 1])), 1);
        assert_eq!(excedances(&perm(&[2, 3, 1])), 2);
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycles(&Permutation::identity(6)), 6);
        assert_eq!(cycles(&perm(&[2, 1])), 1);
        assert_eq!(cycles(&perm(&[3, 1, 2])), 1);
    }

    #[test]
    fn word_scan_examples() {
        assert_eq!(word_ascents(&[1, 1, 2, 2]), 1);
        assert_eq!(word_plateaus(&[1, 1, 2, 2]), 2);
        assert_eq!(word_ascents(&[2, 2, 1, 1]), 0);
        // the relabeled image has the same ascent count as its source word
        assert_eq!(word_ascents(&[2, 2, 1, 3, 3, 1]), 1);
        assert_eq!(word_ascents(&[4, 3, 2, 6, 5, 1]), 1);
    }

    #[test]
    fn ascent_plateau_descent_partition() {
        // every adjacent pair is exactly one of ascent, plateau, descent
        for n in 1..=4 {
            for k in 1..=3 {
                for w in k_stirling_words(n, k) {
                    let l = w.letters();
                    assert_eq!(
                        word_ascents(l) + word_plateaus(l) + word_descents(l),
                        n * k - 1
                    );
                }
            }
        }
    }

    #[test]
    fn peak_examples() {
        let p = perm(&[2, 1, 4, 3, 5]);
        assert_eq!(interior_peaks(&p), 1);
        assert_eq!(left_peaks(&p), 2);
        assert_eq!(interior_peaks(&Permutation::identity(5)), 0);
        assert_eq!(left_peaks(&Permutation::identity(5)), 0);
        assert_eq!(interior_peaks(&perm(&[2, 1, 4, 3])), 1);
        assert_eq!(left_peaks(&perm(&[4, 3, 2, 1])), 1);
    }

    #[test]
    fn run_examples() {
        assert_eq!(alternating_runs(&perm(&[2, 1, 4, 6, 5, 3])).unwrap(), 3);
        assert_eq!(alternating_runs(&Permutation::identity(6)).unwrap(), 1);
        assert_eq!(alternating_runs(&perm(&[2, 1, 4, 3])).unwrap(), 3);
        assert_eq!(
            alternating_runs(&perm(&[1])).unwrap_err(),
            Error::RunsUndefined { n: 1 }
        );
    }

    #[test]
    fn left_peaks_dominate_interior_peaks() {
        for n in 1..=6 {
            for p in permutations(n) {
                let gap = left_peaks(&p) - interior_peaks(&p);
                assert!(gap <= 1);
                let v = p.values();
                if n == 1 || v[0] < v[1] {
                    assert_eq!(gap, 0);
                } else {
                    assert_eq!(gap, 1);
                }
            }
        }
    }

    #[test]
    fn ap0_exceeds_ap_exactly_on_leading_blocks() {
        for n in 1..=4 {
            for k in 2..=3 {
                for w in k_stirling_words(n, k) {
                    let ap = ascent_plateaus(&w).unwrap();
                    let ap0 = ascent_plateaus0(&w).unwrap();
                    assert!(ap <= ap0 && ap0 <= ap + 1);
                    let leading_block = w.letters()[..k].iter().all(|&m| m == w.letters()[0]);
                    assert_eq!(ap0 == ap + 1, leading_block, "word {w}");
                }
            }
        }
    }
}
