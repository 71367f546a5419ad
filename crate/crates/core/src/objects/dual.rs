//! The first/second-occurrence relabeling between Stirling permutations
//! (two copies per letter) and a distinguished subset of the symmetric
//! group on [2n]: the first occurrence of letter j maps to 2j, the second
//! to 2j - 1. The image of this map is the dual set.

use crate::error::{Error, Result};

use super::permutation::Permutation;
use super::stirling::{is_k_stirling, k_stirling_words, KStirlingWord};

/// Relabels a Stirling permutation (k = 2) into a permutation of \[2n\].
pub fn phi(word: &KStirlingWord) -> Result<Permutation> {
    if word.k() != 2 {
        return Err(Error::RequiresK2 { k: word.k() });
    }
    let mut seen = vec![false; word.n() + 1];
    let values = word
        .letters()
        .iter()
        .map(|&j| {
            if seen[j] {
                2 * j - 1
            } else {
                seen[j] = true;
                2 * j
            }
        })
        .collect();
    Ok(Permutation::from_values_unchecked(values))
}

/// Inverts the relabeling. A permutation of \[2n\] lies in the dual set
/// exactly when its letterwise halving ceil(v / 2) is a Stirling
/// permutation and, for every letter, the even image precedes the odd one.
pub fn phi_inverse(p: &Permutation) -> Result<KStirlingWord> {
    if !p.len().is_multiple_of(2) {
        return Err(Error::OddLength { len: p.len() });
    }
    let n = p.len() / 2;
    let letters: Vec<usize> = p.values().iter().map(|&v| v.div_ceil(2)).collect();
    let mut seen = vec![false; n + 1];
    for (&v, &j) in p.values().iter().zip(&letters) {
        let first = !seen[j];
        seen[j] = true;
        if first != (v % 2 == 0) {
            return Err(Error::NotInImage);
        }
    }
    if !is_k_stirling(&letters, n, 2) {
        return Err(Error::NotInImage);
    }
    Ok(KStirlingWord::from_letters_unchecked(letters, n, 2))
}

/// Permutation known to lie in the dual set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualPermutation {
    inner: Permutation,
}

impl DualPermutation {
    pub fn new(p: Permutation) -> Result<Self> {
        phi_inverse(&p)?;
        let values = p.values();
        debug_assert!(values[values.len() - 2] > values[values.len() - 1]);
        Ok(DualPermutation { inner: p })
    }

    pub fn permutation(&self) -> &Permutation {
        &self.inner
    }

    pub fn into_permutation(self) -> Permutation {
        self.inner
    }
}

/// Streams the dual set for order n together with the preimage words,
/// in the order of the underlying word stream.
pub fn dual_permutations(n: usize) -> impl Iterator<Item = (KStirlingWord, DualPermutation)> {
    k_stirling_words(n, 2).map(|word| {
        let image = phi(&word).expect("word stream yields k = 2");
        let dual = DualPermutation { inner: image };
        (word, dual)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[usize], n: usize) -> KStirlingWord {
        KStirlingWord::new(letters.to_vec(), n, 2).unwrap()
    }

    #[test]
    fn relabeling_examples() {
        assert_eq!(
            phi(&word(&[2, 2, 1, 3, 3, 1], 3)).unwrap().to_string(),
            "432651"
        );
        assert_eq!(phi(&word(&[1, 1], 1)).unwrap().to_string(), "21");
        assert_eq!(phi(&word(&[1, 1, 2, 2], 2)).unwrap().to_string(), "2143");
    }

    #[test]
    fn inverse_examples() {
        let p = Permutation::new(vec![4, 3, 2, 6, 5, 1]).unwrap();
        assert_eq!(phi_inverse(&p).unwrap().to_string(), "221331");
        let p = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(phi_inverse(&p).unwrap().to_string(), "1122");
    }

    #[test]
    fn identity_is_not_in_the_image() {
        // letter 1's images appear odd-first
        let p = Permutation::identity(4);
        assert_eq!(phi_inverse(&p).unwrap_err(), Error::NotInImage);
    }

    #[test]
    fn odd_length_is_rejected() {
        let p = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(phi_inverse(&p).unwrap_err(), Error::OddLength { len: 3 });
    }

    #[test]
    fn three_copies_per_letter_is_rejected() {
        let w = KStirlingWord::new(vec![1, 1, 1], 1, 3).unwrap();
        assert_eq!(phi(&w).unwrap_err(), Error::RequiresK2 { k: 3 });
    }

    #[test]
    fn halving_failure_is_not_in_image() {
        // halves to 2211 (valid) but letter 2's even image comes second
        let p = Permutation::new(vec![3, 4, 2, 1]).unwrap();
        assert_eq!(phi_inverse(&p).unwrap_err(), Error::NotInImage);
    }

    #[test]
    fn dual_stream_pairs_word_with_image() {
        let pairs: Vec<String> = dual_permutations(2)
            .map(|(w, d)| format!("{} -> {}", w, d.permutation()))
            .collect();
        assert_eq!(pairs, vec!["1122 -> 2143", "1221 -> 2431", "2211 -> 4321"]);
    }
}
