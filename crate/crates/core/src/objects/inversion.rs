use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Int;

use super::format_symbols;

/// k-inversion sequence: entries e_1..e_n with 0 <= e_i <= (i-1)k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InversionSequence {
    entries: Vec<usize>,
    k: usize,
}

impl InversionSequence {
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInversionSequence("k must be >= 1".into()));
        }
        for (idx, &e) in entries.iter().enumerate() {
            let bound = idx * k;
            if e > bound {
                return Err(Error::InvalidInversionSequence(format!(
                    "entry {} at position {} exceeds bound {}",
                    e,
                    idx + 1,
                    bound
                )));
            }
        }
        Ok(InversionSequence { entries, k })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>, k: usize) -> Self {
        InversionSequence { entries, k }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bound = (self.entries.len().saturating_sub(1)) * self.k;
        format_symbols(&self.entries, bound, f)
    }
}

/// Number of k-inversion sequences of length n: prod_{i=1}^{n} ((i-1)k + 1).
pub fn inversion_sequence_count(n: usize, k: usize) -> Int {
    let mut acc = Int::from(1);
    for i in 1..=n {
        acc *= Int::from((i - 1) * k + 1);
    }
    acc
}

/// Streams every k-inversion sequence of length n in lexicographic order,
/// via a mixed-radix counter with radix (i-1)k + 1 at position i.
pub fn inversion_sequences(n: usize, k: usize) -> InversionSequences {
    assert!(n >= 1 && k >= 1, "inversion sequences need n, k >= 1");
    InversionSequences {
        k,
        next: Some(vec![0; n]),
    }
}

pub struct InversionSequences {
    k: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for InversionSequences {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<InversionSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if advance(&mut succ, self.k) {
            self.next = Some(succ);
        }
        Some(InversionSequence::from_entries_unchecked(current, self.k))
    }
}

fn advance(entries: &mut [usize], k: usize) -> bool {
    for idx in (0..entries.len()).rev() {
        if entries[idx] < idx * k {
            entries[idx] += 1;
            for e in entries[idx + 1..].iter_mut() {
                *e = 0;
            }
            return true;
        }
    }
    false
}
