//! The three combinatorial families (permutations, k-inversion sequences,
//! k-Stirling words) with validity checks and streaming enumerators, plus
//! the dual-set relabeling. Every stream is pull-based, deterministic, and
//! memory-bounded; two runs of the same stream yield identical orders.

mod dual;
mod inversion;
mod permutation;
mod stirling;

pub use dual::{dual_permutations, phi, phi_inverse, DualPermutation};
pub use inversion::{
    inversion_sequence_count, inversion_sequences, InversionSequence, InversionSequences,
};
pub use permutation::{permutations, Permutation, Permutations};
pub use stirling::{
    is_k_stirling, k_stirling_count, k_stirling_words, KStirlingWord, KStirlingWords,
};

use std::fmt;

/// Words and permutations print as space-free digit strings while every
/// symbol of the family fits in one digit, and comma-separated otherwise,
/// so output stays unambiguous for any size.
pub(crate) fn format_symbols(
    values: &[usize],
    max_symbol: usize,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if max_symbol <= 9 {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        for (idx, v) in values.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
