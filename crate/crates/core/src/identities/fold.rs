//! Parallel histogram folds over enumeration streams.
//!
//! Every accumulator here is a commutative monoid under elementwise
//! addition of exact integers, so the reduced result is independent of
//! how rayon partitions the stream and of the thread count; callers may
//! run inside any thread pool (including a single-threaded one) and get
//! identical polynomials.

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::exactmath::Int;

/// Counts items by a usize-valued statistic.
pub(crate) fn histogram<T, I, F>(items: I, stat: F) -> Vec<u64>
where
    T: Send,
    I: Iterator<Item = T> + Send,
    F: Fn(&T) -> usize + Sync,
{
    items
        .par_bridge()
        .fold(Vec::new, |mut acc: Vec<u64>, item| {
            bump(&mut acc, stat(&item), 1);
            acc
        })
        .reduce(Vec::new, merge_counts)
}

/// Sums big-integer weights by a usize-valued statistic.
pub(crate) fn weighted_histogram<T, I, F>(items: I, stat_weight: F) -> Vec<Int>
where
    T: Send,
    I: Iterator<Item = T> + Send,
    F: Fn(&T) -> (usize, Int) + Sync,
{
    items
        .par_bridge()
        .fold(Vec::new, |mut acc: Vec<Int>, item| {
            let (slot, weight) = stat_weight(&item);
            if slot >= acc.len() {
                acc.resize(slot + 1, Int::from(0));
            }
            acc[slot] += weight;
            acc
        })
        .reduce(Vec::new, merge_weights)
}

/// Counts items by a pair of usize-valued statistics.
pub(crate) fn pair_histogram<T, I, F>(items: I, stats: F) -> Vec<Vec<u64>>
where
    T: Send,
    I: Iterator<Item = T> + Send,
    F: Fn(&T) -> (usize, usize) + Sync,
{
    items
        .par_bridge()
        .fold(Vec::new, |mut acc: Vec<Vec<u64>>, item| {
            let (a, b) = stats(&item);
            if a >= acc.len() {
                acc.resize(a + 1, Vec::new());
            }
            bump(&mut acc[a], b, 1);
            acc
        })
        .reduce(Vec::new, |mut a, b| {
            if b.len() > a.len() {
                a.resize(b.len(), Vec::new());
            }
            for (row, extra) in a.iter_mut().zip(b) {
                *row = merge_counts(std::mem::take(row), extra);
            }
            a
        })
}

fn bump(acc: &mut Vec<u64>, slot: usize, by: u64) {
    if slot >= acc.len() {
        acc.resize(slot + 1, 0);
    }
    acc[slot] += by;
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if b.len() > a.len() {
        a.resize(b.len(), 0);
    }
    for (slot, c) in b.into_iter().enumerate() {
        a[slot] += c;
    }
    a
}

fn merge_weights(mut a: Vec<Int>, b: Vec<Int>) -> Vec<Int> {
    if b.len() > a.len() {
        a.resize(b.len(), Int::from(0));
    }
    for (slot, c) in b.into_iter().enumerate() {
        a[slot] += c;
    }
    a
}
