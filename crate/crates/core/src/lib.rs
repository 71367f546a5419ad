//! Exact-arithmetic kernel for the 1/k-Eulerian polynomial family and the
//! combinatorics around k-Stirling permutations.
//!
//! The crate builds each polynomial family by several independent routes
//! (a coefficient recurrence, brute-force sums of permutation and word
//! statistics, and exact generating-function algebra) and verifies that
//! all routes agree coefficient-for-coefficient. There is no floating
//! point anywhere: scalars are arbitrary-precision integers or rationals,
//! and every comparison is exact.
//!
//! - [`exactmath`]: big-integer/rational polynomials, bivariate
//!   polynomials, and truncated power series in z.
//! - [`objects`]: streaming enumerators for permutations, k-inversion
//!   sequences, and k-Stirling words, plus the dual-set relabeling.
//! - [`statistics`]: the scalar statistics (excedances, cycles,
//!   ascent-plateaux, peaks, alternating runs, ...).
//! - [`identities`]: the family routes and the verification checks.

pub mod error;
pub mod exactmath;
pub mod identities;
pub mod objects;
pub mod statistics;

pub use error::{Error, Result};
