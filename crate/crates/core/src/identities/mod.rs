//! Polynomial families built by every available route, and the checks
//! that verify their identities against each other at desk scale.

pub mod checks;
mod fold;
pub mod report;
pub mod routes;

pub use checks::{FULL_BRUTE_BOUNDS, QUICK_BRUTE_BOUNDS};
pub use report::{Counterexample, VerificationReport};
