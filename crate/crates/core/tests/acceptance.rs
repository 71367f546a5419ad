//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`). All comparisons are exact; the only
//! tolerances are the stated runtime budgets.
//!
//! Run with: cargo test -p stirlab-core --test acceptance

use std::time::{Duration, Instant};

use stirlab_core::exactmath::{Int, IntPolynomial};
use stirlab_core::identities::report::VerificationReport;
use stirlab_core::identities::{checks, routes};
use stirlab_core::objects::k_stirling_count;

/// Brute-force bounds: the largest stream is |Q_7(2)| = 135135.
const ROUTE_BOUNDS: &[(usize, usize)] = &[(2, 7), (3, 6), (4, 5)];

fn finish(name: &str, reports: &[VerificationReport], budget: Option<Duration>, elapsed: Duration) {
    for report in reports {
        assert!(report.passed, "{name}: {report}");
    }
    if let Some(budget) = budget {
        assert!(
            elapsed <= budget,
            "{name}: took {elapsed:?}, budget {budget:?}"
        );
    }
    println!("acceptance: {name}: PASS ({elapsed:?})");
}

#[test]
fn golden_c_rows() {
    let started = Instant::now();
    let report = checks::golden_c_rows();
    finish(
        "golden C rows (C_1..C_5 exact)",
        &[report],
        Some(Duration::from_secs(1)),
        started.elapsed(),
    );
}

/// All four A-family routes agree over the full bounds; the sequential
/// run stays inside its budget and a parallel run changes nothing.
#[test]
fn four_route_agreement() {
    fn route_matrix() -> Vec<(usize, usize, Vec<IntPolynomial>)> {
        let mut matrix = Vec::new();
        for &(k, n_max) in ROUTE_BOUNDS {
            for n in 1..=n_max {
                matrix.push((
                    n,
                    k,
                    vec![
                        routes::a_by_recurrence(n, k),
                        routes::a_by_exc_cyc(n, k),
                        routes::a_by_inv_ascents(n, k),
                        routes::a_by_ascent_plateau(n, k).expect("k >= 2"),
                    ],
                ));
            }
        }
        matrix
    }

    let sequential_pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool");
    let started = Instant::now();
    let (report, sequential) =
        sequential_pool.install(|| (checks::four_route_agreement(ROUTE_BOUNDS), route_matrix()));
    let elapsed = started.elapsed();

    let parallel = route_matrix();
    assert_eq!(sequential, parallel, "thread count changed a distribution");

    finish(
        "four-route agreement (sequential + parallel determinism)",
        &[report],
        Some(Duration::from_secs(60)),
        elapsed,
    );
}

#[test]
fn reversed_family_routes() {
    let started = Instant::now();
    let report = checks::reversal_routes(ROUTE_BOUNDS);
    finish(
        "reversed rows (reversal = b-recurrence = ascent-plateau0)",
        &[report],
        None,
        started.elapsed(),
    );
}

#[test]
fn peak_distributions_over_dual_set() {
    let started = Instant::now();
    let report = checks::peak_distributions(7);
    finish(
        "peak distributions over the dual set (n <= 7)",
        &[report],
        Some(Duration::from_secs(5)),
        started.elapsed(),
    );
}

#[test]
fn run_distribution_over_dual_set() {
    let started = Instant::now();
    let report = checks::run_distribution(7);
    finish(
        "alternating-run distribution equals the C rows (n <= 7)",
        &[report],
        None,
        started.elapsed(),
    );
}

#[test]
fn generating_function_checks() {
    let started = Instant::now();
    let mut reports: Vec<_> = (1..=4).map(|k| checks::egf_a(k, 10)).collect();
    reports.push(checks::egf_c(10));
    finish(
        "generating functions (A for k in 1..4 and C, order 10)",
        &reports,
        Some(Duration::from_secs(5)),
        started.elapsed(),
    );
}

#[test]
fn counting_and_enumeration() {
    let started = Instant::now();
    let reports = vec![
        checks::total_counts(20, 5),
        checks::enumeration_counts(ROUTE_BOUNDS),
    ];
    // Big-integer anchor: the n = 20, k = 2 row sum is the odd double
    // factorial 3 * 5 * ... * 39, frozen as a decimal literal.
    let row_sum = routes::a_by_recurrence(20, 2).coeff_sum();
    let frozen: Int = "319830986772877770815625".parse().expect("decimal literal");
    assert_eq!(row_sum, frozen);
    assert_eq!(k_stirling_count(20, 2), frozen);
    finish(
        "row sums equal the counting products (n <= 20, k <= 5)",
        &reports,
        None,
        started.elapsed(),
    );
}

#[test]
fn bivariate_coherence() {
    let started = Instant::now();
    let reports = vec![
        checks::bivariate_recurrence(7),
        checks::bivariate_specialization(7, 4),
    ];
    finish(
        "bivariate recurrence and q = 1/k specialization (n <= 7, k <= 4)",
        &reports,
        None,
        started.elapsed(),
    );
}

#[test]
fn structural_properties() {
    let started = Instant::now();
    let reports = vec![
        checks::dual_set_structure(6),
        checks::run_peak_structure(6),
        checks::c_palindromic(8),
        checks::second_order_rows(7),
    ];
    finish(
        "structural suite (bijection, patterns, run = ipk + lpk, palindromes, second-order rows)",
        &reports,
        None,
        started.elapsed(),
    );
}
