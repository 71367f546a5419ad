//! The `verify` command: run the identity checks grouped into suites.
//!
//! thm1 covers the four-route agreement for the A rows, thm2 the reversed
//! rows, thm3 the dual-set peak statistics plus the structural facts they
//! rest on (bijectivity, ascent preservation, the length-3 pattern
//! containment, the second-order rows), thm4 the alternating-run rows
//! plus run = ipk + lpk, the lpk - ipk partition, palindromicity, and
//! the golden C rows. egf-A / egf-C check the generating functions,
//! axq the bivariate recurrence and its q = 1/k specialization, counts
//! the row sums and enumerator yields, id13-14 the three-statistic
//! equidistribution.

use serde_json::json;
use stirlab_core::exactmath::factorial;
use stirlab_core::identities::checks;
use stirlab_core::identities::{VerificationReport, FULL_BRUTE_BOUNDS, QUICK_BRUTE_BOUNDS};
use stirlab_core::objects::k_stirling_count;

use crate::output::Emitter;
use crate::{ensure_within_cap, CmdError, CmdResult, Format, Profile, Suite, VerifyArgs};

/// Per-suite bounds resolved from the profile and the override flags.
struct Bounds {
    /// (k, n_max) pairs for the brute-force route matrices.
    brute: Vec<(usize, usize)>,
    /// n bound for the dual-set distribution checks (k = 2 streams).
    dual_n: usize,
    /// n bound for the per-object structural scans.
    structure_n: usize,
    /// n bound for palindromicity of the C rows.
    palindrome_n: usize,
    /// Truncation order for the generating-function checks.
    order: usize,
    /// k values for the A-family generating function.
    egf_ks: Vec<usize>,
    /// (n_max, k_max) for the row-sum product check.
    counts: (usize, usize),
    /// (n_max, k_max) for the three-statistic equidistribution.
    equidist: (usize, usize),
    /// k bound for the bivariate q = 1/k specialization.
    bivariate_k: usize,
}

impl Bounds {
    fn resolve(args: &VerifyArgs) -> Result<Self, CmdError> {
        let mut bounds = match args.profile {
            Profile::Quick => Bounds {
                brute: QUICK_BRUTE_BOUNDS.to_vec(),
                dual_n: 5,
                structure_n: 4,
                palindrome_n: 6,
                order: 6,
                egf_ks: vec![1, 2, 3, 4],
                counts: (10, 4),
                equidist: (4, 3),
                bivariate_k: 4,
            },
            Profile::Full => Bounds {
                brute: FULL_BRUTE_BOUNDS.to_vec(),
                dual_n: 7,
                structure_n: 6,
                palindrome_n: 8,
                order: 10,
                egf_ks: vec![1, 2, 3, 4],
                counts: (20, 5),
                equidist: (6, 3),
                bivariate_k: 4,
            },
        };
        if let Some(k) = args.k {
            if k == 0 {
                return Err(CmdError::Usage("--k must be >= 1".into()));
            }
            let n_for_k = |k: usize| {
                bounds
                    .brute
                    .iter()
                    .find(|&&(bk, _)| bk == k)
                    .map(|&(_, n)| n)
                    .unwrap_or_else(|| bounds.brute.iter().map(|&(_, n)| n).min().unwrap_or(4))
            };
            bounds.brute = vec![(k, args.n_max.unwrap_or_else(|| n_for_k(k)))];
            bounds.egf_ks = vec![k];
            bounds.counts.1 = k;
            bounds.equidist.1 = k.max(2);
            bounds.bivariate_k = k;
        } else if let Some(k_max) = args.k_max {
            bounds.brute.retain(|&(k, _)| k <= k_max);
            if bounds.brute.is_empty() {
                return Err(CmdError::Usage("--k-max leaves no k to check".into()));
            }
            bounds.egf_ks.retain(|&k| k <= k_max);
            if bounds.egf_ks.is_empty() {
                bounds.egf_ks = vec![k_max];
            }
            bounds.counts.1 = k_max;
            bounds.equidist.1 = k_max.max(2);
            bounds.bivariate_k = k_max;
        }
        if let Some(n_max) = args.n_max {
            if n_max == 0 {
                return Err(CmdError::Usage("--n-max must be >= 1".into()));
            }
            for entry in &mut bounds.brute {
                entry.1 = n_max;
            }
            bounds.dual_n = n_max;
            bounds.structure_n = n_max;
            bounds.palindrome_n = n_max;
            bounds.counts.0 = n_max;
            bounds.equidist.0 = n_max;
        }
        if let Some(order) = args.order {
            if order == 0 {
                return Err(CmdError::Usage("--order must be >= 1".into()));
            }
            bounds.order = order;
        }
        Ok(bounds)
    }

    fn check_caps(&self, suite: Suite) -> CmdResult {
        let brute_suites = matches!(
            suite,
            Suite::All | Suite::Thm1 | Suite::Thm2 | Suite::Counts | Suite::Id1314
        );
        if brute_suites {
            for &(k, n_max) in &self.brute {
                ensure_within_cap("the brute-force route matrix", &k_stirling_count(n_max, k))?;
                ensure_within_cap("the brute-force route matrix", &factorial(n_max))?;
            }
        }
        if matches!(suite, Suite::All | Suite::Thm3 | Suite::Thm4 | Suite::Axq) {
            ensure_within_cap("the dual-set checks", &k_stirling_count(self.dual_n, 2))?;
            ensure_within_cap("the bivariate brute force", &factorial(self.dual_n))?;
        }
        if matches!(suite, Suite::All | Suite::Id1314) {
            ensure_within_cap(
                "the equidistribution check",
                &k_stirling_count(self.equidist.0, self.equidist.1.max(2)),
            )?;
        }
        Ok(())
    }
}

pub fn run(args: &VerifyArgs, emitter: &mut Emitter) -> CmdResult {
    if emitter.format == Format::Csv {
        return Err(CmdError::Usage(
            "csv output applies to poly rows only".into(),
        ));
    }
    let bounds = Bounds::resolve(args)?;
    bounds.check_caps(args.suite)?;

    let reports = run_suite(args.suite, &bounds);
    emit(args, &reports, emitter)?;

    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(failed) => Err(CmdError::Mismatch(format!(
            "verification failed: {}",
            failed.check
        ))),
    }
}

fn run_suite(suite: Suite, bounds: &Bounds) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    let thm1 = |out: &mut Vec<_>| out.push(checks::four_route_agreement(&bounds.brute));
    let thm2 = |out: &mut Vec<_>| out.push(checks::reversal_routes(&bounds.brute));
    let thm3 = |out: &mut Vec<_>| {
        out.push(checks::peak_distributions(bounds.dual_n));
        out.push(checks::dual_set_structure(bounds.structure_n));
        out.push(checks::second_order_rows(bounds.dual_n));
    };
    let thm4 = |out: &mut Vec<_>| {
        out.push(checks::run_distribution(bounds.dual_n));
        out.push(checks::golden_c_rows());
        out.push(checks::run_peak_structure(bounds.structure_n));
        out.push(checks::c_palindromic(bounds.palindrome_n));
    };
    let egf_a = |out: &mut Vec<_>| {
        for &k in &bounds.egf_ks {
            out.push(checks::egf_a(k, bounds.order));
        }
    };
    let egf_c = |out: &mut Vec<_>| out.push(checks::egf_c(bounds.order));
    let axq = |out: &mut Vec<_>| {
        out.push(checks::bivariate_recurrence(bounds.dual_n));
        out.push(checks::bivariate_specialization(
            bounds.dual_n,
            bounds.bivariate_k,
        ));
    };
    let counts = |out: &mut Vec<_>| {
        out.push(checks::total_counts(bounds.counts.0, bounds.counts.1));
        out.push(checks::enumeration_counts(&bounds.brute));
    };
    let id1314 = |out: &mut Vec<_>| {
        out.push(checks::stat_equidistribution(
            bounds.equidist.0,
            bounds.equidist.1,
        ));
    };

    match suite {
        Suite::Thm1 => thm1(&mut reports),
        Suite::Thm2 => thm2(&mut reports),
        Suite::Thm3 => thm3(&mut reports),
        Suite::Thm4 => thm4(&mut reports),
        Suite::EgfA => egf_a(&mut reports),
        Suite::EgfC => egf_c(&mut reports),
        Suite::Axq => axq(&mut reports),
        Suite::Counts => counts(&mut reports),
        Suite::Id1314 => id1314(&mut reports),
        Suite::All => {
            thm1(&mut reports);
            thm2(&mut reports);
            thm3(&mut reports);
            thm4(&mut reports);
            egf_a(&mut reports);
            egf_c(&mut reports);
            axq(&mut reports);
            counts(&mut reports);
            id1314(&mut reports);
        }
    }
    reports
}

fn emit(args: &VerifyArgs, reports: &[VerificationReport], emitter: &mut Emitter) -> CmdResult {
    let passed = reports.iter().filter(|r| r.passed).count();
    match emitter.format {
        Format::Text => {
            for report in reports {
                emitter.line(&report.to_string())?;
            }
            emitter.line(&format!("passed {passed}/{} checks", reports.len()))?;
        }
        Format::Json => {
            let checks: Vec<_> = reports
                .iter()
                .map(|r| {
                    let params: serde_json::Map<String, serde_json::Value> = r
                        .params
                        .iter()
                        .map(|(key, value)| (key.clone(), json!(value)))
                        .collect();
                    let counterexample = r.counterexample.as_ref().map(|cx| {
                        json!({
                            "location": cx.location,
                            "lhs_label": cx.lhs_label,
                            "lhs": cx.lhs,
                            "rhs_label": cx.rhs_label,
                            "rhs": cx.rhs,
                        })
                    });
                    json!({
                        "check": r.check,
                        "params": params,
                        "passed": r.passed,
                        "counterexample": counterexample,
                        "notes": r.notes,
                    })
                })
                .collect();
            emitter.record(
                "report",
                json!({
                    "suite": suite_name(args.suite),
                    "profile": profile_name(args.profile),
                }),
                json!({
                    "passed": passed == reports.len(),
                    "checks": checks,
                }),
            )?;
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(())
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::All => "all",
        Suite::Thm1 => "thm1",
        Suite::Thm2 => "thm2",
        Suite::Thm3 => "thm3",
        Suite::Thm4 => "thm4",
        Suite::EgfA => "egf-A",
        Suite::EgfC => "egf-C",
        Suite::Axq => "axq",
        Suite::Counts => "counts",
        Suite::Id1314 => "id13-14",
    }
}

fn profile_name(profile: Profile) -> &'static str {
    match profile {
        Profile::Quick => "quick",
        Profile::Full => "full",
    }
}
