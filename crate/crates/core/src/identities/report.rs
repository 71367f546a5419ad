//! Pass/fail reporting for identity checks.
//!
//! A report names the check and its parameter ranges; on failure it
//! carries the first counterexample found (the checks iterate parameters
//! in ascending order, so this is the smallest failing case) with both
//! conflicting values. Once a mismatch is recorded, later comparisons in
//! the same report are skipped.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Parameter values at the failing case, e.g. "n=3, k=2".
    pub location: String,
    pub lhs_label: String,
    pub lhs: String,
    pub rhs_label: String,
    pub rhs: String,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            params: Vec::new(),
            passed: true,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Asserts equality of two labeled values; on the first mismatch the
    /// report flips to failed and captures both sides. Returns whether the
    /// report is still passing.
    pub fn require_eq<T: PartialEq + fmt::Display>(
        &mut self,
        location: impl fmt::Display,
        lhs_label: &str,
        lhs: &T,
        rhs_label: &str,
        rhs: &T,
    ) -> bool {
        if self.passed && lhs != rhs {
            self.passed = false;
            self.counterexample = Some(Counterexample {
                location: location.to_string(),
                lhs_label: lhs_label.to_string(),
                lhs: lhs.to_string(),
                rhs_label: rhs_label.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.passed
    }

    /// Asserts a named property of an observed value.
    pub fn require(
        &mut self,
        location: impl fmt::Display,
        property: &str,
        observed: impl fmt::Display,
        holds: bool,
    ) -> bool {
        if self.passed && !holds {
            self.passed = false;
            self.counterexample = Some(Counterexample {
                location: location.to_string(),
                lhs_label: "observed".to_string(),
                lhs: observed.to_string(),
                rhs_label: "required".to_string(),
                rhs: property.to_string(),
            });
        }
        self.passed
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check
        )?;
        if !self.params.is_empty() {
            write!(f, " (")?;
            for (idx, (key, value)) in self.params.iter().enumerate() {
                if idx > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{key}={value}")?;
            }
            write!(f, ")")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(
                f,
                "\n  at {}: {} = {} vs {} = {}",
                cx.location, cx.lhs_label, cx.lhs, cx.rhs_label, cx.rhs
            )?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_only_the_first_counterexample() {
        let mut report = VerificationReport::new("demo").with_param("n_max", 3);
        assert!(report.require_eq("n=1", "a", &1, "b", &1));
        assert!(!report.require_eq("n=2", "a", &2, "b", &3));
        assert!(!report.require_eq("n=3", "a", &7, "b", &9));
        let cx = report.counterexample.as_ref().unwrap();
        assert_eq!(cx.location, "n=2");
        assert_eq!(cx.lhs, "2");
        assert_eq!(cx.rhs, "3");
    }

    #[test]
    fn failure_implies_counterexample() {
        let mut report = VerificationReport::new("demo");
        report.require("n=5", "value is even", 5, false);
        assert!(!report.passed);
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn display_includes_params_and_outcome() {
        let report = VerificationReport::new("demo").with_param("k", 2);
        assert_eq!(report.to_string(), "[PASS] demo (k=2)");
    }
}
