//! Structured results for verification sweeps and cross-check reports.

use std::time::Duration;

/// One failing case inside a verification run, with both sides of the
/// disagreement rendered as strings so reports stay scalar-type agnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFailure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl std::fmt::Display for CaseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.input, self.expected, self.actual
        )
    }
}

/// Outcome of a verification suite or of a comparison-style report.
///
/// `failures` lists cases where an identity that must always hold did not;
/// an interesting-but-correct observation (say, a comparison concluding
/// "not proportional") goes into `verdict`/`notes` instead and does not
/// affect [`VerifyReport::passed`].
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Name of the suite or report that produced this.
    pub suite: String,
    /// Input parameters, in display order.
    pub parameters: Vec<(String, String)>,
    /// Number of cases checked.
    pub cases: u64,
    /// Cases violating an identity that must hold.
    pub failures: Vec<CaseFailure>,
    /// Observations that are not failures.
    pub notes: Vec<String>,
    /// One-line conclusion for comparison-style reports.
    pub verdict: Option<String>,
    /// Wall-clock time of the run.
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerifyReport {
            suite: suite.into(),
            parameters: Vec::new(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            verdict: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {} cases, {} — {status}", self.suite, self.cases, {
            let n = self.failures.len();
            if n == 1 {
                "1 failure".to_string()
            } else {
                format!("{n} failures")
            }
        })?;
        if !self.parameters.is_empty() {
            let params = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            write!(f, " ({params})")?;
        }
        for fail in &self.failures {
            write!(f, "\n  failure: {fail}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        if let Some(v) = &self.verdict {
            write!(f, "\n  verdict: {v}")?;
        }
        Ok(())
    }
}
