use pseudofn::CertifiedInterval;
use serde::Serialize;
use serde_json::Value;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A closed form or identity taken from the reference material.
    Reference,
    /// Computed by an independent oracle or by arithmetic from other values.
    Derived,
    /// Holds for structural reasons (identities, isometries).
    Trivial,
}

/// An interval without its witness vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalSummary {
    pub p: String,
    pub lower: f64,
    pub upper: Value,
    pub converged: bool,
}

impl From<&CertifiedInterval> for IntervalSummary {
    fn from(iv: &CertifiedInterval) -> Self {
        IntervalSummary {
            p: iv.p.to_string(),
            lower: iv.lower,
            upper: if iv.upper.is_finite() { iv.upper.into() } else { Value::from("inf") },
            converged: iv.converged,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub description: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    /// Canonical sort key, unique within a suite.
    pub key: String,
    pub inputs: Value,
    pub intervals: Vec<IntervalSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub expected: Expected,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl CheckRecord {
    pub fn new(key: impl Into<String>, inputs: Value, description: impl Into<String>, provenance: Provenance) -> Self {
        CheckRecord {
            key: key.into(),
            inputs,
            intervals: Vec::new(),
            details: None,
            expected: Expected {
                description: description.into(),
                provenance,
            },
            verdict: false,
            error: None,
            wall_time_ms: None,
        }
    }

    pub fn interval(mut self, iv: &CertifiedInterval) -> Self {
        self.intervals.push(iv.into());
        self
    }

    pub fn details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.verdict = ok;
        self
    }

    pub fn failed_with(mut self, error: impl ToString) -> Self {
        self.verdict = false;
        self.error = Some(error.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub verdict: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.key.cmp(&b.key));
        let passed = checks.iter().filter(|c| c.verdict).count();
        let failed = checks.len() - passed;
        SuiteReport {
            suite: suite.to_string(),
            seed,
            checks,
            passed,
            failed,
            verdict: failed == 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use serde_json::json;

    use super::*;

    #[test]
    fn sorted_and_counted() {
        let checks = vec![
            CheckRecord::new("b", json!({}), "x", Provenance::Trivial).verdict(true),
            CheckRecord::new("a", json!({}), "y", Provenance::Derived).verdict(false),
        ];
        let report = SuiteReport::new("demo", 3, checks);
        assert_eq!(report.checks[0].key, "a");
        assert_eq!((report.passed, report.failed, report.verdict), (1, 1, false));
        let text = report.to_json();
        assert!(text.contains("\"provenance\": \"derived\""));
        assert!(!text.contains("wall_time_ms"));
    }
}
