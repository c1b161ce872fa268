use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "salvetti-report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never affects the outcome.
    Note,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubjectReport {
    /// Type tag and construction, e.g. `A~2 toric`.
    pub subject: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub construction: String,
    pub checks: Vec<Check>,
}

impl SubjectReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub notes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub subject: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub tool: String,
    pub version: String,
    pub mu_convention: String,
    pub suites: Vec<String>,
    pub subjects: Vec<SubjectReport>,
    pub summary: Summary,
    /// Wall-clock data; excluded when comparing reports.
    #[serde(default)]
    pub timings: Vec<Timing>,
}

impl VerificationReport {
    pub fn new(mu_convention: &str, suites: Vec<String>, subjects: Vec<SubjectReport>, timings: Vec<Timing>) -> Self {
        let mut summary = Summary::default();
        for c in subjects.iter().flat_map(|s| &s.checks) {
            summary.checks += 1;
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Note => summary.notes += 1,
            }
        }
        Self {
            schema: REPORT_SCHEMA.into(),
            tool: "salvetti".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            mu_convention: mu_convention.into(),
            suites,
            subjects,
            summary,
            timings,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = (&SubjectReport, &Check)> {
        self.subjects.iter().flat_map(|s| s.checks.iter().filter(|c| c.status == Status::Fail).map(move |c| (s, c)))
    }

    /// The report with timings removed, for reproducibility comparisons.
    pub fn without_timings(&self) -> Self {
        Self { timings: Vec::new(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> crate::Result<Self> {
        let r: Self = serde_json::from_str(s)?;
        if r.schema != REPORT_SCHEMA {
            return Err(crate::Error::Schema(format!("expected schema {REPORT_SCHEMA}, found {}", r.schema)));
        }
        Ok(r)
    }

    /// Plain-text rendering: one line per check plus a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.subjects {
            out.push_str(&format!("== {} ==\n", s.subject));
            for c in &s.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Note => "NOTE",
                };
                out.push_str(&format!("  [{tag}] {}: {}", c.suite, c.name));
                if !c.detail.is_empty() {
                    out.push_str(&format!(" ({})", c.detail));
                }
                out.push('\n');
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} notes (mu convention: {})\n",
            s.checks, s.passed, s.failed, s.notes, self.mu_convention
        ));
        out
    }
}
