//! The JSON report written by `skewcat run`.

use serde::{Deserialize, Serialize};
use skewcat_core::report::{CheckReport, Status};

pub const SCHEMA: u32 = 1;

/// What a check is expected to do. Counterexamples and mutants are
/// `fail` checks: the entry passes when the underlying report fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub check: String,
    pub action: String,
    pub expect: Expect,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
    /// Set when the check could not be carried out at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Entry {
    pub fn new(check: String, action: String, expect: Expect, outcome: Result<CheckReport, String>) -> Self {
        let (status, report, error) = match outcome {
            Ok(r) => {
                let ok = r.passed() == (expect == Expect::Pass);
                (if ok { Status::Pass } else { Status::Fail }, Some(r), None)
            }
            Err(e) => (Status::Fail, None, Some(e)),
        };
        Entry { check, action, expect, status, report, error }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub instantiations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub seed: u64,
    pub budget: usize,
    pub status: Status,
    pub suites: Vec<SuiteResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(seed: u64, budget: usize, suites: Vec<SuiteResult>) -> Self {
        let mut summary = Summary::default();
        for e in suites.iter().flat_map(|s| &s.entries) {
            summary.checks += 1;
            if e.passed() {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            summary.instantiations += e.report.as_ref().map_or(0, CheckReport::checked);
        }
        let status = if summary.failed == 0 { Status::Pass } else { Status::Fail };
        Report { schema: SCHEMA, seed, budget, status, suites, summary }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn entry(&self, check: &str) -> Option<&Entry> {
        self.suites.iter().flat_map(|s| &s.entries).find(|e| e.check == check)
    }

    pub fn failing(&self) -> Vec<&Entry> {
        self.suites.iter().flat_map(|s| &s.entries).filter(|e| !e.passed()).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Folds several reports into one, law by law, in first-seen order. Each
/// part's failures are prefixed with its context label.
pub fn merge(subject: impl Into<String>, seed: u64, parts: Vec<(String, CheckReport)>) -> CheckReport {
    let budget = skewcat_core::Budget::new(0, seed);
    let mut out = CheckReport::new(subject, &budget);
    let mut laws: Vec<skewcat_core::LawReport> = Vec::new();
    for (context, part) in parts {
        for law in part.laws {
            let slot = match laws.iter().position(|l| l.law == law.law) {
                Some(i) => i,
                None => {
                    let fresh = skewcat_core::LawReport::new(law.law.clone(), law.diagram.clone());
                    laws.push(fresh);
                    laws.len() - 1
                }
            };
            laws[slot].absorb(law, std::slice::from_ref(&context));
        }
    }
    for law in laws {
        out.push(law);
    }
    out
}
