//! Pass/fail records shared by all checkers.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unsupported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub subject: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, check: &str, subject: &str, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.records.push(CheckRecord {
            check: check.into(),
            subject: subject.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            detail: if ok { None } else { Some(detail()) },
        });
        ok
    }

    pub fn pass(&mut self, check: &str, subject: &str) {
        self.record(check, subject, true, String::new);
    }

    pub fn fail(&mut self, check: &str, subject: &str, detail: impl Into<String>) {
        let d = detail.into();
        self.record(check, subject, false, || d);
    }

    pub fn unsupported(&mut self, check: &str, subject: &str, detail: impl Into<String>) {
        self.records.push(CheckRecord {
            check: check.into(),
            subject: subject.into(),
            verdict: Verdict::Unsupported,
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.verdict != Verdict::Pass)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }
}
