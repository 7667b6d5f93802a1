use std::fmt::Write as _;

use laxorth::report::{CheckRecord, CheckReport, Verdict};
use laxorth::simple::CounterexampleReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: Vec<String>,
    pub listing: Vec<String>,
    pub records: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleReport>,
    /// Caps applied to the run, e.g. a corpus cut short.
    #[serde(default)]
    pub truncated: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            schema: SCHEMA,
            command,
            listing: Vec::new(),
            records: Vec::new(),
            counterexample: None,
            truncated: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.listing.push(s.into());
    }

    pub fn absorb(&mut self, r: CheckReport) {
        self.records.extend(r.records);
    }

    pub fn add(&mut self, check: &str, subject: &str, ok: bool, detail: impl FnOnce() -> String) {
        let mut r = CheckReport::new();
        r.record(check, subject, ok, detail);
        self.absorb(r);
    }

    pub fn unsupported(&mut self, check: &str, subject: &str, detail: impl Into<String>) {
        let mut r = CheckReport::new();
        r.unsupported(check, subject, detail);
        self.absorb(r);
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    fn count(&self, v: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == v).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.listing {
            let _ = writeln!(out, "{l}");
        }
        for r in &self.records {
            let tag = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Unsupported => "UNSUPPORTED",
            };
            match &r.detail {
                Some(d) => {
                    let _ = writeln!(out, "{tag} {} [{}]: {d}", r.check, r.subject);
                }
                None => {
                    let _ = writeln!(out, "{tag} {} [{}]", r.check, r.subject);
                }
            }
        }
        for t in &self.truncated {
            let _ = writeln!(out, "note: {t}");
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} unsupported ({} ms)",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Unsupported),
            self.elapsed_ms
        );
        out
    }
}
