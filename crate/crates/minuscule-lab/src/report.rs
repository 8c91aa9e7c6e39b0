//! Deterministic check reports shared by the verification suites and the
//! CLI.
//!
//! Records keep the order in which the suite emits them (suites iterate
//! sorted case lists, so two runs with the same arguments produce identical
//! bytes). Output carries no timestamps unless explicitly requested.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Uncertified,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Uncertified => "uncertified",
        };
        f.write_str(s)
    }
}

/// A single verified fact: what was checked, on which subject, and the
/// expected/actual values as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub subject: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub uncertified: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// JSON schema version.
    pub schema: String,
    pub tool_version: String,
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, records: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Uncertified => summary.uncertified += 1,
            }
        }
        Report {
            schema: "1".to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            records,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// Process exit status: 0 iff no record failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_failures())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// One line per record plus a summary line; byte-stable across runs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        for r in &self.records {
            out.push_str(&format!(
                "[{}] {} :: {} (expected: {}; actual: {})\n",
                match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Uncertified => "UNCERT",
                },
                r.id,
                r.subject,
                r.expected,
                r.actual
            ));
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} uncertified\n",
            self.summary.pass, self.summary.fail, self.summary.uncertified
        ));
        out
    }

    /// Concatenate suites into one report, preserving record order.
    pub fn merge(suite: &str, parts: Vec<Report>) -> Report {
        let records = parts.into_iter().flat_map(|p| p.records).collect();
        Report::new(suite, records)
    }
}
