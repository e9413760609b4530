//! Report types shared by all suites. The JSON layout is versioned; field
//! order follows struct order and cases are sorted by key, so identical
//! configurations yield byte-identical files.

use serde::Serialize;
use serde_json::Value;

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    /// stable sort key, unique within the suite
    pub case: String,
    /// the mathematical claim this case certifies, or "plumbing"
    pub anchor: String,
    pub inputs: Value,
    pub outputs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub config: SuiteConfig,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: &str, config: &SuiteConfig, mut cases: Vec<CaseRecord>) -> Self {
        cases.sort_by(|a, b| a.case.cmp(&b.case));
        if !config.caps.timings {
            for c in cases.iter_mut() {
                c.runtime_ms = None;
            }
        }
        let summary = Summary {
            pass: cases.iter().filter(|c| c.status == Status::Pass).count(),
            fail: cases.iter().filter(|c| c.status == Status::Fail).count(),
            unknown: cases.iter().filter(|c| c.status == Status::Unknown).count(),
        };
        VerificationReport {
            schema_version: 1,
            suite: suite.to_string(),
            config: config.clone(),
            cases,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn has_unknown(&self) -> bool {
        self.summary.unknown > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {}\n", self.suite));
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Unknown => "unknown",
            };
            match c.runtime_ms {
                Some(ms) => out.push_str(&format!("  [{status}] {} ({} ms)\n", c.case, ms)),
                None => out.push_str(&format!("  [{status}] {}\n", c.case)),
            }
            if c.status == Status::Fail {
                out.push_str(&format!("         claim: {}\n", c.anchor));
                out.push_str(&format!("        output: {}\n", c.outputs));
            }
        }
        out.push_str(&format!(
            "  {} pass, {} fail, {} unknown\n",
            self.summary.pass, self.summary.fail, self.summary.unknown
        ));
        out
    }
}

/// Convenience constructor used by the suites.
pub fn case(
    key: impl Into<String>,
    anchor: impl Into<String>,
    inputs: Value,
    outputs: Value,
    ok: bool,
) -> CaseRecord {
    CaseRecord {
        case: key.into(),
        anchor: anchor.into(),
        inputs,
        outputs,
        status: if ok { Status::Pass } else { Status::Fail },
        runtime_ms: None,
    }
}

pub fn unknown_case(
    key: impl Into<String>,
    anchor: impl Into<String>,
    inputs: Value,
    reason: String,
) -> CaseRecord {
    CaseRecord {
        case: key.into(),
        anchor: anchor.into(),
        inputs,
        outputs: serde_json::json!({ "unknown": reason }),
        status: Status::Unknown,
        runtime_ms: None,
    }
}
