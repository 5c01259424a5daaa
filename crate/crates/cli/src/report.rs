//! Machine-readable check reports.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    OracleIncomplete,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, pass: bool, details: Value) -> Check {
        Check { id: id.into(), status: if pass { Status::Pass } else { Status::Fail }, details }
    }

    pub fn with_status(id: impl Into<String>, status: Status, details: Value) -> Check {
        Check { id: id.into(), status, details }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub oracle_incomplete: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    /// Sorts the checks by id and tallies the summary.
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>, timestamp: bool) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::OracleIncomplete => summary.oracle_incomplete += 1,
            }
        }
        let timestamp = timestamp.then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        Report { suite: suite.into(), timestamp, checks, summary }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).with_context(|| format!("writing report to {}", path.display()))
    }

    /// One line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
                Status::OracleIncomplete => "incomplete",
            };
            out.push_str(&format!("{tag:>10}  {}\n", c.id));
        }
        let s = self.summary;
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} skipped, {} oracle-incomplete\n",
            self.suite, s.pass, s.fail, s.skipped, s.oracle_incomplete
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_matches_records() {
        let r = Report::new(
            "t",
            vec![
                Check::new("b", true, json!({})),
                Check::new("a", false, json!({"z": 1, "a": 2})),
                Check::with_status("c", Status::OracleIncomplete, json!(null)),
            ],
            false,
        );
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 0, oracle_incomplete: 1 });
        let text = r.to_json();
        assert!(text.find("\"a\": 2").unwrap() < text.find("\"z\": 1").unwrap());
        assert!(!text.contains("timestamp"));
        assert!(text.contains("oracle-incomplete"));
    }
}
