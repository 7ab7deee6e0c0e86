//! Report assembly for the command line: one section per command, each a
//! list of check records plus structured data.

pub mod config;
mod sections;

pub use config::{Bounds, ConfigError, SessionConfig};

use crate::pbw::checks::CheckLine;
use serde::Serialize;
use std::fmt;

pub const SCHEMA_VERSION: &str = "wq-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Record {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Record { name: name.into(), status, detail: detail.into() }
    }

    pub fn inconclusive(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Inconclusive, detail)
    }
}

impl From<CheckLine> for Record {
    fn from(c: CheckLine) -> Self {
        Record { name: c.name, status: if c.pass { Status::Pass } else { Status::Fail }, detail: c.detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub command: String,
    pub checks: Vec<Record>,
    pub data: serde_json::Value,
    /// Wall-clock time, only when requested; reports stay byte-stable otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: String,
    pub config: SessionConfig,
    pub sections: Vec<Section>,
    pub summary: Summary,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}{} s = {:?}", self.config.cartan_type, self.config.rank, self.config.s)?;
        for s in &self.sections {
            match s.elapsed_ms {
                Some(ms) => writeln!(f, "[{}] {} ms", s.command, ms)?,
                None => writeln!(f, "[{}]", s.command)?,
            }
            for c in &s.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Inconclusive => "INCONCLUSIVE",
                };
                writeln!(f, "  {:<12} {} -- {}", tag, c.name, c.detail)?;
            }
        }
        write!(
            f,
            "summary: {} pass, {} fail, {} inconclusive",
            self.summary.pass, self.summary.fail, self.summary.inconclusive
        )
    }
}

pub const COMMANDS: &[&str] = &["root-system", "realization", "algebra-check", "rmatrix-check", "wq", "slice", "all"];

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("unknown command {0:?}; expected one of {1}")]
    UnknownCommand(String, String),
}

/// Runs a command; a section whose setup fails reports a single failing record.
pub fn run(command: &str, cfg: &SessionConfig) -> Result<Report, RunError> {
    run_timed(command, cfg, false)
}

pub fn run_timed(command: &str, cfg: &SessionConfig, timing: bool) -> Result<Report, RunError> {
    cfg.validate()?;
    let list: Vec<&str> = match command {
        "all" => COMMANDS[..COMMANDS.len() - 1].to_vec(),
        c if COMMANDS.contains(&c) => vec![c],
        other => return Err(RunError::UnknownCommand(other.into(), COMMANDS.join(", "))),
    };
    let mut sections = Vec::new();
    for c in list {
        let start = std::time::Instant::now();
        let mut sec = match sections::run_section(c, cfg) {
            Ok(s) => s,
            Err(e) => Section {
                command: c.into(),
                checks: vec![Record::new("setup", Status::Fail, e.to_string())],
                data: serde_json::Value::Null,
                elapsed_ms: None,
            },
        };
        if timing {
            sec.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        sections.push(sec);
    }
    let mut summary = Summary::default();
    for c in sections.iter().flat_map(|s| &s.checks) {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Inconclusive => summary.inconclusive += 1,
        }
    }
    Ok(Report { schema: SCHEMA_VERSION.into(), config: cfg.clone(), sections, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_command_is_an_error() {
        let cfg = SessionConfig::minimal("A", 1, vec![1]);
        assert!(matches!(run("nope", &cfg), Err(RunError::UnknownCommand(..))));
    }

    #[test]
    fn setup_failure_becomes_a_failing_record() {
        // rank 5 is outside the supported root systems
        let cfg = SessionConfig::minimal("A", 5, vec![]);
        let rep = run("root-system", &cfg).unwrap();
        assert!(rep.failed());
        assert_eq!(rep.sections[0].checks[0].name, "setup");
    }

    #[test]
    fn unsupported_module_is_inconclusive_not_failed() {
        let cfg = SessionConfig::minimal("B", 2, vec![1, 2]);
        let rep = run("rmatrix-check", &cfg).unwrap();
        assert_eq!(rep.summary.inconclusive, 1);
        assert!(!rep.failed());
    }

    #[test]
    fn a1_root_system_text() {
        let rep = run("root-system", &SessionConfig::minimal("A", 1, vec![1])).unwrap();
        let text = rep.to_string();
        assert!(text.contains("D = 1"), "{}", text);
        assert!(text.ends_with("0 fail, 0 inconclusive"));
    }
}
