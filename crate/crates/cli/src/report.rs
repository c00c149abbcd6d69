//! Run reports in JSON and text. Both forms carry the same data, and the
//! JSON form is byte-identical across runs with the same inputs unless
//! timings are requested.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use clap::ValueEnum;
use loctower::construction::{PropertyResult, Status};
use loctower::suites::SuiteReport;
use serde::Serialize;

use crate::error::{bail, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Undecided,
    /// Not run, or reported for information only.
    Skipped,
    /// Taken as an input assertion.
    Assumed,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Undecided => "undecided",
            CheckStatus::Skipped => "skipped",
            CheckStatus::Assumed => "assumed",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
}

impl CheckResult {
    pub fn new(name: &str, status: CheckStatus) -> Self {
        CheckResult {
            name: name.into(),
            status,
            description: None,
            witness: None,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_bool(name: &str, ok: bool) -> Self {
        Self::new(
            name,
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        )
    }

    pub fn describe(mut self, d: impl Into<String>) -> Self {
        self.description = Some(d.into());
        self
    }

    pub fn witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }

    pub fn count(mut self, k: &str, v: u64) -> Self {
        self.counts.insert(k.into(), v);
        self
    }
}

impl From<&PropertyResult> for CheckResult {
    fn from(r: &PropertyResult) -> Self {
        let status = match r.status {
            Status::Pass => CheckStatus::Pass,
            Status::Fail => CheckStatus::Fail,
            Status::Undecided => CheckStatus::Undecided,
        };
        CheckResult::new(r.id, status)
            .describe(r.description)
            .witness(r.witness.clone())
    }
}

impl From<&SuiteReport> for CheckResult {
    fn from(r: &SuiteReport) -> Self {
        let mut c = CheckResult::from_bool(&r.name, r.passed())
            .witness(r.witness.clone())
            .count("samples", r.samples as u64)
            .count("checks", r.checks)
            .count("counterexamples", r.counterexamples);
        for (k, v) in &r.stats {
            c.counts.insert(k.clone(), *v);
        }
        c
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub name: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl RunReport {
    pub fn new(command: &str, config: serde_json::Value, seed: Option<u64>) -> Self {
        RunReport {
            command: command.into(),
            config,
            seed,
            checks: Vec::new(),
            passed: true,
            timings: None,
        }
    }

    pub fn push(&mut self, c: CheckResult) {
        if matches!(c.status, CheckStatus::Fail | CheckStatus::Undecided) {
            self.passed = false;
        }
        self.checks.push(c);
    }

    pub fn time(&mut self, name: &str, since: Instant) {
        if let Some(t) = &mut self.timings {
            t.push(Timing {
                name: name.into(),
                seconds: since.elapsed().as_secs_f64(),
            });
        }
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "config: {}", self.config);
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed: {}", seed);
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mut line = format!(
                "{:<width$}  {:<9}",
                c.name,
                c.status.as_str(),
                width = width
            );
            if let Some(d) = &c.description {
                let _ = write!(line, "  {}", d);
            }
            let _ = writeln!(s, "{}", line.trim_end());
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "{:width$}  witness: {}", "", w, width = width);
            }
            if !c.counts.is_empty() {
                let counts: Vec<String> = c
                    .counts
                    .iter()
                    .map(|(k, v)| format!("{}={}", k, v))
                    .collect();
                let _ = writeln!(s, "{:width$}  {}", "", counts.join(" "), width = width);
            }
        }
        let _ = writeln!(
            s,
            "result: {} ({} checks)",
            if self.passed { "pass" } else { "fail" },
            self.checks.len()
        );
        if let Some(t) = &self.timings {
            for x in t {
                let _ = writeln!(s, "time {}: {:.3}s", x.name, x.seconds);
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => Ok(self.json()),
            Format::Text => Ok(self.text()),
            Format::Dot => bail!("reports have no DOT form; use json or text"),
        }
    }
}

/// Writes to `out`, or standard output.
pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
