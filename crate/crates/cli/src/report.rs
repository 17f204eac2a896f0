//! Command reports: machine-readable JSON and a plain text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hcell_core::report::Check;
use hcell_core::{Status, ValidationReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    /// Human-readable summary lines.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<String>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub spec: String,
    pub status: Status,
    pub sections: Vec<Section>,
    /// Structured results such as cell lists or fusion tables.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
    /// Wall-clock milliseconds; only filled on request so that reports stay
    /// byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, spec: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            spec: spec.into(),
            status: Status::Pass,
            sections: Vec::new(),
            data: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn section(&mut self, name: impl Into<String>, lines: Vec<String>, checks: ValidationReport) {
        if checks.checks.iter().any(|c| c.status == Status::Fail) {
            self.status = Status::Fail;
        }
        self.sections.push(Section { name: name.into(), lines, checks: checks.checks });
    }

    pub fn data(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report data serializes");
        self.data.insert(key.to_string(), v);
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Check)> {
        self.sections
            .iter()
            .flat_map(|s| s.checks.iter().map(move |c| (s.name.as_str(), c)))
            .filter(|(_, c)| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.command, self.spec, status_word(self.status));
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.name);
            for l in &s.lines {
                let _ = writeln!(out, "  {l}");
            }
            for c in &s.checks {
                match &c.witness {
                    Some(w) => {
                        let _ = writeln!(out, "  {} {}: {w}", status_word(c.status), c.name);
                    }
                    None => {
                        let _ = writeln!(out, "  {} {}", status_word(c.status), c.name);
                    }
                }
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "\ntime: {ms} ms");
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}
