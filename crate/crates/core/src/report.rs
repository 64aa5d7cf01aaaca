//! Pass/fail bookkeeping shared by every verification routine.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Undecidable within the configured degree bound.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.entries.push(CheckEntry { name: name.into(), status, witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Status::Pass, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Status::Fail, Some(witness.into()));
    }

    /// Records `name` as passing when `witness` is `None`, failing otherwise.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn verdict(&self) -> Status {
        if self.entries.iter().any(|e| e.status == Status::Fail) {
            Status::Fail
        } else if self.entries.iter().any(|e| e.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Status::Pass
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.status == Status::Fail)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{:<12} {}", e.status, e.name)?;
            if let Some(w) = &e.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A failed or inconclusive check together with its evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub detail: String,
}

/// Machine-readable outcome of one command; see `schema/report.schema.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub operation: String,
    /// `sha256:` followed by the hex digest of the canonical input text.
    pub input_digest: String,
    pub verdict: Status,
    pub checks: Vec<CheckEntry>,
    pub witnesses: Vec<Witness>,
    pub tables: BTreeMap<String, serde_json::Value>,
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Report {
    pub fn new(operation: impl Into<String>, canonical_input: &str) -> Self {
        Report {
            operation: operation.into(),
            input_digest: format!("sha256:{}", sha256_hex(canonical_input)),
            verdict: Status::Pass,
            checks: Vec::new(),
            witnesses: Vec::new(),
            tables: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        if entry.status != Status::Pass {
            self.witnesses.push(Witness {
                check: entry.name.clone(),
                detail: entry.witness.clone().unwrap_or_else(|| entry.status.to_string()),
            });
        }
        self.checks.push(entry);
        self.verdict = CheckReport { entries: self.checks.clone() }.verdict();
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.push(CheckEntry { name: name.into(), status, witness });
    }

    /// Appends every entry of `r`, prefixing names with `prefix: ` when given.
    pub fn absorb(&mut self, prefix: Option<&str>, r: &CheckReport) {
        for e in &r.entries {
            let mut e = e.clone();
            if let Some(p) = prefix {
                e.name = format!("{p}: {}", e.name);
            }
            self.push(e);
        }
    }

    pub fn table(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("table values serialize");
        self.tables.insert(key.into(), v);
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.verdict == Status::Pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "operation: {}", self.operation)?;
        writeln!(f, "input: {}", self.input_digest)?;
        for e in &self.checks {
            write!(f, "  {:<12} {}", e.status, e.name)?;
            if let Some(w) = &e.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        for (k, v) in &self.tables {
            match v {
                serde_json::Value::String(s) if s.contains('\n') => {
                    writeln!(f, "{k}:")?;
                    for line in s.lines() {
                        writeln!(f, "  {line}")?;
                    }
                }
                serde_json::Value::String(s) => writeln!(f, "{k}: {s}")?,
                other => writeln!(f, "{k}: {other}")?,
            }
        }
        writeln!(f, "verdict: {}", self.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip() {
        let mut r = Report::new("demo", "input");
        r.record("first", None);
        r.record("second", Some("counterexample".into()));
        r.table("count", 2);
        assert_eq!(r.verdict, Status::Fail);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.witnesses.len(), 1);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.input_digest.starts_with("sha256:"));
    }
}
