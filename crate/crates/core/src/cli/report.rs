//! Check records and their two renderings: a fixed-width table and JSON
//! lines.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Infeasible,
    NotFound,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Infeasible => "infeasible",
            Outcome::NotFound => "not-found",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json-lines")]
    Json,
}

/// One check: its name, a digest of its inputs, the outcome and exact
/// values rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub inputs: String,
    pub outcome: Outcome,
    pub values: BTreeMap<String, String>,
}

impl Record {
    pub fn new(check: impl Into<String>, inputs: &str, outcome: Outcome) -> Self {
        Record { check: check.into(), inputs: digest(inputs), outcome, values: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

/// First 16 hex digits of the SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub records: Vec<Record>,
}

#[derive(Serialize)]
struct Summary {
    summary: Counts,
    seed: String,
}

#[derive(Serialize)]
struct Counts {
    checks: String,
    pass: String,
    fail: String,
    infeasible: String,
    #[serde(rename = "not-found")]
    not_found: String,
}

impl Report {
    pub fn new(seed: u64) -> Self {
        Report { seed, records: Vec::new() }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.records.iter().filter(|r| r.outcome == outcome).count()
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.outcome == Outcome::Pass)
    }

    fn summary_counts(&self) -> [(&'static str, usize); 5] {
        [
            ("checks", self.records.len()),
            ("pass", self.count(Outcome::Pass)),
            ("fail", self.count(Outcome::Fail)),
            ("infeasible", self.count(Outcome::Infeasible)),
            ("not-found", self.count(Outcome::NotFound)),
        ]
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.emit_text(),
            Format::Json => self.emit_json(),
        }
    }

    fn emit_text(&self) -> String {
        let mut out = String::new();
        if !self.records.is_empty() {
            let width = self.records.iter().map(|r| r.check.len()).max().unwrap_or(0).max(5);
            writeln!(out, "{:<width$}  {:<16}  {:<10}  values", "check", "inputs", "outcome").unwrap();
            for r in &self.records {
                let values: Vec<String> = r.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let line = format!("{:<width$}  {:<16}  {:<10}  {}", r.check, r.inputs, r.outcome.as_str(), values.join(" "));
                writeln!(out, "{}", line.trim_end()).unwrap();
            }
        }
        let counts: Vec<String> = self.summary_counts().iter().map(|(k, v)| format!("{v} {k}")).collect();
        writeln!(out, "summary: {}; seed {}", counts.join(", "), self.seed).unwrap();
        out
    }

    fn emit_json(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("plain strings serialize"));
            out.push('\n');
        }
        let [checks, pass, fail, infeasible, not_found] = self.summary_counts().map(|(_, v)| v.to_string());
        let summary = Summary { summary: Counts { checks, pass, fail, infeasible, not_found }, seed: self.seed.to_string() };
        out.push_str(&serde_json::to_string(&summary).expect("plain strings serialize"));
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_one_line() {
        let r = Report::new(3);
        assert_eq!(r.emit(Format::Text), "summary: 0 checks, 0 pass, 0 fail, 0 infeasible, 0 not-found; seed 3\n");
        assert_eq!(r.emit(Format::Json).lines().count(), 1);
    }

    #[test]
    fn one_record() {
        let mut r = Report::new(0);
        r.push(Record::new("measure", "00,010", Outcome::Pass).with("measure", "3/8"));
        let text = r.emit(Format::Text);
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().nth(1).unwrap().ends_with("pass        measure=3/8"));
        let json = r.emit(Format::Json);
        let first = json.lines().next().unwrap();
        assert!(first.starts_with("{\"check\":\"measure\",\"inputs\":\""));
        assert!(first.ends_with("\"outcome\":\"pass\",\"values\":{\"measure\":\"3/8\"}}"));
        assert_eq!(
            json.lines().nth(1).unwrap(),
            r#"{"summary":{"checks":"1","pass":"1","fail":"0","infeasible":"0","not-found":"0"},"seed":"0"}"#
        );
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(digest(""), "e3b0c44298fc1c14");
    }
}
