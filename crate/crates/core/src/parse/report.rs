//! Verification reports and their text/JSON serializations.
//!
//! The JSON layout (field order is fixed, so output is byte-stable):
//!
//! ```text
//! SuiteReport {
//!   schema: "nullkit-report/1",
//!   suite: string, seed: integer,
//!   instances: [Report],
//!   statistics: { string: string },      // report-only probes, sorted keys
//!   summary: { pass, fail, expected, skipped, resource_errors }
//! }
//! Report {
//!   instance: string,
//!   records: [CheckRecord]
//! }
//! CheckRecord {
//!   check: string,                // operation that ran
//!   tag: string,                  // statement identifier, see `tags`
//!   verdict: "pass" | "fail" | "skipped",
//!   expectation: null | "expected-fail" | "expected-exceed",
//!   witness: null | string,       // always present on "fail"
//!   detail: null | string,
//!   elapsed_ms: integer           // omitted unless timings were requested
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Statement identifiers carried by check records.
pub mod tags {
    pub const THEOREM_II: &str = "thm-ii";
    pub const THEOREM_I: &str = "thm-i";
    pub const PROP_1_1: &str = "prop-1.1";
    pub const PROP_1_2: &str = "prop-1.2";
    pub const LEMMA_2_1: &str = "lemma-2.1";
    pub const REMARK_2_4: &str = "remark-2.4";
    pub const PROP_3_1: &str = "prop-3.1";
    pub const EXAMPLE_2_3: &str = "ex-2.3";
    pub const KOLLAR_K1: &str = "k1";
    pub const SPARSE_BOUND: &str = "ex-2";
    pub const COROLLARY_A: &str = "cor-a";
    pub const ORACLE: &str = "oracle";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Marks a record whose outcome is a documented exception rather than
/// the generic statement: a known counterexample or a bound that is
/// known not to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    ExpectedFail,
    ExpectedExceed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub tag: String,
    pub verdict: Verdict,
    pub expectation: Option<Expectation>,
    pub witness: Option<String>,
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl CheckRecord {
    pub fn pass(check: &str, tag: &str) -> Self {
        CheckRecord {
            check: check.into(),
            tag: tag.into(),
            verdict: Verdict::Pass,
            expectation: None,
            witness: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    /// A failing record; failures always name a witness.
    pub fn fail(check: &str, tag: &str, witness: impl Into<String>) -> Self {
        CheckRecord {
            verdict: Verdict::Fail,
            witness: Some(witness.into()),
            ..Self::pass(check, tag)
        }
    }

    pub fn skipped(check: &str, tag: &str, reason: impl Into<String>) -> Self {
        CheckRecord {
            verdict: Verdict::Skipped,
            detail: Some(reason.into()),
            ..Self::pass(check, tag)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn expecting(mut self, e: Expectation) -> Self {
        self.expectation = Some(e);
        self
    }
}

/// All check records for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Report {
    pub instance: String,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(instance: impl Into<String>) -> Self {
        Report {
            instance: instance.into(),
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    /// Failures not covered by an expectation.
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Fail && r.expectation.is_none())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Summary {
    pub pass: usize,
    /// Failures without an expectation.
    pub fail: usize,
    /// Failures marked expected-fail or expected-exceed.
    pub expected: usize,
    pub skipped: usize,
    pub resource_errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub seed: u64,
    pub instances: Vec<Report>,
    pub statistics: BTreeMap<String, String>,
    pub summary: Summary,
}

pub const SCHEMA: &str = "nullkit-report/1";

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        SuiteReport {
            schema: SCHEMA.into(),
            suite: suite.into(),
            seed,
            instances: Vec::new(),
            statistics: BTreeMap::new(),
            summary: Summary::default(),
        }
    }

    /// Recomputes the summary counters from the records.
    pub fn tally(&mut self) {
        let mut s = Summary {
            resource_errors: self.summary.resource_errors,
            ..Summary::default()
        };
        for r in self.instances.iter().flat_map(|i| &i.records) {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail if r.expectation.is_some() => s.expected += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        self.summary = s;
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Skipped => "skipped",
    }
}

fn record_line(out: &mut String, r: &CheckRecord) {
    let _ = write!(
        out,
        "  [{}] {} ({})",
        verdict_str(r.verdict),
        r.check,
        r.tag
    );
    match r.expectation {
        Some(Expectation::ExpectedFail) => out.push_str(" expected-fail"),
        Some(Expectation::ExpectedExceed) => out.push_str(" expected-exceed"),
        None => {}
    }
    if let Some(w) = &r.witness {
        let _ = write!(out, " witness={w}");
    }
    if let Some(d) = &r.detail {
        let _ = write!(out, " -- {d}");
    }
    if let Some(ms) = r.elapsed_ms {
        let _ = write!(out, " [{ms} ms]");
    }
    out.push('\n');
}

/// Serializes one instance report.
pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes"),
        Format::Text => {
            let mut out = format!("instance {}\n", r.instance);
            for rec in &r.records {
                record_line(&mut out, rec);
            }
            out
        }
    }
}

/// Serializes a whole suite run.
pub fn emit_suite(r: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = format!("suite {} (seed {})\n", r.suite, r.seed);
            for inst in &r.instances {
                out.push_str(&emit_report(inst, Format::Text));
            }
            for (k, v) in &r.statistics {
                let _ = writeln!(out, "stat {k} = {v}");
            }
            let s = &r.summary;
            let _ = writeln!(
                out,
                "summary: {} pass, {} fail, {} expected, {} skipped, {} resource errors",
                s.pass, s.fail, s.expected, s.skipped, s.resource_errors
            );
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new("empty");
        let s = emit_report(&r, Format::Json);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["records"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn pass_and_fail_records() {
        let mut r = Report::new("demo");
        r.push(CheckRecord::pass("check_skoda", tags::PROP_1_1));
        r.push(CheckRecord::fail("inclusion", tags::EXAMPLE_2_3, "x*y"));
        let s = emit_report(&r, Format::Json);
        assert!(s.contains("\"verdict\": \"pass\""));
        assert!(s.contains("\"witness\": \"x*y\""));
        assert!(!s.contains("elapsed_ms"));
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let t = emit_report(&r, Format::Text);
        assert!(t.contains("[fail] inclusion (ex-2.3) witness=x*y"));
    }

    #[test]
    fn tally_counts() {
        let mut s = SuiteReport::new("x", 1);
        let mut r = Report::new("a");
        r.push(CheckRecord::pass("c", "t"));
        r.push(CheckRecord::skipped("c", "t", "precondition"));
        r.push(CheckRecord::fail("c", "t", "w").expecting(Expectation::ExpectedExceed));
        s.instances.push(r);
        s.tally();
        assert_eq!(s.summary.pass, 1);
        assert_eq!(s.summary.expected, 1);
        assert_eq!(s.summary.fail, 0);
        assert_eq!(s.summary.skipped, 1);
        assert!(s.all_passed());
    }
}
