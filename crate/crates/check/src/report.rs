//! Report types and the json / csv / text renderers.

use std::str::FromStr;

use serde::Serialize;

use crate::claims::Config;
use crate::CheckError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub description: String,
    pub paper_location: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
    pub runtime_ms: u128,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub version: String,
    pub config: Config,
    pub claims: Vec<ClaimResult>,
}

impl ClaimReport {
    fn count(&self, s: Status) -> usize {
        self.claims.iter().filter(|c| c.status == s).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skipped)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed() > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, CheckError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(CheckError::Usage(format!("unknown format {s:?} (json, csv, text)"))),
        }
    }
}

#[derive(Serialize)]
struct JsonConfig<'a> {
    max_g: String,
    max_h: String,
    filter_prefix: Option<&'a str>,
    fail_fast: bool,
}

#[derive(Serialize)]
struct JsonClaim<'a> {
    id: &'a str,
    description: &'a str,
    paper_location: &'a str,
    computed: &'a str,
    expected: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: &'a str,
    config: JsonConfig<'a>,
    claims: Vec<JsonClaim<'a>>,
}

fn json(report: &ClaimReport, with_runtime: bool) -> Result<Vec<u8>, CheckError> {
    let doc = JsonReport {
        version: &report.version,
        config: JsonConfig {
            max_g: report.config.max_g.to_string(),
            max_h: report.config.max_h.to_string(),
            filter_prefix: report.config.filter_prefix.as_deref(),
            fail_fast: report.config.fail_fast,
        },
        claims: report
            .claims
            .iter()
            .map(|c| JsonClaim {
                id: &c.id,
                description: &c.description,
                paper_location: &c.paper_location,
                computed: &c.computed,
                expected: &c.expected,
                status: c.status,
                runtime_ms: with_runtime.then(|| c.runtime_ms.to_string()),
                note: c.note.as_deref(),
            })
            .collect(),
    };
    let mut out = serde_json::to_vec_pretty(&doc)?;
    out.push(b'\n');
    Ok(out)
}

/// The determinism contract: json without `runtime_ms`.
pub fn render_canonical_json(report: &ClaimReport) -> Result<Vec<u8>, CheckError> {
    json(report, false)
}

pub fn render_report(report: &ClaimReport, format: Format) -> Result<Vec<u8>, CheckError> {
    match format {
        Format::Json => json(report, true),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "description", "paper_location", "computed", "expected", "status"])?;
            for c in &report.claims {
                w.write_record([
                    c.id.as_str(),
                    &c.description,
                    &c.paper_location,
                    &c.computed,
                    &c.expected,
                    c.status.as_str(),
                ])?;
            }
            w.into_inner().map_err(|e| CheckError::Io(e.into_error()))
        }
        Format::Text => Ok(text(report).into_bytes()),
    }
}

fn text(report: &ClaimReport) -> String {
    let header = ["ID", "STATUS", "COMPUTED", "EXPECTED"];
    let rows: Vec<[&str; 4]> = report
        .claims
        .iter()
        .map(|c| [c.id.as_str(), c.status.as_str(), c.computed.as_str(), c.expected.as_str()])
        .collect();
    let mut width = header.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row.iter().zip(width).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    if report.skipped() > 0 {
        out.push_str(&format!("{} skipped\n", report.skipped()));
    }
    out.push_str(&format!("{} passed, {} failed\n", report.passed(), report.failed()));
    out
}
