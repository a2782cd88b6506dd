//! Report documents and their text rendering.

use std::fmt::Write;

use lqt_core::complexes::{BigradedDims, Cell, Verdict};
use serde::Serialize;

use crate::job::JobSpec;
use crate::{exit, CliError, ErrorEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Nothing was compared.
    Ok,
    Match,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimEntry {
    pub degree: i64,
    pub weight: u32,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTotal {
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub task: String,
    pub status: Status,
    /// The job as run, after command line overrides.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<JobSpec>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dims: Vec<DimEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub by_degree: Vec<DegreeTotal>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<Cell>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    pub fn new(task: &str, input: Option<JobSpec>) -> Self {
        Report {
            tool: "lqt",
            version: env!("CARGO_PKG_VERSION"),
            task: task.to_string(),
            status: Status::Ok,
            input,
            dims: Vec::new(),
            by_degree: Vec::new(),
            cells: Vec::new(),
            details: serde_json::Value::Null,
            error: None,
            wall_time_ms: None,
            exit_code: exit::OK,
        }
    }

    pub fn failed(task: &str, input: Option<JobSpec>, e: &CliError) -> Self {
        let mut r = Report::new(task, input);
        r.status = Status::Error;
        r.error = Some(e.entry());
        r.exit_code = e.exit_code();
        r
    }

    /// Records dims on degrees `lo..=hi`, zeros included in the totals.
    pub fn set_dims(&mut self, d: &BigradedDims, lo: i64, hi: i64) {
        self.dims = d.iter().filter(|((n, _), k)| *k > 0 && *n >= lo && *n <= hi).map(|((degree, weight), dim)| DimEntry { degree, weight, dim }).collect();
        self.by_degree = (lo..=hi).zip(d.by_degree(lo, hi)).map(|(degree, dim)| DegreeTotal { degree, dim }).collect();
    }

    /// Sets cells and derives the status from their verdicts.
    pub fn set_cells(&mut self, cells: Vec<Cell>) {
        let bad = cells.iter().any(|c| c.verdict == Verdict::Mismatch);
        self.cells = cells;
        self.judge(!bad);
    }

    pub fn judge(&mut self, ok: bool) {
        if ok {
            self.status = Status::Match;
            self.exit_code = exit::OK;
        } else {
            self.status = Status::Mismatch;
            self.exit_code = exit::MISMATCH;
        }
    }

    /// Sorted keys, two-space indent, trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let status = serde_json::to_value(self.status).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        let _ = writeln!(s, "task {}  status {}", self.task, status);
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error [{}] {}", e.kind, e.message);
        }
        if !self.by_degree.is_empty() {
            let _ = writeln!(s, "\n{:>7}  {}", "degree", "dim");
            for t in &self.by_degree {
                let _ = writeln!(s, "{:>7}  {}", t.degree, t.dim);
            }
        }
        if !self.dims.is_empty() {
            let _ = writeln!(s, "\n{:>7} {:>7}  {}", "degree", "weight", "dim");
            for d in &self.dims {
                let _ = writeln!(s, "{:>7} {:>7}  {}", d.degree, d.weight, d.dim);
            }
        }
        if !self.cells.is_empty() {
            let _ = writeln!(s, "\n{:>7} {:>7} {:>6} {:>6}  verdict", "degree", "weight", "lhs", "rhs");
            for c in &self.cells {
                let v = match c.verdict {
                    Verdict::Match => "match",
                    Verdict::Mismatch => "MISMATCH",
                    Verdict::OutsideStableRange => "outside stable range",
                };
                let _ = writeln!(s, "{:>7} {:>7} {:>6} {:>6}  {}", c.degree, c.weight, c.lhs, c.rhs, v);
            }
        }
        if !self.details.is_null() {
            let _ = writeln!(s, "\n{}", serde_json::to_string_pretty(&self.details).unwrap_or_default());
        }
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(s, "\nwall time {ms} ms");
        }
        s
    }
}
