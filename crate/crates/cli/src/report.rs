//! Run artifacts: a single JSON report per run, or a CSV of the
//! per-trial rows. All maps are ordered, so identical configurations
//! produce byte-identical artifacts apart from the timing fields.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

use crate::config::Format;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Report {
    pub artifact_version: String,
    pub command: String,
    /// full resolved configuration of the run
    pub config: Value,
    /// one record per trial, with enough inputs to replay it
    pub trials: Vec<Value>,
    pub summary: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Report {
        Report {
            artifact_version: ARTIFACT_VERSION.to_string(),
            command: command.to_string(),
            config,
            trials: Vec::new(),
            summary: Value::Null,
            elapsed_ms: 0,
        }
    }
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports are serializable");
    s.push('\n');
    s
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Per-trial rows; the column set is the ordered union of record keys.
pub fn render_csv(report: &Report) -> String {
    let mut columns: BTreeSet<String> = BTreeSet::new();
    for t in &report.trials {
        if let Value::Object(m) = t {
            columns.extend(m.keys().cloned());
        }
    }
    let columns: Vec<String> = columns.into_iter().collect();
    let mut out = String::new();
    out.push_str(
        &columns
            .iter()
            .map(|c| csv_escape(c))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for t in &report.trials {
        let row: Vec<String> = columns
            .iter()
            .map(|c| match t.get(c) {
                Some(v) => csv_escape(&csv_cell(v)),
                None => String::new(),
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn emit(report: &Report, format: Format, out: Option<&Path>) -> Result<()> {
    let rendered = match format {
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing report to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
