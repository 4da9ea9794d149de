//! Output envelope shared by every subcommand.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Negative = 1,
    InputError = 2,
}

/// A command result rendered in any supported format. `csv` rows exclude
/// the header comment lines.
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
    pub csv: Option<Vec<Vec<String>>>,
}

impl Report {
    pub fn new(status: Status, text: String, json: Value) -> Self {
        Self { status, text, json, csv: None }
    }

    pub fn with_csv(mut self, rows: Vec<Vec<String>>) -> Self {
        self.csv = Some(rows);
        self
    }
}

/// Provenance recorded in every artifact.
pub struct Header {
    pub command: String,
    pub seed: u64,
}

impl Header {
    fn comment_lines(&self) -> String {
        format!(
            "# bks {}\n# command: {}\n# seed: {}\n",
            env!("CARGO_PKG_VERSION"),
            self.command,
            self.seed
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders `report` with the provenance header. CSV must be supported by
/// the command; callers check this before computing.
pub fn render(header: &Header, format: Format, report: &Report) -> String {
    match format {
        Format::Text => {
            let mut out = header.comment_lines();
            out.push_str(&report.text);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let envelope = json!({
                "tool": "bks",
                "version": env!("CARGO_PKG_VERSION"),
                "command": header.command,
                "seed": header.seed,
                "result": report.json,
            });
            let mut out = serde_json::to_string_pretty(&envelope).expect("serializable report");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = header.comment_lines();
            for row in report.csv.as_deref().unwrap_or_default() {
                let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                let _ = writeln!(out, "{}", fields.join(","));
            }
            out
        }
    }
}
