//! Rendering of command results as text, CSV or JSON.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// A command result: a table for text/CSV, an optional headline for text
/// and a JSON value. `serde_json::Map` is ordered, so JSON keys are sorted.
pub struct Report {
    pub headline: Option<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines shown in text mode only (used by `--explain`).
    pub notes: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn single(line: String, json: Value) -> Self {
        Self {
            headline: Some(line.clone()),
            headers: vec!["result".into()],
            rows: vec![vec![line]],
            notes: Vec::new(),
            json,
        }
    }

    pub fn table(headers: &[&str], rows: Vec<Vec<String>>, json: Value) -> Self {
        Self { headline: None, headers: headers.iter().map(|h| h.to_string()).collect(), rows, notes: Vec::new(), json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", self.json),
            Format::Csv => {
                let mut s = String::new();
                for line in std::iter::once(&self.headers).chain(&self.rows) {
                    let cells: Vec<String> = line.iter().map(|c| csv_cell(c)).collect();
                    writeln!(s, "{}", cells.join(",")).unwrap();
                }
                s
            }
            Format::Text => {
                let mut s = match &self.headline {
                    Some(h) => format!("{h}\n"),
                    None => aligned(&self.headers, &self.rows),
                };
                for n in &self.notes {
                    writeln!(s, "{n}").unwrap();
                }
                s
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn aligned(headers: &[String], rows: &[Vec<String>]) -> String {
    let width = |k: usize| {
        std::iter::once(&headers[k]).chain(rows.iter().map(|r| &r[k])).map(|c| c.chars().count()).max().unwrap_or(0)
    };
    let widths: Vec<usize> = (0..headers.len()).map(width).collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut s = String::new();
    writeln!(s, "{}", line(headers)).unwrap();
    for r in rows {
        writeln!(s, "{}", line(r)).unwrap();
    }
    s
}
