//! Rendering of command results as aligned text, CSV or JSON lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Csv,
    JsonLines,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(u64),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(x) => Value::from(*x),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as u64)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&'static str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Everything a command produced: tables for stdout, warnings for stderr.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub tables: Vec<Table>,
    pub warnings: Vec<String>,
    /// Set when a check reported a failure (nonzero exit).
    pub failed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn absorb(&mut self, other: Report) {
        self.tables.extend(other.tables);
        self.warnings.extend(other.warnings);
        self.failed |= other.failed;
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human(),
            Format::Csv => self.csv(),
            Format::JsonLines => self.json_lines(),
        }
    }

    fn human(&self) -> String {
        let mut out = String::new();
        for (k, table) in self.tables.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{}", table.title);
            let cells: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| r.iter().map(Cell::text).collect())
                .collect();
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|r| r[j].chars().count())
                        .chain([table.columns[j].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |fields: Vec<&str>| {
                let mut s = String::new();
                for (j, f) in fields.iter().enumerate() {
                    if j + 1 == fields.len() {
                        s.push_str(f);
                    } else {
                        let _ = write!(s, "{:<w$}  ", f, w = widths[j]);
                    }
                }
                s.trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(table.columns.clone()));
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            let _ = writeln!(out, "{}", line(rule.iter().map(String::as_str).collect()));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        for (k, table) in self.tables.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            let mut header = vec!["table".to_string()];
            header.extend(table.columns.iter().map(|c| c.to_string()));
            let _ = writeln!(out, "{}", csv_line(&header));
            for r in &table.rows {
                let mut fields = vec![table.title.clone()];
                fields.extend(r.iter().map(Cell::text));
                let _ = writeln!(out, "{}", csv_line(&fields));
            }
        }
        out
    }

    fn json_lines(&self) -> String {
        #[derive(Serialize)]
        struct Record<'a> {
            command: &'a str,
            params: &'a BTreeMap<String, String>,
            table: &'a str,
            row: Map<String, Value>,
        }
        let mut out = String::new();
        for table in &self.tables {
            for r in &table.rows {
                let row: Map<String, Value> = table
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                let rec = Record {
                    command: &self.command,
                    params: &self.params,
                    table: &table.title,
                    row,
                };
                out.push_str(&serde_json::to_string(&rec).expect("plain data serializes"));
                out.push('\n');
            }
        }
        out
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}
