//! Tabular results rendered as CSV, JSON or Markdown.
//!
//! Machine formats carry every number as `{:.5e}` (six significant digits);
//! JSON numbers are those same strings parsed back, so both formats hold
//! identical values.

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
    Int(usize),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

pub fn sci(v: f64) -> String {
    format!("{v:.5e}")
}

fn rounded(v: f64) -> Value {
    let r: f64 = sci(v).parse().expect("formatted float parses");
    serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
}

/// Human precision: four significant digits.
fn human(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i32;
    if !(-3..6).contains(&mag) {
        format!("{v:.3e}")
    } else {
        let decimals = (3 - mag).max(0) as usize;
        format!("{v:.decimals$}")
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Trailing key/value summary (CSV: one `# summary` comment line).
    pub summary: Vec<(String, f64)>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("json renders");
                s.push('\n');
                s
            }
            Format::Md => self.markdown(),
        }
    }

    fn csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Text(t) if t.contains([',', '"', '\n']) => {
                        format!("\"{}\"", t.replace('"', "\"\""))
                    }
                    Cell::Text(t) => t.clone(),
                    Cell::Num(v) => sci(*v),
                    Cell::Int(v) => v.to_string(),
                    Cell::Bool(v) => v.to_string(),
                    Cell::Empty => String::new(),
                })
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        if !self.summary.is_empty() {
            out.push_str("# summary");
            for (k, v) in &self.summary {
                out.push_str(&format!(" {k}={}", sci(*v)));
            }
            out.push('\n');
        }
        out
    }

    fn json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    let v = match cell {
                        Cell::Text(t) => Value::String(t.clone()),
                        Cell::Num(v) => rounded(*v),
                        Cell::Int(v) => Value::from(*v),
                        Cell::Bool(v) => Value::Bool(*v),
                        Cell::Empty => Value::Null,
                    };
                    obj.insert(name.clone(), v);
                }
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("columns".into(), Value::from(self.columns.clone()));
        top.insert("rows".into(), Value::Array(rows));
        if !self.summary.is_empty() {
            let summary: Map<String, Value> = self
                .summary
                .iter()
                .map(|(k, v)| (k.clone(), rounded(*v)))
                .collect();
            top.insert("summary".into(), Value::Object(summary));
        }
        Value::Object(top)
    }

    fn markdown(&self) -> String {
        let mut out = format!("| {} |\n", self.columns.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len())));
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Text(t) => t.clone(),
                    Cell::Num(v) => human(*v),
                    Cell::Int(v) => v.to_string(),
                    Cell::Bool(v) => v.to_string(),
                    Cell::Empty => "–".into(),
                })
                .collect();
            out.push_str(&format!("| {} |\n", fields.join(" | ")));
        }
        if !self.summary.is_empty() {
            out.push('\n');
            for (k, v) in &self.summary {
                out.push_str(&format!("- {k} = {}\n", human(*v)));
            }
        }
        out
    }
}
