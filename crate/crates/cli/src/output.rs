//! Tabular records and their CSV / JSON encodings.

use clap::ValueEnum;
use serde_json::{json, Map};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Text(String),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

/// A named table with `key = value` metadata.
#[derive(Debug, Clone)]
pub struct Record {
    pub title: String,
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Record {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Record {
            title: title.into(),
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width for {}", self.title);
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}", self.title).unwrap();
        for (k, v) in &self.meta {
            writeln!(out, "# {k} = {v}").unwrap();
        }
        writeln!(out, "{}", self.columns.join(",")).unwrap();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    fn to_json(&self) -> String {
        let meta: Map<String, serde_json::Value> = self.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.clone(), json_cell(v)))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "title": self.title,
            "meta": meta,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("records are always serializable");
        s.push('\n');
        s
    }
}

/// 17 significant digits: parses back to the identical `f64`.
pub fn format_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string().to_lowercase()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Num(x) => format_num(*x),
        Value::Text(s) => s.clone(),
    }
}

// Non-finite numbers become null.
fn json_cell(v: &Value) -> serde_json::Value {
    match v {
        Value::Num(x) => serde_json::Number::from_f64(*x).map_or(serde_json::Value::Null, serde_json::Value::Number),
        Value::Text(s) => json!(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        let mut r = Record::new("demo", &["x", "label"]);
        r.meta("hbar_c", format_num(3.161_526_771_559_562e-26));
        r.push(vec![0.1.into(), "a".into()]);
        r.push(vec![f64::NAN.into(), "b".into()]);
        r
    }

    #[test]
    fn csv_layout() {
        let csv = sample().render(Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# demo");
        assert!(lines[1].starts_with("# hbar_c = 3.16152677155956"));
        assert_eq!(lines[2], "x,label");
        assert_eq!(lines[3], "1.0000000000000001e-1,a");
        assert_eq!(lines[4], "nan,b");
    }

    #[test]
    fn numbers_round_trip() {
        for x in [
            0.1,
            1.0 / 3.0,
            -1.0 / 720.0,
            1e-300,
            6.02e23,
            f64::MIN_POSITIVE,
            f64::MAX,
        ] {
            assert_eq!(format_num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_layout() {
        let doc: serde_json::Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(doc["rows"][0]["x"], json!(0.1));
        assert_eq!(doc["rows"][1]["x"], serde_json::Value::Null);
        assert_eq!(doc["columns"], json!(["x", "label"]));
    }

    #[test]
    #[should_panic]
    fn ragged_rows_rejected() {
        let mut r = Record::new("demo", &["x", "y"]);
        r.push(vec![1.0.into()]);
    }
}
