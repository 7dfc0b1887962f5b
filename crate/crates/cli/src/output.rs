use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Rows of strings with a header, rendered as markdown, CSV or JSON.
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn markdown(&self) -> String {
        let mut out = String::new();
        let line = |cells: &[&str]| format!("| {} |\n", cells.join(" | "));
        out.push_str(&line(&self.headers));
        out.push_str(&line(&vec!["---"; self.headers.len()]));
        for row in &self.rows {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            out.push_str(&line(&cells));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.headers.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .headers
                        .iter()
                        .zip(row)
                        .map(|(h, c)| (h.to_string(), Value::String(c.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// The standard JSON wrapper around a command result.
pub fn envelope(command: &str, inputs: Value, result: Value, elapsed_ms: u128) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": elapsed_ms as u64,
    })
}

/// Render a command result. Objects become key/value rows in CSV and
/// markdown; tables render natively.
pub fn render(format: Format, envelope: &Value, table: Option<&Table>) -> String {
    match (format, table) {
        (Format::Json, _) => {
            let mut s = serde_json::to_string_pretty(envelope).expect("serializable");
            s.push('\n');
            s
        }
        (Format::Md, Some(t)) => t.markdown(),
        (Format::Csv, Some(t)) => t.csv(),
        (fmt, None) => {
            let rows = match &envelope["result"] {
                Value::Object(m) => m
                    .iter()
                    .map(|(k, v)| vec![k.clone(), scalar_text(v)])
                    .collect(),
                other => vec![vec!["result".to_string(), scalar_text(other)]],
            };
            let t = Table {
                headers: vec!["key", "value"],
                rows,
            };
            if fmt == Format::Md {
                t.markdown()
            } else {
                t.csv()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table {
            headers: vec!["n", "value"],
            rows: vec![vec!["1".into(), "a,b".into()], vec!["2".into(), "c".into()]],
        }
    }

    #[test]
    fn markdown_layout() {
        assert_eq!(sample().markdown(), "| n | value |\n| --- | --- |\n| 1 | a,b |\n| 2 | c |\n");
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(sample().csv(), "n,value\n1,\"a,b\"\n2,c\n");
    }

    #[test]
    fn object_results_flatten() {
        let env = envelope("x", json!({}), json!({"a": "1", "b": true}), 0);
        assert_eq!(render(Format::Csv, &env, None), "key,value\na,1\nb,true\n");
    }
}
