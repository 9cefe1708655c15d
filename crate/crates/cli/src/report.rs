//! Report rendering.
//!
//! A report is an ordered JSON object. The `json` format prints it as is,
//! with `version` and `command` first. The `rows` format prints one
//! tab-separated line per scalar field and one line per array element.

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::input::FORMAT_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Rows,
    #[default]
    #[value(alias = "json-like")]
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    command: String,
    body: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            body: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.body.insert(key.to_string(), value.into());
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.body.insert(key.to_string(), value.into());
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.body.get(key)
    }

    pub fn to_value(&self) -> Value {
        let mut out = Map::new();
        out.insert("version".into(), FORMAT_VERSION.into());
        out.insert("command".into(), self.command.clone().into());
        out.extend(self.body.clone());
        Value::Object(out)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Rows => {
                let mut s = format!("version\t{FORMAT_VERSION}\ncommand\t{}\n", self.command);
                for (key, value) in &self.body {
                    match value {
                        Value::Array(items)
                            if items.iter().any(|v| v.is_object() || v.is_array()) =>
                        {
                            for item in items {
                                s.push_str(&format!("{key}\t{}\n", row_cell(item)));
                            }
                        }
                        other => s.push_str(&format!("{key}\t{}\n", row_cell(other))),
                    }
                }
                s
            }
        }
    }
}

fn row_cell(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", row_cell(v)))
            .collect::<Vec<_>>()
            .join("\t"),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_puts_header_first() {
        let r = Report::new("phi")
            .with("phi", 3)
            .with("group", json!([2, 2]));
        let text = r.render(Format::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["phi"], 3);
        assert!(text.find("version").unwrap() < text.find("phi\"").unwrap());
    }

    #[test]
    fn rows_expand_arrays_of_records() {
        let r = Report::new("decompose")
            .with("p", 5)
            .with("representations", json!([{"target": [0], "coefficients": [1, 4]}, {"target": [1], "coefficients": [2, 4]}]));
        let text = r.render(Format::Rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[2], "p\t5");
        assert_eq!(lines[3], "representations\ttarget=[0]\tcoefficients=[1,4]");
        assert_eq!(lines.len(), 5);
    }
}
