use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::Format;

/// The output document of one run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub task: String,
    pub config_hash: String,
    pub versions: BTreeMap<String, String>,
    pub results: Vec<Value>,
    /// Internal checks that did not hold; any entry makes the run fail.
    pub assertion_failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.assertion_failures.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
        }
    }

    /// One line per result row; columns in first-seen key order, nested
    /// values as compact JSON.
    pub fn to_csv(&self) -> String {
        let mut columns: Vec<String> = Vec::new();
        for row in &self.results {
            if let Value::Object(map) = row {
                for k in map.keys() {
                    if !columns.contains(k) {
                        columns.push(k.clone());
                    }
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&columns).expect("write to memory");
        let empty = Map::new();
        for row in &self.results {
            let map = row.as_object().unwrap_or(&empty);
            let cells: Vec<String> = columns
                .iter()
                .map(|c| match map.get(c) {
                    None | Some(Value::Null) => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    Some(v) => v.to_string(),
                })
                .collect();
            w.write_record(&cells).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }
}
