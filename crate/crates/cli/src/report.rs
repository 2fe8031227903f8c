use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use verma_core::Rational;

use crate::config::{Format, RunConfig};

pub type Row = Map<String, Value>;

/// Output document: `{"config", "rows", "notes"}` with sorted keys.
#[derive(Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    /// Names of failed invariants; not serialized, decides the exit code.
    pub violations: Vec<String>,
}

impl Report {
    pub fn push(&mut self, row: Value) {
        match row {
            Value::Object(map) => self.rows.push(map),
            other => panic!("row must be an object, got {other}"),
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn render(&self, config: &RunConfig) -> Result<String, String> {
        match config.format {
            Format::Json => Ok(self.render_json(config)),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_json(&self, config: &RunConfig) -> String {
        let doc = json!({
            "config": {
                "command": config.command.to_string(),
                "n": config.n,
                "flag": config.flag,
                "weights": config.weights.iter().map(rational).collect::<Vec<_>>(),
                "level": config.level,
            },
            "rows": self.rows,
            "notes": self.notes,
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
        out.push('\n');
        out
    }

    fn render_csv(&self) -> Result<String, String> {
        let columns: BTreeSet<&String> = self.rows.iter().flat_map(|r| r.keys()).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&columns).map_err(|e| e.to_string())?;
        for row in &self.rows {
            let cells = columns.iter().map(|c| match row.get(*c) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            });
            w.write_record(cells).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        String::from_utf8(bytes).map_err(|e| e.to_string())
    }
}

/// Integers as JSON numbers, everything else as a reduced `"p/q"` string.
pub fn rational(q: &Rational) -> Value {
    if q.is_integer() {
        if let Some(v) = q.to_integer().to_i64() {
            return json!(v);
        }
    }
    Value::String(q.to_string())
}
