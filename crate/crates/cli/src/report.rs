use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Section {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Self {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Output of one subcommand. Every exact number is a string `"p/q"`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub holds: bool,
    pub parameters: BTreeMap<String, String>,
    pub sections: Vec<Section>,
    pub notes: Vec<String>,
    pub counterexample: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            holds: true,
            parameters: BTreeMap::new(),
            sections: Vec::new(),
            notes: Vec::new(),
            counterexample: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records a checked identity; the first failure becomes the counterexample.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
            self.holds = false;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        for section in &self.sections {
            writeln!(out).unwrap();
            writeln!(out, "{}", section.title).unwrap();
            let cells: Vec<Vec<String>> = section
                .rows
                .iter()
                .map(|row| row.iter().map(cell_text).collect())
                .collect();
            let widths: Vec<usize> = (0..section.columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain(std::iter::once(section.columns[i].chars().count()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: &[String]| {
                let padded: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:>w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&section.columns)).unwrap();
            for row in &cells {
                writeln!(out, "{}", line(row)).unwrap();
            }
        }
        if !self.notes.is_empty() {
            writeln!(out).unwrap();
            for note in &self.notes {
                writeln!(out, "note: {note}").unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(out, "holds: {}", self.holds).unwrap();
        if let Some(c) = &self.counterexample {
            writeln!(out, "first counterexample: {c}").unwrap();
        }
        out
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) => items.iter().map(cell_text).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
