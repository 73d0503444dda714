//! Machine-readable reports. The JSON schema is the stable contract:
//!
//! ```json
//! {"command": "...", "params": {"...": "..."},
//!  "entries": [{"dims": [1, 1], "value": "3",
//!               "paths": {"closed": "3", "charsum": "3", "oracle": "3"}}],
//!  "agreement": true}
//! ```
//!
//! Big integers are decimal strings (never 64-bit truncated); symbolic
//! values use the canonical polynomial text form. CSV reports carry one
//! `dim<i>` column per dimension followed by a `value` column.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub entries: Vec<Entry>,
    pub agreement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub dims: Vec<usize>,
    pub value: String,
    #[serde(default)]
    pub paths: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            entries: Vec::new(),
            agreement: true,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, dims: Vec<usize>, value: String) {
        self.entries.push(Entry {
            dims,
            value,
            paths: BTreeMap::new(),
        });
    }

    pub fn push_with_paths(
        &mut self,
        dims: Vec<usize>,
        value: String,
        paths: BTreeMap<String, String>,
    ) {
        self.entries.push(Entry { dims, value, paths });
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let width = self.entries.iter().map(|e| e.dims.len()).max().unwrap_or(0);
        let mut out = String::new();
        for i in 1..=width {
            out.push_str(&format!("dim{},", i));
        }
        out.push_str("value\n");
        for e in &self.entries {
            for d in &e.dims {
                out.push_str(&format!("{},", d));
            }
            out.push_str(&e.value);
            out.push('\n');
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            if e.dims.is_empty() && e.paths.is_empty() && self.entries.len() == 1 {
                out.push_str(&e.value);
                out.push('\n');
                continue;
            }
            let dims = e
                .dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            if dims.is_empty() {
                out.push_str(&e.value);
            } else {
                out.push_str(&format!("{}: {}", dims, e.value));
            }
            if !e.paths.is_empty() {
                let paths = e
                    .paths
                    .iter()
                    .map(|(k, v)| format!("{}={}", k, v))
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!(" [{}]", paths));
            }
            out.push('\n');
        }
        if self.entries.iter().any(|e| !e.paths.is_empty()) {
            out.push_str(&format!("agreement: {}\n", self.agreement));
        }
        out
    }
}
