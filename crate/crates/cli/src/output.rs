//! Rendering of command results as JSON, aligned text or TSV.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// Column-major view of a result for the text and TSV renderers.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn tsv(&self) -> String {
        let mut out = self.headers.join("\t");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join("\t"));
            out.push('\n');
        }
        out
    }

    fn text(&self) -> String {
        if self.rows.len() == 1 {
            let pairs: Vec<String> = self.headers.iter().zip(&self.rows[0]).map(|(h, v)| format!("{h}={v}")).collect();
            return pairs.join(" ") + "\n";
        }
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| self.rows.iter().map(|r| r[c].len()).chain([self.headers[c].len()]).max().unwrap())
            .collect();
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.headers.clone());
        for r in &self.rows {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }
}

/// A finished command: its JSON document, its table, and whether a checked
/// claim failed.
pub struct Output {
    pub json: String,
    pub table: Table,
    pub mismatch: bool,
}

impl Output {
    pub fn new(value: &impl Serialize, table: Table, mismatch: bool) -> Self {
        let json = serde_json::to_string_pretty(value).expect("results serialize") + "\n";
        Output { json, table, mismatch }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json.clone(),
            Format::Text => self.table.text(),
            Format::Tsv => self.table.tsv(),
        }
    }
}

/// `[a,b,c]`, the compact form used in tables.
pub fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}
