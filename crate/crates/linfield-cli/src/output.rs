//! Deterministic output assembly: one document per invocation, rendered as
//! a human table, canonical JSON (sorted keys, no whitespace) or flat CSV.
//! Identical inputs produce byte-identical output in every format.

use serde_json::{json, Map, Value};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Everything one command produces, ready to render.
pub struct OutputDoc {
    /// Normalized echo of the subcommand and its arguments.
    pub command: String,
    /// FNV-1a hash of the canonical spec serialization.
    pub fingerprint: String,
    pub warnings: Vec<String>,
    /// Machine payload (JSON form).
    pub payload: Value,
    /// Preformatted table body.
    pub table: Vec<String>,
    /// CSV rows; the first row is the header.
    pub csv: Vec<Vec<String>>,
}

impl OutputDoc {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = String::new();
                out.push_str(&format!("command: {}\n", self.command));
                out.push_str(&format!("fingerprint: {}\n", self.fingerprint));
                for w in &self.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                for line in &self.table {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("command".into(), json!(self.command));
                doc.insert("fingerprint".into(), json!(self.fingerprint));
                doc.insert("format_version".into(), json!(FORMAT_VERSION));
                doc.insert("payload".into(), self.payload.clone());
                doc.insert("warnings".into(), json!(self.warnings));
                let mut out = Value::Object(doc).to_string();
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = String::new();
                for row in &self.csv {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// 64-bit FNV-1a, printed as 16 hex digits.
pub fn fingerprint(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

/// Space-separated integer list for table lines.
pub fn join_ints(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn tuple_label(values: &[i64]) -> String {
    format!("({})", values.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}
