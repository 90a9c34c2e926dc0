//! Fixed-width float formatting and the CSV/JSONL writers.
//!
//! Every float is emitted with 17 significant digits in scientific notation
//! so that repeated runs produce byte-identical files on any platform.

use std::io::{self, Write};

/// 17-significant-digit scientific form; negative zero is normalized.
pub fn fmt_f64(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

/// RFC-4180 field quoting: quote when a field carries a comma, quote, or
/// line break, doubling embedded quotes.
pub fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') || field.contains('\r') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One output cell of a sweep row.
#[derive(Debug, Clone)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Bool(bool),
    /// Column not populated for this row (degenerate t/lambda); empty in
    /// CSV, omitted in JSONL.
    Empty,
}

pub fn write_csv_header<W: Write>(w: &mut W, columns: &[String]) -> io::Result<()> {
    let escaped: Vec<String> = columns.iter().map(|c| csv_escape(c)).collect();
    w.write_all(escaped.join(",").as_bytes())?;
    w.write_all(b"\n")
}

pub fn write_csv_row<W: Write>(w: &mut W, cells: &[Cell]) -> io::Result<()> {
    let mut first = true;
    for cell in cells {
        if !first {
            w.write_all(b",")?;
        }
        first = false;
        match cell {
            Cell::Float(v) => w.write_all(csv_escape(&fmt_f64(*v)).as_bytes())?,
            Cell::Int(n) => w.write_all(n.to_string().as_bytes())?,
            Cell::Bool(b) => w.write_all(if *b { b"true" } else { b"false" })?,
            Cell::Empty => {}
        }
    }
    w.write_all(b"\n")
}

pub fn write_jsonl_row<W: Write>(w: &mut W, columns: &[String], cells: &[Cell]) -> io::Result<()> {
    let mut obj = serde_json::Map::new();
    for (name, cell) in columns.iter().zip(cells) {
        let value = match cell {
            Cell::Float(v) => serde_json::json!(*v),
            Cell::Int(n) => serde_json::json!(*n),
            Cell::Bool(b) => serde_json::json!(*b),
            Cell::Empty => continue,
        };
        obj.insert(name.clone(), value);
    }
    serde_json::to_writer(&mut *w, &serde_json::Value::Object(obj))?;
    w.write_all(b"\n")
}
