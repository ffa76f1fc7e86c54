use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// Renders a JSON value as a single CSV or text cell.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(cell).collect::<Vec<_>>().join(";"),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn fields(v: &Value) -> Vec<(String, Value)> {
    match v {
        Value::Object(m) => m.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        other => vec![("value".into(), other.clone())],
    }
}

/// Writes a batch of homogeneous records in the selected format.
pub fn render<T: Serialize>(format: Format, records: &[T], out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<(String, Value)>> = records
                .iter()
                .map(|r| fields(&serde_json::to_value(r).expect("serializable record")))
                .collect();
            let mut w = csv::Writer::from_writer(&mut *out);
            if let Some(first) = rows.first() {
                w.write_record(first.iter().map(|(k, _)| k.as_str()))?;
            }
            for row in &rows {
                w.write_record(row.iter().map(|(_, v)| cell(v)))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                let row = fields(&serde_json::to_value(r).expect("serializable record"));
                let line: Vec<String> = row.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
                writeln!(out, "{}", line.join("  "))?;
            }
        }
    }
    Ok(())
}

pub fn render_string<T: Serialize>(format: Format, records: &[T]) -> String {
    let mut buf = Vec::new();
    render(format, records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("utf-8 output")
}
