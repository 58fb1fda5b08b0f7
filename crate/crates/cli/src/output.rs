//! Rendering of JSON results as JSON or as an aligned table.

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Table,
}

pub fn print_value(v: &Value, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{v}"),
        OutputFormat::Table => print!("{}", table(v)),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let cells: Vec<String> = items.iter().map(cell).collect();
            let sep = if cells.iter().any(|c| c.contains(' ')) { "; " } else { " " };
            cells.join(sep)
        }
        other => other.to_string(),
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| if i + 1 == r.len() { c.clone() } else { format!("{c:<w$}", w = widths[i]) })
            .collect();
        out += cells.join("  ").trim_end();
        out.push('\n');
    }
    out
}

/// Objects become `key  value` lines; an array of objects sharing the keys of
/// its first entry becomes a table with a header row.
pub fn table(v: &Value) -> String {
    match v {
        Value::Object(map) => align(&map.iter().map(|(k, x)| vec![k.clone(), cell(x)]).collect::<Vec<_>>()),
        Value::Array(items) => match items.first() {
            Some(Value::Object(first)) => {
                let keys: Vec<&String> = first.keys().collect();
                let mut rows = vec![keys.iter().map(|k| k.to_string()).collect::<Vec<_>>()];
                for item in items {
                    rows.push(keys.iter().map(|k| item.get(*k).map(cell).unwrap_or_default()).collect());
                }
                align(&rows)
            }
            _ => items.iter().map(|i| cell(i) + "\n").collect(),
        },
        other => cell(other) + "\n",
    }
}
