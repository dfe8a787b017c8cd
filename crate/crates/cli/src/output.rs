//! Deterministic table output: CSV with a versioned header comment, or the
//! same rows as a JSON array of objects. Floats are always printed with 17
//! significant digits so identical invocations are byte-identical.

use serde_json::{Map, Number, Value};
use std::io::Write;

pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    OptFloat(Option<f64>),
    Bool(bool),
    Str(String),
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_float(*v),
            Cell::OptFloat(Some(v)) => fmt_float(*v),
            Cell::OptFloat(None) => String::new(),
            Cell::Bool(v) => v.to_string(),
            Cell::Str(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::Number((*v).into()),
            Cell::Float(v) => Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null),
            Cell::OptFloat(Some(v)) => {
                Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null)
            }
            Cell::OptFloat(None) => Value::Null,
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Str(s) => Value::String(s.clone()),
        }
    }
}

/// Rows plus schema metadata; `comments` become `# `-prefixed CSV header
/// lines and are omitted from JSON.
#[derive(Debug)]
pub struct Table {
    pub comments: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &str, columns: Vec<&'static str>) -> Self {
        Table {
            comments: vec![format!("pt-coulomb-lab v1, command={command}")],
            columns,
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, line: String) {
        self.comments.push(line);
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                for comment in &self.comments {
                    writeln!(out, "# {comment}")?;
                }
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                let objects: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (name, cell) in self.columns.iter().zip(row) {
                            obj.insert((*name).to_string(), cell.to_json());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &objects)?;
                writeln!(out)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_17_significant_digits() {
        assert_eq!(fmt_float(0.25), "2.5000000000000000e-1");
        assert_eq!(fmt_float(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_float(-0.390625), "-3.9062500000000000e-1");
    }

    #[test]
    fn csv_layout() {
        let mut table = Table::new("demo", vec!["n", "e"]);
        table.push(vec![Cell::Int(0), Cell::OptFloat(Some(0.5))]);
        table.push(vec![Cell::Int(1), Cell::OptFloat(None)]);
        let mut buf = Vec::new();
        table.write(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# pt-coulomb-lab v1, command=demo\nn,e\n0,5.0000000000000000e-1\n1,\n"
        );
    }

    #[test]
    fn json_mirrors_rows() {
        let mut table = Table::new("demo", vec!["n", "e"]);
        table.push(vec![Cell::Int(1), Cell::OptFloat(None)]);
        let mut buf = Vec::new();
        table.write(Format::Json, &mut buf).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(value[0]["n"], 1);
        assert!(value[0]["e"].is_null());
    }
}
