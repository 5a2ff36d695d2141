//! Plot-ready tables as CSV or JSON.
//!
//! CSV floats are written with 17 significant digits in scientific notation,
//! so every value round-trips through a parse exactly.

use serde_json::{Map, Number, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Empty,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Homogeneous rows under named columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Panics if the row width differs from the header.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width does not match the header"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(cell_json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Int(v) => Value::from(*v),
        // `+ 0.0` folds -0.0 into 0.0 so signed zeros never reach the output.
        Cell::Float(v) => Number::from_f64(*v + 0.0).map_or(Value::Null, Value::Number),
        Cell::Empty => Value::Null,
    }
}

fn cell_csv(c: &Cell) -> String {
    match c {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format!("{:.16e}", *v + 0.0),
        Cell::Empty => String::new(),
    }
}

pub fn emit_table(t: &Table, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(&t.to_json()).expect("table serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = t.columns.join(",");
            s.push('\n');
            for row in &t.rows {
                s.push_str(&row.iter().map(cell_csv).collect::<Vec<_>>().join(","));
                s.push('\n');
            }
            s
        }
    }
}
