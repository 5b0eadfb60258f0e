//! Tabular results and their CSV / JSON encodings.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::config::RunConfig;
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

impl Cell {
    /// Shortest text that parses back to the same value.
    fn to_csv_field(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:?}"),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(x) => s.serialize_f64(*x),
            Cell::Int(n) => s.serialize_u64(*n),
            Cell::Text(t) => s.serialize_str(t),
        }
    }
}

/// Column-named rows plus the metadata that goes into the JSON archive.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Largest quadrature error estimate over all rows, if any.
    pub error_estimate: Option<f64>,
    /// Descriptive names of the formulas used.
    pub formulas: Vec<&'static str>,
    pub regime: Option<&'static str>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>, formulas: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            error_estimate: None,
            formulas,
            regime: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }
}

struct Row<'a> {
    columns: &'a [&'static str],
    cells: &'a [Cell],
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.cells.len()))?;
        for (k, v) in self.columns.iter().zip(self.cells) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Provenance<'a> {
    paper_eq_refs: &'a [&'static str],
}

#[derive(Serialize)]
struct Document<'a> {
    config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    regime: Option<&'static str>,
    results: Vec<Row<'a>>,
    error_estimate: Option<f64>,
    provenance: Provenance<'a>,
}

pub fn to_csv(table: &Table) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&table.columns).map_err(csv_error)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::to_csv_field)).map_err(csv_error)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

pub fn to_json(config: &RunConfig, table: &Table) -> Result<Vec<u8>, CliError> {
    let doc = Document {
        config,
        regime: table.regime,
        results: table
            .rows
            .iter()
            .map(|cells| Row {
                columns: &table.columns,
                cells,
            })
            .collect(),
        error_estimate: table.error_estimate,
        provenance: Provenance {
            paper_eq_refs: &table.formulas,
        },
    };
    let mut out = serde_json::to_vec_pretty(&doc).map_err(|e| CliError::Io(e.into()))?;
    out.push(b'\n');
    Ok(out)
}
