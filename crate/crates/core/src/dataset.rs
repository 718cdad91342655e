//! Measurement datasets (CSV) and per-measurement report files.
//!
//! Dataset header: `label,n,kind,value,unit,reference`. Reports land in
//! `<out>/<label>/report.json` and `<out>/<label>/grid.csv`.

use std::collections::HashSet;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::witness::{Kind, Measurement, Unit, WitnessReport, GRID_FILE};

pub const HEADER: [&str; 6] = ["label", "n", "kind", "value", "unit", "reference"];

/// One dataset row: a measurement together with its citation.
pub type DatasetRecord = Measurement;

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    label: String,
    n: String,
    kind: String,
    value: String,
    unit: String,
    reference: String,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Dataset(msg.into())
}

fn check_label(label: &str) -> Result<()> {
    let ok = !label.is_empty()
        && label != "."
        && label != ".."
        && label
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.' | '+'));
    if ok {
        Ok(())
    } else {
        Err(bad(format!(
            "label {label:?} must be non-empty and use only letters, digits, '-', '_', '.', '+'"
        )))
    }
}

pub fn read_dataset(reader: impl Read) -> Result<Vec<DatasetRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| bad(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != HEADER {
        return Err(bad(format!(
            "expected header {}, found {}",
            HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize::<Row>().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| bad(format!("line {line}: {e}")))?;
        check_label(&row.label).map_err(|e| bad(format!("line {line}: {e}")))?;
        if !seen.insert(row.label.clone()) {
            return Err(bad(format!("line {line}: duplicate label {:?}", row.label)));
        }
        let n = row
            .n
            .parse::<u32>()
            .map_err(|_| bad(format!("line {line}: bad n {:?}", row.n)))?;
        let kind: Kind = row.kind.parse()?;
        let unit: Unit = row.unit.parse()?;
        let m = Measurement {
            label: row.label,
            n,
            kind,
            value: row.value,
            unit,
            reference: row.reference,
        };
        m.validate().map_err(|e| bad(format!("line {line}: {e}")))?;
        out.push(m);
    }
    Ok(out)
}

pub fn load_dataset(path: &Path) -> Result<Vec<DatasetRecord>> {
    let file = fs::File::open(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    read_dataset(file)
}

pub fn write_dataset(records: &[DatasetRecord], writer: impl Write) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    for m in records {
        wtr.serialize(Row {
            label: m.label.clone(),
            n: m.n.to_string(),
            kind: m.kind.to_string(),
            value: m.value.clone(),
            unit: m.unit.to_string(),
            reference: m.reference.clone(),
        })
        .map_err(|e| bad(e.to_string()))?;
    }
    wtr.flush().map_err(|e| bad(e.to_string()))
}

/// Writes `report.json` and the grid CSV under `<out>/<label>/`.
pub fn write_report(out: &Path, report: &WitnessReport) -> Result<PathBuf> {
    check_label(&report.label)?;
    let dir = out.join(&report.label);
    let io = |e: std::io::Error| bad(format!("{}: {e}", dir.display()));
    fs::create_dir_all(&dir).map_err(io)?;
    fs::write(dir.join("report.json"), report.to_json()).map_err(io)?;
    fs::write(dir.join(GRID_FILE), report.grid.to_csv()).map_err(io)?;
    Ok(dir)
}
