//! CSV and JSON-lines output.
//!
//! Numbers are written in their shortest round-trip form (see
//! [`format_f64`]), so reading a file back gives bit-identical values.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{ProfilePoint, RunMetadata};
use crate::error::{Error, Result};
use crate::ext_real::{format_f64, ExtendedReal};
use crate::solver::{EvalRecord, RunTrace, StepKind};

pub const TRACE_HEADER: [&str; 6] = [
    "eval_index",
    "step_kind",
    "cumulative_cost",
    "value",
    "best_so_far",
    "x",
];
pub const PROFILE_HEADER: [&str; 2] = ["cumulative_cost", "best_value"];

fn csv_error(path: &Path, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::Format {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

fn format_error(path: &Path, message: String) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        message,
    }
}

fn writer(path: &Path) -> Result<csv::Writer<File>> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn reader(path: &Path) -> Result<csv::Reader<File>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Reader::from_reader(file))
}

fn parse_f64(path: &Path, field: &str) -> Result<f64> {
    field
        .parse::<f64>()
        .map_err(|_| format_error(path, format!("not a number: {field:?}")))
}

fn parse_ext(path: &Path, field: &str) -> Result<ExtendedReal> {
    ExtendedReal::new(parse_f64(path, field)?).ok_or_else(|| format_error(path, "NaN value".into()))
}

/// Writes one row per evaluation of `trace`.
pub fn write_trace_csv(path: impl AsRef<Path>, trace: &RunTrace) -> Result<()> {
    let path = path.as_ref();
    let mut w = writer(path)?;
    w.write_record(TRACE_HEADER)
        .map_err(|e| csv_error(path, e))?;
    for r in &trace.records {
        let x: Vec<String> = r.x.iter().map(|v| format_f64(*v)).collect();
        w.write_record([
            r.eval_index.to_string(),
            r.step.to_string(),
            format_f64(r.cumulative_cost),
            r.value.to_string(),
            r.best_so_far.to_string(),
            x.join(";"),
        ])
        .map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Reads the records of a file written by [`write_trace_csv`].
pub fn read_trace_csv(path: impl AsRef<Path>) -> Result<Vec<EvalRecord>> {
    let path = path.as_ref();
    let mut rd = reader(path)?;
    let header = rd.headers().map_err(|e| csv_error(path, e))?;
    if header.iter().ne(TRACE_HEADER) {
        return Err(format_error(path, format!("unexpected header {header:?}")));
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(|e| csv_error(path, e))?;
        let x = if row[5].is_empty() {
            Vec::new()
        } else {
            row[5]
                .split(';')
                .map(|v| parse_f64(path, v))
                .collect::<Result<_>>()?
        };
        out.push(EvalRecord {
            eval_index: row[0]
                .parse()
                .map_err(|_| format_error(path, format!("bad index {:?}", &row[0])))?,
            step: row[1]
                .parse::<StepKind>()
                .map_err(|m| format_error(path, m))?,
            cumulative_cost: parse_f64(path, &row[2])?,
            value: parse_ext(path, &row[3])?,
            best_so_far: parse_ext(path, &row[4])?,
            x,
        });
    }
    Ok(out)
}

pub fn write_profile_csv(path: impl AsRef<Path>, profile: &[ProfilePoint]) -> Result<()> {
    let path = path.as_ref();
    let mut w = writer(path)?;
    w.write_record(PROFILE_HEADER)
        .map_err(|e| csv_error(path, e))?;
    for p in profile {
        w.write_record([format_f64(p.cumulative_cost), p.best_value.to_string()])
            .map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_profile_csv(path: impl AsRef<Path>) -> Result<Vec<ProfilePoint>> {
    let path = path.as_ref();
    let mut rd = reader(path)?;
    let header = rd.headers().map_err(|e| csv_error(path, e))?;
    if header.iter().ne(PROFILE_HEADER) {
        return Err(format_error(path, format!("unexpected header {header:?}")));
    }
    rd.records()
        .map(|row| {
            let row = row.map_err(|e| csv_error(path, e))?;
            Ok(ProfilePoint {
                cumulative_cost: parse_f64(path, &row[0])?,
                best_value: parse_ext(path, &row[1])?,
            })
        })
        .collect()
}

/// Writes one JSON object per line.
pub fn write_metadata_jsonl(path: impl AsRef<Path>, runs: &[RunMetadata]) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    for run in runs {
        serde_json::to_writer(&mut w, run).map_err(|e| format_error(path, e.to_string()))?;
        w.write_all(b"\n").map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
