//! Row types and their CSV/JSON encodings.
//!
//! Both encodings print floats in shortest round-trip form, so a value read
//! back from either is the same `f64` that was written.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One sample of a geodesic: the matrix, its projection and the
/// semigeodesic coordinates of the projection.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub m11: f64,
    pub m12: f64,
    pub m13: f64,
    pub m21: f64,
    pub m22: f64,
    pub m23: f64,
    pub m31: f64,
    pub m32: f64,
    pub m33: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
    pub u: f64,
    pub v: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutTableRow {
    pub beta: f64,
    pub regime: String,
    /// Empty in CSV and `null` in JSON when infinite.
    pub t1: Option<f64>,
    pub psi: Option<f64>,
    pub area_residual: f64,
}

/// Adjacent rows where `t1` fails to decrease.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub beta_i: f64,
    pub beta_j: f64,
    pub t1_i: f64,
    pub t1_j: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutTable {
    pub rows: Vec<CutTableRow>,
    pub violations: Vec<Violation>,
}

/// One minimiser reported by `dist`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceRow {
    pub distance: f64,
    pub minimizers: usize,
    pub phi0: f64,
    pub beta: f64,
    pub endpoint_error: f64,
}

/// One solution reported by `log`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogRow {
    pub phi0: f64,
    pub beta: f64,
    pub t: f64,
    pub endpoint_error: f64,
    pub multiplicity_hint: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CutPointRow {
    pub phi0: f64,
    pub beta: f64,
    pub regime: String,
    pub t1: f64,
    pub m11: f64,
    pub m12: f64,
    pub m13: f64,
    pub m21: f64,
    pub m22: f64,
    pub m23: f64,
    pub m31: f64,
    pub m32: f64,
    pub m33: f64,
    /// Rotation angle when the cut point is conjugate.
    pub so2_angle: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpRow {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub m11: f64,
    pub m12: f64,
    pub m13: f64,
    pub m21: f64,
    pub m22: f64,
    pub m23: f64,
    pub m31: f64,
    pub m32: f64,
    pub m33: f64,
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("cannot write output: {e}"))
}

/// Writes `rows` as CSV with a header, or as a JSON array of objects.
pub fn write_rows<T: Serialize, W: Write>(
    w: W,
    format: Format,
    rows: &[T],
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(w);
            for row in rows {
                csv.serialize(row).map_err(io_err)?;
            }
            csv.flush().map_err(io_err)
        }
        Format::Json => write_json(w, rows),
    }
}

fn write_json<T: Serialize + ?Sized, W: Write>(mut w: W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut w, value).map_err(io_err)?;
    writeln!(w).map_err(io_err)
}

/// CSV rows followed by a `#` comment block listing the violations; JSON
/// carries both lists in one object.
pub fn write_cut_table<W: Write>(
    mut w: W,
    format: Format,
    table: &CutTable,
) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(w, table),
        Format::Csv => {
            write_rows(&mut w, Format::Csv, &table.rows)?;
            writeln!(w, "# monotonicity violations: {}", table.violations.len()).map_err(io_err)?;
            if !table.violations.is_empty() {
                writeln!(w, "# i,j,beta_i,beta_j,t1_i,t1_j").map_err(io_err)?;
            }
            for v in &table.violations {
                writeln!(
                    w,
                    "# {},{},{},{},{},{}",
                    v.i, v.j, v.beta_i, v.beta_j, v.t1_i, v.t1_j
                )
                .map_err(io_err)?;
            }
            Ok(())
        }
    }
}
