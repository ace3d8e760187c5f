//! Matrix input: nine reals in row-major order.

use so21::lie::Mat3;
use so21::SO21Element;

use crate::CliError;

/// Parses nine reals separated by whitespace and/or commas.
pub fn parse_matrix(text: &str) -> Result<Mat3, CliError> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Input(format!("not a finite real: {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let entries: [f64; 9] = values
        .as_slice()
        .try_into()
        .map_err(|_| CliError::Input(format!("expected 9 matrix entries, got {}", values.len())))?;
    Ok(Mat3::from_row_major(entries))
}

/// Parses and checks the group invariants at `tol`.
pub fn parse_element(text: &str, tol: f64) -> Result<SO21Element, CliError> {
    let m = parse_matrix(text)?;
    Ok(SO21Element::new(m, tol)?)
}
