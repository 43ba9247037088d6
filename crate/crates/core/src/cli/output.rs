use std::path::{Path, PathBuf};

use serde::Serialize;

use super::CliError;

/// Shortest representation that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

pub(crate) fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<PathBuf, CliError> {
    let io = |e: csv::Error| CliError(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    w.flush().map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    Ok(path.to_path_buf())
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<PathBuf, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    Ok(path.to_path_buf())
}
