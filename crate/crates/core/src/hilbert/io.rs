//! Text formats: JSON mode lists and columnar `index,re,im` dumps.

use std::io::{Read, Write};

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use super::matrix::C64;
use super::{HilbertLayout, ModeLabel, Operator, StateVector};
use crate::error::{Error, Result};
use crate::units::FieldConfig;

/// One entry of a mode file.
///
/// Field modes give `s` and `kappa` (`omega` is then `c |kappa|`, and may be
/// repeated as a consistency check). Abstract modes give only `omega`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default)]
    pub j: u32,
}

impl ModeSpec {
    pub fn to_label(&self, config: &FieldConfig) -> Result<ModeLabel> {
        match (self.kappa, self.omega) {
            (Some(kappa), None) => ModeLabel::field(self.s.unwrap_or(1), kappa, self.j, config.c),
            (Some(kappa), Some(omega)) => ModeLabel::with_frequency(self.s.unwrap_or(1), kappa, omega, self.j, config.c),
            (None, Some(omega)) => {
                if self.s.is_some() {
                    return Err(Error::InvalidMode("abstract modes take no polarization index".into()));
                }
                ModeLabel::abstract_mode(omega, self.j)
            }
            (None, None) => Err(Error::InvalidMode("mode needs kappa or omega".into())),
        }
    }
}

/// Parses a JSON list of [`ModeSpec`] entries.
pub fn parse_modes(text: &str, config: &FieldConfig) -> Result<Vec<ModeLabel>> {
    let specs: Vec<ModeSpec> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    specs.iter().map(|s| s.to_label(config)).collect()
}

pub fn read_modes<R: Read>(reader: R, config: &FieldConfig) -> Result<Vec<ModeLabel>> {
    let specs: Vec<ModeSpec> = serde_json::from_reader(reader).map_err(|e| Error::Parse(e.to_string()))?;
    specs.iter().map(|s| s.to_label(config)).collect()
}

/// Writes every amplitude as `index,re,im` (with header).
pub fn write_state<W: Write>(state: &StateVector, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["index", "re", "im"]).map_err(io)?;
    for (i, a) in state.amplitudes().iter().enumerate() {
        w.write_record([i.to_string(), a.re.to_string(), a.im.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

/// Reads the output of [`write_state`]. Missing indices are zero.
pub fn read_state<R: Read>(layout: &HilbertLayout, reader: R) -> Result<StateVector> {
    let mut amps = DVector::from_element(layout.dim(), C64::new(0.0, 0.0));
    let mut r = csv::Reader::from_reader(reader);
    for rec in r.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.len() != 3 {
            return Err(Error::Parse(format!("expected 3 columns, got {}", rec.len())));
        }
        let i: usize = parse_field(&rec[0])?;
        if i >= layout.dim() {
            return Err(Error::IndexOutOfRange(format!("index {i} >= dimension {}", layout.dim())));
        }
        amps[i] = C64::new(parse_field(&rec[1])?, parse_field(&rec[2])?);
    }
    StateVector::from_amplitudes(layout, amps)
}

/// Writes the nonzero entries as `row,col,re,im` in row-major order.
pub fn write_operator<W: Write>(op: &Operator, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(["row", "col", "re", "im"]).map_err(io)?;
    for (i, j, v) in op.matrix().nonzeros() {
        w.write_record([i.to_string(), j.to_string(), v.re.to_string(), v.im.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

fn parse_field<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("cannot parse {s:?}")))
}
