use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants and quantization box. Natural units by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FieldConfig {
    pub hbar: f64,
    pub c: f64,
    pub volume: f64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        Self { hbar: 1.0, c: 1.0, volume: 1.0 }
    }
}

impl FieldConfig {
    pub fn new(hbar: f64, c: f64, volume: f64) -> Result<Self> {
        let cfg = Self { hbar, c, volume };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("hbar", self.hbar), ("c", self.c), ("volume", self.volume)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        Ok(())
    }
}
