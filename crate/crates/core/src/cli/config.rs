use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::emission::AtomParams;
use crate::field::CoherentSpec;
use crate::hilbert::io::ModeSpec;
use crate::hilbert::{AtomLevel, BasisIndex, HilbertLayout, ModeLabel, StateVector, C64};
use crate::units::FieldConfig;

use super::CliError;

/// Cubic-box mode generator: `kappa = (2 pi / L)(nx, ny, nz)` with `|n_i| <= max_i`,
/// zero excluded, `V = L^3`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxModes {
    pub edge: f64,
    pub max: [u32; 3],
    #[serde(default = "both_helicities")]
    pub polarizations: Vec<i8>,
}

fn both_helicities() -> Vec<i8> {
    vec![1, -1]
}

impl BoxModes {
    pub fn modes(&self, c: f64) -> Result<Vec<ModeLabel>, CliError> {
        if !(self.edge.is_finite() && self.edge > 0.0) {
            return Err(CliError::config(format!("box edge must be > 0, got {}", self.edge)));
        }
        let range = |m: u32| -(m as i64)..=m as i64;
        let step = 2.0 * PI / self.edge;
        let mut out = Vec::new();
        for nx in range(self.max[0]) {
            for ny in range(self.max[1]) {
                for nz in range(self.max[2]) {
                    if (nx, ny, nz) == (0, 0, 0) {
                        continue;
                    }
                    let kappa = [step * nx as f64, step * ny as f64, step * nz as f64];
                    for &s in &self.polarizations {
                        out.push(ModeLabel::field(s, kappa, 0, c)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// One basis component of a configured state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub mode: usize,
    #[serde(default)]
    pub n: usize,
    /// `[re, im]`
    pub amp: C64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedState {
    pub name: String,
    pub components: Vec<Component>,
}

/// Either an explicit list of instants or `count` evenly spaced ones in `[start, stop]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimeGrid {
    List(Vec<f64>),
    Range { start: f64, stop: f64, count: usize },
}

impl TimeGrid {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            TimeGrid::List(ref v) => v.clone(),
            TimeGrid::Range { start, stop, count } => match count {
                0 => Vec::new(),
                1 => vec![start],
                _ => (0..count).map(|i| start + (stop - start) * i as f64 / (count - 1) as f64).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmissionSettings {
    #[serde(default = "one")]
    pub t: f64,
    /// Excited-atom photon distribution; defaults to a uniform vacuum superposition.
    #[serde(default)]
    pub initial: Option<Vec<Component>>,
    /// Dipole magnitudes for the convergence study (empty skips it).
    #[serde(default)]
    pub dipoles: Vec<f64>,
}

fn one() -> f64 {
    1.0
}

/// Batch configuration shared by all commands. Unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub modes: Option<Vec<ModeSpec>>,
    #[serde(default, rename = "box")]
    pub box_modes: Option<BoxModes>,
    pub nmax: usize,
    #[serde(default)]
    pub field: Option<FieldConfig>,
    #[serde(default)]
    pub atom: Option<AtomParams>,
    #[serde(default)]
    pub coherent: Option<CoherentSpec>,
    /// States for `vacuum-energy`; defaults to the uniform zero-photon superposition.
    #[serde(default)]
    pub states: Option<Vec<NamedState>>,
    #[serde(default)]
    pub times: Option<TimeGrid>,
    #[serde(default)]
    pub points: Option<Vec<[f64; 3]>>,
    #[serde(default)]
    pub emission: Option<EmissionSettings>,
    /// Random spacetime samples for `field-identities`.
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Output directory, overridden by `--out`.
    #[serde(default)]
    pub out: Option<String>,
}

impl Default for RunConfig {
    /// Four mixed-direction modes with `N = 5`.
    fn default() -> Self {
        let mode = |s, kappa| ModeSpec { s: Some(s), kappa: Some(kappa), omega: None, j: 0 };
        Self {
            modes: Some(vec![
                mode(1, [1.0, 0.0, 0.0]),
                mode(-1, [0.0, 1.0, 0.0]),
                mode(1, [0.0, 0.0, 2.0]),
                mode(-1, [1.0, 1.0, 1.0]),
            ]),
            box_modes: None,
            nmax: 5,
            field: None,
            atom: None,
            coherent: None,
            states: None,
            times: None,
            points: None,
            emission: None,
            samples: None,
            tolerance: None,
            seed: None,
            out: None,
        }
    }
}

/// Config after validation.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub config: RunConfig,
    pub field: FieldConfig,
    pub layout: HilbertLayout,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::config(format!("config: {e}")))
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Checks everything that does not depend on the command and builds the field layout.
    pub fn resolve(self) -> Result<Resolved, CliError> {
        let mut field = self.field.unwrap_or_default();
        let modes = match (&self.modes, &self.box_modes) {
            (Some(_), Some(_)) => return Err(CliError::config("give either `modes` or `box`, not both")),
            (None, None) => return Err(CliError::config("missing `modes` or `box`")),
            (Some(specs), None) => specs.iter().map(|s| s.to_label(&field)).collect::<crate::Result<Vec<_>>>()?,
            (None, Some(b)) => {
                let volume = b.edge.powi(3);
                if let Some(f) = &self.field {
                    if f.volume != 1.0 && f.volume != volume {
                        return Err(CliError::config(format!("field.volume {} conflicts with box volume {volume}", f.volume)));
                    }
                }
                field.volume = volume;
                b.modes(field.c)?
            }
        };
        field.validate()?;
        if let Some(tol) = self.tolerance {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::config(format!("tolerance must be > 0, got {tol}")));
            }
        }
        if let Some(atom) = &self.atom {
            atom.validate()?;
        }
        if let Some(TimeGrid::Range { start, stop, .. }) = &self.times {
            if !(start.is_finite() && stop.is_finite()) {
                return Err(CliError::config("time range must be finite"));
            }
        }
        let layout = HilbertLayout::new(modes, self.nmax, false)?;
        Ok(Resolved { config: self, field, layout })
    }
}

impl Resolved {
    pub fn tolerance(&self, default: f64) -> f64 {
        self.config.tolerance.unwrap_or(default)
    }

    pub fn times(&self) -> Vec<f64> {
        self.config.times.as_ref().map_or_else(|| vec![0.0], TimeGrid::values)
    }

    pub fn points(&self) -> Vec<[f64; 3]> {
        self.config.points.clone().unwrap_or_else(|| vec![[0.0; 3]])
    }

    pub fn atom(&self) -> Result<AtomParams, CliError> {
        self.config.atom.ok_or_else(|| CliError::config("this command needs `atom`"))
    }

    /// Builds a normalized state from components; `atom` places every component in that level.
    pub fn state(&self, layout: &HilbertLayout, components: &[Component], atom: Option<AtomLevel>) -> Result<StateVector, CliError> {
        let mut seen = Vec::with_capacity(components.len());
        for c in components {
            if seen.contains(&(c.mode, c.n)) {
                return Err(CliError::config(format!("component (mode {}, n {}) listed twice", c.mode, c.n)));
            }
            seen.push((c.mode, c.n));
        }
        let index = |c: &Component| match atom {
            Some(level) => BasisIndex::with_atom(c.mode, c.n, level),
            None => BasisIndex::new(c.mode, c.n),
        };
        Ok(StateVector::superposition(layout, components.iter().map(|c| (index(c), c.amp)))?)
    }

    /// Uniform zero-photon superposition over all modes.
    pub fn uniform_vacuum(&self) -> Vec<Component> {
        (0..self.layout.mode_count()).map(|mode| Component { mode, n: 0, amp: C64::new(1.0, 0.0) }).collect()
    }
}
