//! The JSON state file: `{ model, kind, dim, data }` with every complex
//! number written as `[re, im]`.

use std::path::Path;

use croof::models::{make_model, ModelKind};
use croof::{CMatrix, Density, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Mixed,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub model: ModelKind,
    pub kind: StateKind,
    pub dim: usize,
    /// A list of pairs for pure states, a row-major list of rows for mixed.
    pub data: serde_json::Value,
}

pub fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn complex(p: [f64; 2]) -> C64 {
    C64::new(p[0], p[1])
}

pub fn pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().copied().map(pair).collect()
}

impl StateFile {
    pub fn pure(model: ModelKind, psi: &[C64]) -> Self {
        Self {
            model,
            kind: StateKind::Pure,
            dim: psi.len(),
            data: serde_json::to_value(pairs(psi)).expect("pairs serialize"),
        }
    }

    pub fn mixed(model: ModelKind, rho: &CMatrix) -> Self {
        let rows: Vec<Vec<[f64; 2]>> = (0..rho.rows()).map(|i| pairs(&rho.row(i))).collect();
        Self {
            model,
            kind: StateKind::Mixed,
            dim: rho.rows(),
            data: serde_json::to_value(rows).expect("pairs serialize"),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&read_text(path)?)
    }

    /// Checks the shape of `data` against `kind` and `dim`, and `dim` against
    /// the model.
    pub fn load(&self) -> Result<State> {
        let pairs_of = |v: &serde_json::Value| -> Result<Vec<[f64; 2]>> {
            serde_json::from_value(v.clone())
                .map_err(|e| CliError::Parse(format!("data must hold [re, im] pairs: {e}")))
        };
        let amplitudes = match self.kind {
            StateKind::Pure => {
                let v = pairs_of(&self.data)?;
                if v.len() != self.dim {
                    return Err(CliError::Parse(format!("{} amplitudes for dim {}", v.len(), self.dim)));
                }
                Amplitudes::Pure(v.into_iter().map(complex).collect())
            }
            StateKind::Mixed => {
                let rows = self
                    .data
                    .as_array()
                    .ok_or_else(|| CliError::Parse("mixed data must be a list of rows".into()))?;
                if rows.len() != self.dim {
                    return Err(CliError::Parse(format!("{} rows for dim {}", rows.len(), self.dim)));
                }
                let mut entries = Vec::with_capacity(self.dim * self.dim);
                for row in rows {
                    let r = pairs_of(row)?;
                    if r.len() != self.dim {
                        return Err(CliError::Parse(format!("row of length {} for dim {}", r.len(), self.dim)));
                    }
                    entries.extend(r.into_iter().map(complex));
                }
                Amplitudes::Mixed(CMatrix::from_vec(self.dim, self.dim, entries)?)
            }
        };
        if self.dim != self.model.hilbert_dim() {
            return Err(CliError::Invariant(format!(
                "model {} has dimension {}, file says {}",
                self.model,
                self.model.hilbert_dim(),
                self.dim
            )));
        }
        let density = match &amplitudes {
            Amplitudes::Pure(psi) => Density::from_pure(psi)?,
            Amplitudes::Mixed(m) => Density::new(m.clone())?,
        };
        Ok(State {
            model: self.model,
            amplitudes,
            density,
        })
    }
}

#[derive(Debug, Clone)]
pub enum Amplitudes {
    Pure(Vec<C64>),
    Mixed(CMatrix),
}

/// A validated state together with its model.
#[derive(Debug, Clone)]
pub struct State {
    pub model: ModelKind,
    pub amplitudes: Amplitudes,
    pub density: Density,
}

impl State {
    pub fn kind(&self) -> StateKind {
        match self.amplitudes {
            Amplitudes::Pure(_) => StateKind::Pure,
            Amplitudes::Mixed(_) => StateKind::Mixed,
        }
    }

    /// Rejects a `--model` flag that disagrees with the file.
    pub fn check_model(&self, flag: Option<ModelKind>) -> Result<()> {
        match flag {
            Some(m) if m != self.model => Err(CliError::Usage(format!(
                "--model {m} but the state file is for {}",
                self.model
            ))),
            _ => Ok(()),
        }
    }

    pub fn descriptor(&self) -> croof::models::ModelDescriptor {
        make_model(self.model)
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}
