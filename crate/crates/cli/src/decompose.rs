//! Optimal decompositions on disk, and their independent verification.

use std::path::Path;

use croof::croof::{mixed_concurrence, optimal_decomposition};
use croof::matkernel::norm;
use croof::models::{make_model, ModelKind};
use croof::{CMatrix, Decomp, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::state::{complex, pairs, read_text, State};

/// Largest accepted Frobenius distance between the mixture and the state.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;
/// Largest accepted deviation of the weight sum, or of a component norm.
pub const WEIGHT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionFile {
    pub version: String,
    pub model: ModelKind,
    pub dim: usize,
    /// Closed-form concurrence of the decomposed state.
    pub concurrence: f64,
    pub average_concurrence: f64,
    pub reconstruction_residual: f64,
    pub components: Vec<ComponentEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub weight: f64,
    pub concurrence: f64,
    pub state: Vec<[f64; 2]>,
}

impl DecompositionFile {
    pub fn new(model: ModelKind, concurrence: f64, d: &Decomp) -> Self {
        Self {
            version: crate::VERSION.to_owned(),
            model,
            dim: model.hilbert_dim(),
            concurrence,
            average_concurrence: d.average_concurrence(),
            reconstruction_residual: d.reconstruction_residual,
            components: d
                .components
                .iter()
                .zip(&d.component_concurrences)
                .map(|(c, &k)| ComponentEntry {
                    weight: c.weight,
                    concurrence: k,
                    state: pairs(&c.state),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&read_text(path)?)
    }
}

/// Decomposition attaining the closed-form concurrence. Classical spin-1
/// states come out as at most four coherent states.
pub fn decompose(state: &State) -> Result<DecompositionFile> {
    let model = state.descriptor();
    let c = mixed_concurrence(&state.density, &model.conjugation)?;
    let d = optimal_decomposition(&state.density, &model.conjugation)?;
    Ok(DecompositionFile::new(state.model, c, &d))
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub value: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(checks: Vec<Check>) -> Self {
        Self {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

fn check(name: &'static str, value: f64, threshold: f64) -> Check {
    Check {
        name,
        passed: value <= threshold,
        value,
        threshold,
    }
}

/// Recomputes everything from the raw component vectors; the residual and
/// concurrences stored in the file are not trusted.
///
/// Weights that are negative or do not sum to one make the file meaningless
/// and are reported as an error rather than a failed check.
pub fn verify(
    state: &State,
    file: &DecompositionFile,
    tolerance: f64,
    require_classical: bool,
) -> Result<VerifyReport> {
    if let Some(w) = file.components.iter().map(|c| c.weight).find(|w| !w.is_finite() || *w < 0.0) {
        return Err(CliError::Invariant(format!("component weight {w} is not a probability")));
    }
    let sum: f64 = file.components.iter().map(|c| c.weight).sum();
    if (sum - 1.0).abs() > WEIGHT_TOL {
        return Err(CliError::Invariant(format!("weights sum to {sum}, not 1")));
    }

    let dim = state.density.dim();
    let mismatched = file.components.iter().filter(|c| c.state.len() != dim).count()
        + usize::from(file.model != state.model);
    let shape = check("shape", mismatched as f64, 0.0);
    if !shape.passed {
        return Ok(VerifyReport::new(vec![shape]));
    }

    let states: Vec<Vec<C64>> = file
        .components
        .iter()
        .map(|c| c.state.iter().copied().map(complex).collect())
        .collect();
    let norm_dev = states.iter().map(|s| (norm(s) - 1.0).abs()).fold(0.0, f64::max);
    let mixture = file
        .components
        .iter()
        .zip(&states)
        .fold(CMatrix::zeros(dim, dim), |acc, (c, s)| acc + CMatrix::outer(s).scale_real(c.weight));
    let residual = (&mixture - state.density.matrix()).frobenius_norm();
    let mut checks = vec![
        shape,
        check("componentNorms", norm_dev, WEIGHT_TOL),
        check("reconstruction", residual, RECONSTRUCTION_TOL),
    ];
    if require_classical {
        let model = make_model(state.model);
        let worst = states
            .iter()
            .map(|s| {
                let n = norm(s);
                let unit: Vec<C64> = s.iter().map(|z| z / n).collect();
                model.pure_concurrence(&unit)
            })
            .fold(0.0, f64::max);
        checks.push(check("classical", worst, tolerance));
    }
    Ok(VerifyReport::new(checks))
}
