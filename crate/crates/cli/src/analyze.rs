use std::collections::BTreeMap;

use croof::croof::{concurrence_gap, mixed_concurrence, mu_values};
use croof::ensemble::{convex_roof_oracle, OracleBudget};
use croof::models::ModelKind;
use croof::spin1::{classify, giraud_z, Verdict};
use serde::Serialize;

use crate::decompose::{decompose, DecompositionFile};
use crate::error::Result;
use crate::state::{Amplitudes, State, StateKind};

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub tolerance: f64,
    pub seed: u64,
    /// Cross-check against the brute-force oracle with this budget.
    pub oracle: Option<OracleBudget>,
    pub with_decomposition: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            seed: 0,
            oracle: None,
            with_decomposition: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub version: &'static str,
    pub model: ModelKind,
    pub kind: StateKind,
    pub seed: u64,
    pub tolerance: f64,
    pub concurrence: f64,
    pub mu_values: Vec<f64>,
    /// `mu_1 - sum_{j>1} mu_j`; the concurrence is its positive part.
    pub mu_gap: f64,
    pub verdicts: BTreeMap<&'static str, Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin1: Option<Spin1Statistics>,
    pub residuals: Residuals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Spin1Statistics {
    pub trace_value: f64,
    pub z_min_eigenvalue: f64,
    /// `(a2, a1, a0)` of `det(x I - Z)`.
    pub z_charpoly: [f64; 3],
    pub criteria_agree: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Residuals {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hermiticity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<f64>,
    pub min_eigenvalue: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<f64>,
    /// Model-specific defect of a pure state: `2 l1 l2`, `8 |Pf w|`,
    /// `|det v|` or the spin-1 coherence residual.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classicality: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconstruction: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleSummary {
    pub upper_bound: f64,
    /// `upper_bound - concurrence`; non-negative up to rounding.
    pub gap: f64,
    pub restarts: usize,
    pub converged: bool,
}

pub fn analyze(state: &State, opts: &AnalyzeOptions) -> Result<Report> {
    let model = state.descriptor();
    let rho = &state.density;
    let tol = opts.tolerance;
    let concurrence = mixed_concurrence(rho, &model.conjugation)?;
    let mu = mu_values(rho, &model.conjugation)?;
    let mu_gap = concurrence_gap(rho, &model.conjugation)?;

    let mut verdicts = BTreeMap::new();
    verdicts.insert("muGap", Verdict::from_statistic(mu_gap, tol));
    let spin1 = if state.model == ModelKind::Spin1 {
        let cl = classify(rho, tol)?;
        verdicts.insert("traceCriterion", cl.trace_verdict);
        verdicts.insert("zPositivity", cl.z_verdict);
        Some(Spin1Statistics {
            trace_value: cl.trace_value,
            z_min_eigenvalue: cl.z_min_eigenvalue,
            z_charpoly: giraud_z(rho).charpoly,
            criteria_agree: cl.agree,
        })
    } else {
        None
    };

    let mut residuals = Residuals {
        min_eigenvalue: rho.spectral().min_eigenvalue(),
        ..Residuals::default()
    };
    match &state.amplitudes {
        Amplitudes::Pure(psi) => {
            residuals.normalization = Some((croof::matkernel::norm(psi) - 1.0).abs());
            residuals.classicality = Some(model.classicality_residual(psi)?);
        }
        Amplitudes::Mixed(m) => {
            residuals.hermiticity = Some(m.hermiticity_defect());
            residuals.trace = Some((m.trace().re - 1.0).abs());
        }
    }

    let decomposition = if opts.with_decomposition {
        let d = decompose(state)?;
        residuals.reconstruction = Some(d.reconstruction_residual);
        Some(d)
    } else {
        None
    };

    let oracle = opts.oracle.map(|budget| {
        let res = convex_roof_oracle(rho, &model.bilinear, OracleBudget { seed: opts.seed, ..budget });
        OracleSummary {
            upper_bound: res.upper_bound,
            gap: res.upper_bound - concurrence,
            restarts: res.restarts,
            converged: res.converged,
        }
    });

    Ok(Report {
        version: crate::VERSION,
        model: state.model,
        kind: state.kind(),
        seed: opts.seed,
        tolerance: tol,
        concurrence,
        mu_values: mu,
        mu_gap,
        verdicts,
        spin1,
        residuals,
        decomposition,
        oracle,
    })
}
