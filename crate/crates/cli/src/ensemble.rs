//! Statistics over a seeded stream of random states.

use croof::croof::{concurrence_gap, mixed_concurrence};
use croof::ensemble::{convex_roof_oracle, sample, OracleBudget, SamplerConfig, SamplerKind};
use croof::models::{make_model, ModelKind};
use croof::spin1::{classify, Verdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};

/// Gap below which a formula value counts as confirmed by the oracle.
pub const ORACLE_GAP_TOL: f64 = 1e-4;

#[derive(Debug, Clone)]
pub struct EnsembleOptions {
    pub model: ModelKind,
    pub samples: usize,
    pub seed: u64,
    pub sampler: SamplerKind,
    pub tolerance: f64,
    pub oracle: Option<OracleBudget>,
}

/// One CSV line. Spin-1 statistics are left empty for the other models.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnsembleRow {
    pub sample_index: usize,
    pub concurrence: f64,
    pub trace_value: Option<f64>,
    pub mu_gap: f64,
    pub z_min_eigenvalue: Option<f64>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub decided: bool,
    #[serde(skip)]
    pub agree: bool,
    #[serde(skip)]
    pub oracle_gap: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnsembleStats {
    pub version: &'static str,
    pub model: ModelKind,
    pub sampler: SamplerKind,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub classical_fraction: f64,
    pub boundary_fraction: f64,
    /// Samples where no criterion falls inside the boundary band.
    pub decided_samples: usize,
    /// Fraction of the decided samples on which all criteria agree. Models
    /// other than spin1 have a single criterion, so this is 1 for them.
    pub agreement_rate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleStats>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleStats {
    /// Largest `|oracle - formula|`.
    pub max_gap: f64,
    /// Smallest `oracle - formula`; negative beyond rounding would mean the
    /// formula overestimates the convex roof.
    pub min_margin: f64,
    /// Fraction of samples with gap at most `ORACLE_GAP_TOL`.
    pub within_tolerance: f64,
}

pub fn ensemble(opts: &EnsembleOptions) -> Result<(EnsembleStats, Vec<EnsembleRow>)> {
    if opts.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let config = SamplerConfig::for_model(opts.sampler, opts.model, opts.samples, opts.seed);
    let states = sample(&config).map_err(|e| CliError::Usage(e.to_string()))?;
    let model = make_model(opts.model);
    let tol = opts.tolerance;
    let rows = states
        .par_iter()
        .enumerate()
        .map(|(i, s)| -> Result<EnsembleRow> {
            let rho = s.density();
            let concurrence = mixed_concurrence(&rho, &model.conjugation)?;
            let mu_gap = concurrence_gap(&rho, &model.conjugation)?;
            let mut row = EnsembleRow {
                sample_index: i,
                concurrence,
                trace_value: None,
                mu_gap,
                z_min_eigenvalue: None,
                verdict: Verdict::from_statistic(mu_gap, tol),
                decided: Verdict::from_statistic(mu_gap, tol) != Verdict::Boundary,
                agree: true,
                oracle_gap: None,
            };
            if opts.model == ModelKind::Spin1 {
                let cl = classify(&rho, tol)?;
                row.trace_value = Some(cl.trace_value);
                row.z_min_eigenvalue = Some(cl.z_min_eigenvalue);
                row.verdict = cl.verdict();
                row.decided = cl.outside_band();
                row.agree = cl.agree;
            }
            if let Some(budget) = opts.oracle {
                let budget = OracleBudget { seed: opts.seed ^ i as u64, ..budget };
                row.oracle_gap = Some(convex_roof_oracle(&rho, &model.bilinear, budget).upper_bound - concurrence);
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;

    let n = rows.len() as f64;
    let fraction = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count() as f64 / n;
    let decided: Vec<&EnsembleRow> = rows.iter().filter(|r| r.decided).collect();
    let agreement_rate = if decided.is_empty() {
        1.0
    } else {
        decided.iter().filter(|r| r.agree).count() as f64 / decided.len() as f64
    };
    let oracle = opts.oracle.map(|_| {
        let gaps: Vec<f64> = rows.iter().filter_map(|r| r.oracle_gap).collect();
        OracleStats {
            max_gap: gaps.iter().map(|g| g.abs()).fold(0.0, f64::max),
            min_margin: gaps.iter().copied().fold(f64::INFINITY, f64::min),
            within_tolerance: gaps.iter().filter(|g| g.abs() <= ORACLE_GAP_TOL).count() as f64 / n,
        }
    });
    let stats = EnsembleStats {
        version: crate::VERSION,
        model: opts.model,
        sampler: opts.sampler,
        seed: opts.seed,
        samples: rows.len(),
        tolerance: tol,
        classical_fraction: fraction(Verdict::Classical),
        boundary_fraction: fraction(Verdict::Boundary),
        decided_samples: decided.len(),
        agreement_rate,
        oracle,
    };
    Ok((stats, rows))
}

pub fn write_csv<W: std::io::Write>(rows: &[EnsembleRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Invariant(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::Invariant(e.to_string()))
}
