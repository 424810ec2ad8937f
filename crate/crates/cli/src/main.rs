use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use croof::ensemble::{OracleBackend, OracleBudget, SamplerKind};
use croof::models::ModelKind;
use croof_cli::analyze::{analyze, AnalyzeOptions};
use croof_cli::decompose::{decompose, verify, DecompositionFile};
use croof_cli::ensemble::{ensemble, write_csv, EnsembleOptions};
use croof_cli::state::StateFile;
use croof_cli::{to_json, CliError, Result};

/// Concurrence, classicality tests and optimal pure-state decompositions.
///
/// Exit codes: 0 success, 1 verification failure, 2 parse error,
/// 3 invariant violation.
#[derive(Parser)]
#[command(name = "croof", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Concurrence, mu values and classicality verdicts of a state file.
    Analyze(AnalyzeArgs),
    /// Write an optimal decomposition of a state file.
    Decompose(DecomposeArgs),
    /// Statistics over a seeded stream of random states.
    Ensemble(EnsembleArgs),
    /// Check a decomposition file against a state file.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// State file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// qubit2, fermion4, boson2 or spin1; must match the file when given.
    #[arg(long)]
    model: Option<ModelKind>,
    /// Output path; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: Common,
    /// Half-width of the boundary band.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cross-check the concurrence against the brute-force oracle.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Embed the optimal decomposition in the report.
    #[arg(long)]
    with_decomposition: bool,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Decomposition file written by `decompose`.
    #[arg(long)]
    decomposition: PathBuf,
    /// Tolerance of the per-component classical test.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Require every component to be classical.
    #[arg(long)]
    require_classical: bool,
}

#[derive(Args)]
struct EnsembleArgs {
    /// qubit2, fermion4, boson2 or spin1.
    #[arg(long)]
    model: ModelKind,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Sampler::HsMixed)]
    sampler: Sampler,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Run the oracle on every sample and report the formula gap.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Statistics (JSON); standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Per-sample table.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Oracle restarts per cardinality.
    #[arg(long, default_value_t = OracleBudget::default().restarts)]
    oracle_restarts: usize,
    /// Oracle iterations per restart.
    #[arg(long, default_value_t = OracleBudget::default().iterations)]
    oracle_iterations: usize,
    #[arg(long, value_enum, default_value_t = Backend::Gradient)]
    oracle_backend: Backend,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    /// Riemannian gradient descent.
    Gradient,
    /// (1+1) evolution strategy; derivative-free but slower to converge.
    Evolution,
}

impl BudgetArgs {
    fn budget(&self, seed: u64) -> OracleBudget {
        OracleBudget {
            restarts: self.oracle_restarts,
            iterations: self.oracle_iterations,
            seed,
            backend: match self.oracle_backend {
                Backend::Gradient => OracleBackend::Gradient,
                Backend::Evolution => OracleBackend::Evolution,
            },
            ..OracleBudget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Sampler {
    HaarPure,
    HsMixed,
    ClassicalMixture,
    CoherentMixture,
}

impl From<Sampler> for SamplerKind {
    fn from(s: Sampler) -> Self {
        match s {
            Sampler::HaarPure => Self::HaarPure,
            Sampler::HsMixed => Self::HsMixed,
            Sampler::ClassicalMixture => Self::ClassicalMixture,
            Sampler::CoherentMixture => Self::CoherentMixture,
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => {
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn load(common: &Common) -> Result<croof_cli::state::State> {
    let state = StateFile::read(&common.input)?.load()?;
    state.check_model(common.model)?;
    Ok(state)
}

/// Runs the command; `Ok(false)` means a verification failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze(a) => {
            let state = load(&a.common)?;
            let opts = AnalyzeOptions {
                tolerance: a.tolerance,
                seed: a.seed,
                oracle: a.oracle.then(|| a.budget.budget(a.seed)),
                with_decomposition: a.with_decomposition,
            };
            emit(a.common.output.as_deref(), &to_json(&analyze(&state, &opts)?)?)?;
        }
        Command::Decompose(d) => {
            let state = load(&d.common)?;
            emit(d.common.output.as_deref(), &to_json(&decompose(&state)?)?)?;
        }
        Command::Verify(v) => {
            let state = load(&v.common)?;
            let file = DecompositionFile::read(&v.decomposition)?;
            let report = verify(&state, &file, v.tolerance, v.require_classical)?;
            emit(v.common.output.as_deref(), &to_json(&report)?)?;
            return Ok(report.passed);
        }
        Command::Ensemble(e) => {
            let start = Instant::now();
            let opts = EnsembleOptions {
                model: e.model,
                samples: e.samples,
                seed: e.seed,
                sampler: e.sampler.into(),
                tolerance: e.tolerance,
                oracle: e.oracle.then(|| e.budget.budget(e.seed)),
            };
            let (stats, rows) = ensemble(&opts)?;
            if let Some(p) = &e.csv {
                let f = std::fs::File::create(p).map_err(|source| CliError::Io {
                    path: p.clone(),
                    source,
                })?;
                write_csv(&rows, std::io::BufWriter::new(f))?;
            }
            emit(e.output.as_deref(), &to_json(&stats)?)?;
            // kept off stdout so repeated runs stay byte-identical
            eprintln!("runtime: {:.3} s", start.elapsed().as_secs_f64());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
