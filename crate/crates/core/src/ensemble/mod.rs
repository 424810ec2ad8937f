//! Seeded random states and the brute-force convex-roof oracle.
//!
//! Every sample is drawn from its own generator, keyed by `(seed, index)`, so
//! streams are reproducible bit for bit and can be produced in parallel.

mod oracle;
pub mod random;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use oracle::{convex_roof_oracle, OracleBackend, OracleBudget, OracleResult};

use crate::error::{Error, Result};
use crate::models::{make_model, ModelKind};
use crate::spin1::{self, trace_criterion, Verdict};
use crate::{CMatrix, Density, C64};
use random::{haar_pure, hs_mixed, rng_for, uniform_simplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SamplerKind {
    HaarPure,
    HsMixed,
    /// Mixture of 2 to 8 random classical pure states of the model.
    ClassicalMixture,
    /// Mixture of 2 to 8 random spin-1 coherent states.
    CoherentMixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SamplerConfig {
    pub seed: u64,
    pub count: usize,
    pub dimension: usize,
    pub kind: SamplerKind,
    /// Model for the classical mixtures. Dimension 3 is shared by `boson2`
    /// and `spin1`; when absent, 3 means `spin1`.
    pub model: Option<ModelKind>,
}

impl SamplerConfig {
    pub fn new(kind: SamplerKind, dimension: usize, count: usize, seed: u64) -> Self {
        Self {
            seed,
            count,
            dimension,
            kind,
            model: None,
        }
    }

    pub fn for_model(kind: SamplerKind, model: ModelKind, count: usize, seed: u64) -> Self {
        Self {
            model: Some(model),
            ..Self::new(kind, model.hilbert_dim(), count, seed)
        }
    }

    fn resolve_model(&self) -> Result<ModelKind> {
        let model = match (self.model, self.dimension) {
            (Some(m), _) => m,
            (None, 3) => ModelKind::Spin1,
            (None, 4) => ModelKind::Qubit2,
            (None, 6) => ModelKind::Fermion4,
            (None, d) => return Err(Error::UnsupportedDimension(d)),
        };
        if model.hilbert_dim() != self.dimension {
            return Err(Error::DimensionMismatch(format!(
                "model {model} has dimension {}, sampler asks for {}",
                model.hilbert_dim(),
                self.dimension
            )));
        }
        if self.kind == SamplerKind::CoherentMixture && model != ModelKind::Spin1 {
            return Err(Error::InvalidArgument("coherent mixtures exist only for spin1".into()));
        }
        Ok(model)
    }
}

#[derive(Debug, Clone)]
pub enum Sample {
    Pure(Vec<C64>),
    Mixed(Density),
}

impl Sample {
    pub fn density(&self) -> Density {
        match self {
            Self::Pure(psi) => Density::from_pure(psi).expect("sampled vectors are normalized"),
            Self::Mixed(rho) => rho.clone(),
        }
    }

    pub fn pure(&self) -> Option<&[C64]> {
        match self {
            Self::Pure(psi) => Some(psi),
            Self::Mixed(_) => None,
        }
    }
}

/// The full stream, in index order.
pub fn sample(config: &SamplerConfig) -> Result<Vec<Sample>> {
    let model = config.resolve_model()?;
    Ok((0..config.count)
        .into_par_iter()
        .map(|i| draw(config, model, i as u64))
        .collect())
}

/// Sample number `index` of the stream, without generating the others.
pub fn sample_one(config: &SamplerConfig, index: u64) -> Result<Sample> {
    let model = config.resolve_model()?;
    Ok(draw(config, model, index))
}

fn draw(config: &SamplerConfig, model: ModelKind, index: u64) -> Sample {
    let mut rng = rng_for(config.seed, index);
    let n = config.dimension;
    match config.kind {
        SamplerKind::HaarPure => Sample::Pure(haar_pure(&mut rng, n)),
        SamplerKind::HsMixed => Sample::Mixed(Density::new(hs_mixed(&mut rng, n)).expect("valid by construction")),
        SamplerKind::ClassicalMixture | SamplerKind::CoherentMixture => {
            Sample::Mixed(classical_mixture(&mut rng, model))
        }
    }
}

/// Uniform-simplex mixture of `k` classical pure states, `k` uniform in 2..=8.
pub fn classical_mixture<R: Rng + ?Sized>(rng: &mut R, model: ModelKind) -> Density {
    let desc = make_model(model);
    let k = rng.random_range(2..=8);
    let weights = uniform_simplex(rng, k);
    let states: Vec<Vec<C64>> = (0..k).map(|_| desc.random_classical_pure(rng)).collect();
    Density::from_mixture(&weights, &states).expect("valid by construction")
}

/// Hilbert-Schmidt spin-1 state conditioned on `trace_criterion` declaring it
/// classical.
pub fn classical_hs_spin1<R: Rng + ?Sized>(rng: &mut R, tol: f64) -> Density {
    loop {
        let rho = Density::new(hs_mixed(rng, 3)).expect("valid by construction");
        if trace_criterion(&rho, tol).verdict == Verdict::Classical {
            return rho;
        }
    }
}

/// `p |Phi+><Phi+| + (1 - p) I/4`.
pub fn werner(p: f64) -> Density {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = C64::new(0.0, 0.0);
    let phi = [C64::new(h, 0.0), z, z, C64::new(h, 0.0)];
    let m = CMatrix::outer(&phi).scale_real(p) + CMatrix::identity(4).scale_real((1.0 - p) / 4.0);
    Density::new(m).expect("Werner states are valid for p in [-1/3, 1]")
}

/// Coherent mixture used as a spin-1 test fixture: mostly one coherent state
/// with a small admixture of `(0, 0, 1)`.
pub fn spin1_coherent_admixture(p: f64) -> Density {
    let z = C64::new(0.0, 0.0);
    let e3 = vec![z, z, C64::new(1.0, 0.0)];
    Density::from_mixture(&[1.0 - p, p], &[spin1::reference_coherent(), e3]).expect("valid")
}
