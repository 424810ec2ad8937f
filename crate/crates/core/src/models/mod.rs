//! The four physical models: two qubits, two fermions with a four-dimensional
//! single-particle space, two bosons in two modes, and a single spin 1.
//!
//! Each model fixes a conjugation matrix `T`, the bilinear operator `A` built
//! from it, an encoding of its states as vectors in `C^N`, its classical pure
//! states and the symmetry group that preserves the concurrence.

mod encoding;
mod magic;

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use encoding::{
    pfaffian_minor_sum, pfaffian_residual, schmidt_coeffs, slater_values_boson,
    slater_values_fermion, BosonState, FermionState,
};
pub use magic::{magic_basis, magic_transform, real_split, RealSplit};

use crate::ensemble::random::{gaussian_vector, haar_pure, random_rotation, rotation_matrix, special_unitary};
use crate::error::{Error, Result};
use crate::matkernel::{kron, kron_vec, normalized, ComplexMatrix};
use crate::{spin1, Bilinear, CMatrix, Conj, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Qubit2,
    Fermion4,
    Boson2,
    Spin1,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [Self::Qubit2, Self::Fermion4, Self::Boson2, Self::Spin1];

    pub fn name(self) -> &'static str {
        match self {
            Self::Qubit2 => "qubit2",
            Self::Fermion4 => "fermion4",
            Self::Boson2 => "boson2",
            Self::Spin1 => "spin1",
        }
    }

    pub fn hilbert_dim(self) -> usize {
        match self {
            Self::Qubit2 => 4,
            Self::Fermion4 => 6,
            Self::Boson2 | Self::Spin1 => 3,
        }
    }

    /// Unitary part of the model's antiunitary conjugation.
    pub fn conjugation_matrix(self) -> CMatrix {
        match self {
            Self::Qubit2 => antidiagonal(&[-1.0, 1.0, 1.0, -1.0]),
            Self::Fermion4 => antidiagonal(&[1.0, -1.0, 1.0, 1.0, -1.0, 1.0]),
            Self::Boson2 => antidiagonal(&[1.0, -1.0, 1.0]),
            Self::Spin1 => CMatrix::identity(3),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown model `{s}`")))
    }
}

/// Matrix with `entries[i]` at position `(i, n - 1 - i)`.
fn antidiagonal(entries: &[f64]) -> CMatrix {
    let n = entries.len();
    CMatrix::from_fn(n, n, |i, j| {
        if i + j == n - 1 {
            C64::new(entries[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// A model with its conjugation and bilinear operator.
#[derive(Debug, Clone)]
pub struct ModelDescriptor {
    pub kind: ModelKind,
    pub hilbert_dim: usize,
    pub conjugation: Conj,
    pub bilinear: Bilinear,
}

pub fn make_model(kind: ModelKind) -> ModelDescriptor {
    let conjugation = Conj::new(kind.conjugation_matrix()).expect("model T is a symmetric unitary");
    let bilinear = match kind {
        // T = I alone would also give |psi^T psi|; the coherent operator adds
        // the three antisymmetric Kraus operators i L_k, which vanish on
        // pure states but matter for the channel.
        ModelKind::Spin1 => spin1::coherent_bilinear(),
        _ => Bilinear::from_conjugation(&conjugation),
    };
    ModelDescriptor {
        kind,
        hilbert_dim: kind.hilbert_dim(),
        conjugation,
        bilinear,
    }
}

impl ModelDescriptor {
    /// Concurrence of a unit vector, normalized to 1 on the maximally
    /// non-classical states of every model.
    pub fn pure_concurrence(&self, psi: &[C64]) -> f64 {
        self.bilinear.pure_concurrence(psi)
    }

    /// Model-specific classicality defect computed without the bilinear
    /// operator: `2 l_1 l_2` from the Schmidt coefficients, the normalized
    /// Pfaffian, `|det v|`, or the spin-1 coherence residual.
    pub fn classicality_residual(&self, psi: &[C64]) -> Result<f64> {
        match self.kind {
            ModelKind::Qubit2 => {
                let l = schmidt_coeffs(psi, 2, 2)?;
                Ok(2.0 * l[0] * l[1])
            }
            ModelKind::Fermion4 => Ok(pfaffian_residual(&FermionState::from_vec(psi)?)),
            ModelKind::Boson2 => Ok(BosonState::from_vec(psi)?.det().norm()),
            ModelKind::Spin1 => Ok(spin1::coherence_residual(psi)),
        }
    }

    /// A random element of the symmetry group, as its (unitary) action on
    /// state vectors.
    pub fn random_symmetry<R: Rng + ?Sized>(&self, rng: &mut R) -> CMatrix {
        match self.kind {
            ModelKind::Qubit2 => kron(&special_unitary(rng, 2), &special_unitary(rng, 2)),
            ModelKind::Fermion4 => {
                let u = special_unitary(rng, 4);
                induced_action(6, |x| {
                    let w = FermionState::from_vec_unchecked(x).w().clone();
                    FermionState::encode(&(&(&u * &w) * &u.transpose()))
                })
            }
            ModelKind::Boson2 => {
                let u = special_unitary(rng, 2);
                induced_action(3, |x| {
                    let v = BosonState::from_vec_unchecked(x).v().clone();
                    BosonState::encode(&(&(&u * &v) * &u.transpose()))
                })
            }
            ModelKind::Spin1 => rotation_matrix(&random_rotation(rng)),
        }
    }

    /// A random pure state from the model's classical set.
    pub fn random_classical_pure<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<C64> {
        match self.kind {
            ModelKind::Qubit2 => kron_vec(&haar_pure(rng, 2), &haar_pure(rng, 2)),
            ModelKind::Fermion4 => {
                let a = gaussian_vector(rng, 4);
                let b = gaussian_vector(rng, 4);
                let w = ComplexMatrix::from_fn(4, 4, |i, j| a[i] * b[j] - a[j] * b[i]);
                normalized(&FermionState::encode(&w))
            }
            ModelKind::Boson2 => {
                let a = gaussian_vector(rng, 2);
                let v = ComplexMatrix::from_fn(2, 2, |i, j| a[i] * a[j]);
                normalized(&BosonState::encode(&v))
            }
            ModelKind::Spin1 => rotation_matrix(&random_rotation(rng)).matvec(&spin1::reference_coherent()),
        }
    }
}

/// Matrix of a linear map on `C^n`, assembled column by column.
fn induced_action(n: usize, f: impl Fn(&[C64]) -> Vec<C64>) -> CMatrix {
    let cols: Vec<Vec<C64>> = (0..n)
        .map(|k| {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[k] = C64::new(1.0, 0.0);
            f(&e)
        })
        .collect();
    CMatrix::from_columns(&cols)
}

#[cfg(test)]
mod tests;
