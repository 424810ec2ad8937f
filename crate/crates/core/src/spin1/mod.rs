//! Spin-1 classicality.
//!
//! Coherent spin-1 states are, in the Cartesian basis used here, exactly the
//! unit vectors with `psi^T psi = 0`. A mixed state is classical when it is a
//! mixture of coherent states. Three equivalent tests are provided: the sign
//! of `mu_1 - mu_2 - mu_3`, the sign of `2 Tr(R^2) - (Tr R)^2` with
//! `R = rho rho*`, and positivity of the matrix `Z = W - u u^T`. Classical
//! states admit a decomposition into at most four coherent states.

mod criteria;

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::OnceLock;

pub use criteria::{
    canonical_form, classify, giraud_z, r_matrix, trace_criterion, CanonicalForm, Classification,
    GiraudData, TraceCriterion, Verdict,
};

use crate::croof::optimal_decomposition;
use crate::error::{Error, Result};
use crate::matkernel::{inner, kron, kron_vec, norm};
use crate::{Bilinear, CMatrix, Conj, Decomp, Density, C64};

/// Default half-width of the band around zero reported as `boundary`.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The three spin-1 generators in the Cartesian basis,
/// `(L_k)_{ij} = -i epsilon_{kij}`.
pub fn spin_matrices() -> &'static [CMatrix; 3] {
    static L: OnceLock<[CMatrix; 3]> = OnceLock::new();
    L.get_or_init(|| {
        let i = (0.0, 1.0);
        let m = (0.0, -1.0);
        let o = (0.0, 0.0);
        [
            CMatrix::from_complex_rows(&[&[o, o, o], &[o, o, m], &[o, i, o]]),
            CMatrix::from_complex_rows(&[&[o, o, i], &[o, o, o], &[m, o, o]]),
            CMatrix::from_complex_rows(&[&[o, m, o], &[i, o, o], &[o, o, o]]),
        ]
    })
}

/// `sum_k L_k (x) L_k`.
pub fn casimir_coupling() -> CMatrix {
    let l = spin_matrices();
    l.iter()
        .fold(CMatrix::zeros(9, 9), |acc, lk| acc + kron(lk, lk))
}

/// `(1, i, 0)/sqrt 2`, the `L_3 = +1` eigenstate.
pub fn reference_coherent() -> Vec<C64> {
    vec![
        C64::new(FRAC_1_SQRT_2, 0.0),
        C64::new(0.0, FRAC_1_SQRT_2),
        C64::new(0.0, 0.0),
    ]
}

/// `A = I - sum_k L_k (x) L_k`, with spectrum `{3, 2, 2, 2, 0, 0, 0, 0, 0}`.
pub fn coherent_bilinear() -> Bilinear {
    let a = &CMatrix::identity(9) - &casimir_coupling();
    Bilinear::from_matrix(a).expect("the coherent operator is positive")
}

/// `|(sum_k L_k (x) L_k)(psi (x) psi) - psi (x) psi|`, zero exactly on
/// coherent states.
pub fn coherence_residual(psi: &[C64]) -> f64 {
    let pp = kron_vec(psi, psi);
    let lp = casimir_coupling().matvec(&pp);
    let diff: Vec<C64> = lp.iter().zip(&pp).map(|(a, b)| a - b).collect();
    norm(&diff)
}

/// `sum_k (<L_k^2> - <L_k>^2)`; 1 on coherent states, 2 when all `<L_k>` vanish.
pub fn total_variance(psi: &[C64]) -> f64 {
    spin_matrices()
        .iter()
        .map(|l| {
            let lp = l.matvec(psi);
            let mean = inner(psi, &lp).re;
            inner(&lp, &lp).re - mean * mean
        })
        .sum()
}

/// Decomposition of a classical state into at most four coherent states.
///
/// States whose trace statistic is above `tol` are rejected with an error
/// naming that statistic.
pub fn coherent_decomposition(rho: &Density, tol: f64) -> Result<Decomp> {
    check_dim(rho)?;
    let tc = trace_criterion(rho, tol);
    if tc.verdict == Verdict::Nonclassical {
        return Err(Error::Nonclassical {
            criterion: "2Tr(R^2) - (Tr R)^2",
            value: tc.value,
        });
    }
    optimal_decomposition(rho, &Conj::identity(3))
}

pub(crate) fn check_dim(rho: &Density) -> Result<()> {
    if rho.dim() != 3 {
        return Err(Error::UnsupportedDimension(rho.dim()));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
