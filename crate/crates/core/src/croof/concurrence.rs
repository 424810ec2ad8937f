use num_complex::Complex;

use super::conjugation::Conjugation;
use super::density::DensityMatrix;
use crate::error::Result;
use crate::matkernel::{conj_vec, svd, ComplexMatrix};
use crate::scalar::Real;

/// `(tau_alpha)_ij = <xi_i|T_alpha|xi_j*>` over the subnormalized
/// eigenvectors `xi_i` of a density matrix.
#[derive(Debug, Clone)]
pub struct TauMatrix<T: Real> {
    /// Position of the generating Kraus operator.
    pub index: usize,
    pub entries: ComplexMatrix<T>,
}

/// One `r x r` tau matrix per Kraus operator, `r = rank(rho)`.
pub fn tau_matrices<T: Real>(
    rho: &DensityMatrix<T>,
    kraus: &[ComplexMatrix<T>],
) -> Vec<TauMatrix<T>> {
    let xi = rho.subnormalized_eigenvectors();
    let xi_conj: Vec<Vec<Complex<T>>> = xi.iter().map(|v| conj_vec(v)).collect();
    let r = xi.len();
    kraus
        .iter()
        .enumerate()
        .map(|(index, t)| {
            let txc: Vec<Vec<Complex<T>>> = xi_conj.iter().map(|v| t.matvec(v)).collect();
            let entries = ComplexMatrix::from_fn(r, r, |i, j| {
                xi[i].iter().zip(&txc[j]).map(|(a, b)| a.conj() * b).sum()
            });
            TauMatrix { index, entries }
        })
        .collect()
}

/// Square roots of the eigenvalues of `rho T rho* T^dagger`, descending, one
/// per dimension of the Hilbert space.
///
/// Computed as the singular values of `rho^{1/2} T rho*^{1/2}`, whose Gram
/// matrix is the Hermitian matrix similar to `rho T rho* T^dagger`.
pub fn mu_values<T: Real>(rho: &DensityMatrix<T>, c: &Conjugation<T>) -> Result<Vec<T>> {
    c.require_symmetric()?;
    let root = rho.sqrt();
    let m = &(&root * c.matrix()) * &root.conj();
    Ok(svd(&m).sigma)
}

/// `mu_1 - sum_{j>1} mu_j`; negative or zero exactly on classical states.
pub fn concurrence_gap<T: Real>(rho: &DensityMatrix<T>, c: &Conjugation<T>) -> Result<T> {
    Ok(gap_of(&mu_values(rho, c)?))
}

pub(crate) fn gap_of<T: Real>(mu: &[T]) -> T {
    match mu.split_first() {
        Some((first, rest)) => *first - rest.iter().copied().sum::<T>(),
        None => T::zero(),
    }
}

/// Closed-form convex-roof concurrence `max(0, mu_1 - sum_{j>1} mu_j)` for a
/// symmetric conjugation.
pub fn mixed_concurrence<T: Real>(rho: &DensityMatrix<T>, c: &Conjugation<T>) -> Result<T> {
    Ok(concurrence_gap(rho, c)?.max(T::zero()))
}

/// Sum over a decomposition `phi_k = sum_j V_kj xi_j` of the pure
/// concurrences, evaluated on the diagonal of `V* tau V^dagger`.
///
/// `v` is `K x r` with orthonormal columns.
pub fn decomposition_objective<T: Real>(tau: &[TauMatrix<T>], v: &ComplexMatrix<T>) -> T {
    let vc = v.conj();
    let lhs = &vc;
    (0..v.rows())
        .map(|k| {
            let row = lhs.row(k);
            tau.iter()
                .map(|t| {
                    let tr = t.entries.matvec(&row);
                    row.iter().zip(&tr).map(|(&a, &b)| a * b).sum::<Complex<T>>().norm_sqr()
                })
                .sum::<T>()
                .sqrt()
        })
        .sum()
}
