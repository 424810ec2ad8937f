use num_complex::Complex;

use super::conjugation::Conjugation;
use crate::error::{Error, Result};
use crate::matkernel::{
    conj_vec, eig_hermitian, kron, kron_vec, not_psd, partial_trace, ComplexMatrix, SpectralData,
    Subsystem,
};
use crate::scalar::Real;

/// Eigenvalues of `A` above this value contribute a Kraus operator.
pub fn kraus_cutoff<T: Real>() -> T {
    T::lit(1e-12).max(T::sweep_eps() * T::lit(100.0))
}

/// Positive operator `A` on `H (x) H` defining the bilinear concurrence
/// `C(psi)^2 = <psi psi|A|psi psi>`, together with the Kraus operators of the
/// completely positive map it represents.
#[derive(Debug, Clone)]
pub struct BilinearOperator<T: Real> {
    dim: usize,
    a: ComplexMatrix<T>,
    kraus: Vec<ComplexMatrix<T>>,
    eigen: SpectralData<T>,
}

impl<T: Real> BilinearOperator<T> {
    /// `A = sum_ij |i><j| (x) T|i><j|T^dagger`, the Choi matrix of `rho -> T rho T^dagger`.
    pub fn from_conjugation(c: &Conjugation<T>) -> Self {
        let t = c.matrix();
        let n = t.rows();
        let a = ComplexMatrix::from_fn(n * n, n * n, |r, s| {
            let (i, k) = (r / n, r % n);
            let (j, l) = (s / n, s % n);
            t[(k, i)] * t[(l, j)].conj()
        });
        Self::from_matrix(a).expect("Choi matrix of a unitary channel is positive")
    }

    /// Wraps an arbitrary positive-semidefinite `A` on `C^N (x) C^N`.
    ///
    /// The partial traces are not required to be the identity; see
    /// [`BilinearOperator::normalization_defect`].
    pub fn from_matrix(a: ComplexMatrix<T>) -> Result<Self> {
        let dim = square_root_dim(a.rows())?;
        let eigen = eig_hermitian(&a)?;
        let scale = eigen.max_eigenvalue().abs().max(T::one());
        if eigen.min_eigenvalue() < -T::structural_tol() * scale {
            return Err(not_psd(eigen.min_eigenvalue()));
        }
        let kraus = kraus_from_spectrum(&eigen, dim);
        Ok(Self {
            dim,
            a: a.hermitian_part(),
            kraus,
            eigen,
        })
    }

    /// Single-particle dimension `N`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.a
    }

    pub fn kraus(&self) -> &[ComplexMatrix<T>] {
        &self.kraus
    }

    pub fn spectrum(&self) -> &SpectralData<T> {
        &self.eigen
    }

    /// `<psi (x) psi| A |psi (x) psi>`.
    pub fn bilinear_value(&self, psi: &[Complex<T>]) -> T {
        let pp = kron_vec(psi, psi);
        self.a.sandwich(&pp, &pp).re
    }

    /// `sum_alpha |<psi|T_alpha|psi*>|^2`.
    pub fn kraus_value(&self, psi: &[Complex<T>]) -> T {
        let pc = conj_vec(psi);
        self.kraus
            .iter()
            .map(|t| t.sandwich(psi, &pc).norm_sqr())
            .sum()
    }

    /// Pure-state concurrence `sqrt(sum_alpha |<psi|T_alpha|psi*>|^2)`.
    ///
    /// The value is homogeneous of degree two, so subnormalized vectors give
    /// their weighted contribution directly.
    pub fn pure_concurrence(&self, psi: &[Complex<T>]) -> T {
        self.kraus_value(psi).sqrt()
    }

    /// Inverse Choi map `Lambda(rho) = Tr_1((rho^T (x) I) A)`.
    pub fn channel(&self, rho: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let n = self.dim;
        let lifted = &kron(&rho.transpose(), &ComplexMatrix::identity(n)) * &self.a;
        partial_trace(&lifted, n, n, Subsystem::First).expect("dimensions match by construction")
    }

    /// `sum_alpha T_alpha rho T_alpha^dagger`.
    pub fn kraus_channel(&self, rho: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let n = self.dim;
        self.kraus.iter().fold(ComplexMatrix::zeros(n, n), |acc, t| {
            acc + &(t * rho) * &t.adjoint()
        })
    }

    /// `(Tr_1 A, Tr_2 A)`.
    pub fn partial_traces(&self) -> (ComplexMatrix<T>, ComplexMatrix<T>) {
        let n = self.dim;
        (
            partial_trace(&self.a, n, n, Subsystem::First).expect("square by construction"),
            partial_trace(&self.a, n, n, Subsystem::Second).expect("square by construction"),
        )
    }

    /// Largest entry of `Tr_1 A - I` or `Tr_2 A - I`.
    pub fn normalization_defect(&self) -> T {
        let id = ComplexMatrix::identity(self.dim);
        let (t1, t2) = self.partial_traces();
        (&t1 - &id).max_abs().max((&t2 - &id).max_abs())
    }
}

fn square_root_dim(rows: usize) -> Result<usize> {
    let n = (rows as f64).sqrt().round() as usize;
    if n * n != rows || n == 0 {
        return Err(Error::DimensionMismatch(format!(
            "bilinear operator of size {rows} is not defined on a doubled space"
        )));
    }
    Ok(n)
}

fn kraus_from_spectrum<T: Real>(eigen: &SpectralData<T>, n: usize) -> Vec<ComplexMatrix<T>> {
    let cut = kraus_cutoff::<T>();
    eigen
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &nu)| nu > cut)
        .map(|(k, &nu)| {
            let s = nu.sqrt();
            let w = eigen.vector(k);
            // (<Phi| (x) I)(I (x) |w>) maps e_i to sum_k w_{ik} e_k
            ComplexMatrix::from_fn(n, n, |row, col| w[col * n + row] * s)
        })
        .collect()
}

/// Kraus operators `T_alpha = (<Phi| (x) I)(I (x) |w_alpha>)` from the
/// subnormalized eigenvectors `w_alpha` of a positive `A`.
pub fn kraus_from_bilinear<T: Real>(a: &ComplexMatrix<T>) -> Result<Vec<ComplexMatrix<T>>> {
    Ok(BilinearOperator::from_matrix(a.clone())?.kraus)
}
