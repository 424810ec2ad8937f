use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matkernel::{eig_hermitian_with_tol, norm, not_psd, ComplexMatrix, SpectralData};
use crate::scalar::Real;

/// Eigenvalues of a density matrix at or below this value count as zero when
/// forming the subnormalized spectral decomposition.
pub fn rank_cutoff<T: Real>() -> T {
    T::lit(1e-12).max(T::sweep_eps() * T::lit(100.0))
}

/// Hermitian, unit-trace, positive-semidefinite matrix with its spectrum.
#[derive(Debug, Clone)]
pub struct DensityMatrix<T: Real> {
    matrix: ComplexMatrix<T>,
    spectral: SpectralData<T>,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(matrix: ComplexMatrix<T>) -> Result<Self> {
        Self::with_tol(matrix, T::structural_tol())
    }

    /// Validates `matrix`; `tol` applies to the Hermiticity defect, the trace
    /// and the most negative eigenvalue.
    pub fn with_tol(matrix: ComplexMatrix<T>, tol: T) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix
            .as_slice()
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        matrix.check_hermitian(tol)?;
        let tr = matrix.trace().re;
        if (tr - T::one()).abs() > tol {
            return Err(Error::BadTrace(tr.as_f64()));
        }
        let matrix = matrix.hermitian_part();
        let spectral = eig_hermitian_with_tol(&matrix, tol)?;
        if spectral.min_eigenvalue() < -tol {
            return Err(not_psd(spectral.min_eigenvalue()));
        }
        Ok(Self { matrix, spectral })
    }

    /// `|psi><psi|` for a unit vector.
    pub fn from_pure(psi: &[Complex<T>]) -> Result<Self> {
        let n = norm(psi);
        if (n - T::one()).abs() > T::structural_tol() {
            return Err(Error::NotNormalized(n.as_f64()));
        }
        Self::new(ComplexMatrix::outer(psi))
    }

    /// Convex combination of projectors onto (not necessarily normalized)
    /// vectors; the weights are applied to the normalized vectors.
    pub fn from_mixture(weights: &[T], states: &[Vec<Complex<T>>]) -> Result<Self> {
        if weights.len() != states.len() || states.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {} states",
                weights.len(),
                states.len()
            )));
        }
        let n = states[0].len();
        let mut m = ComplexMatrix::zeros(n, n);
        for (&w, s) in weights.iter().zip(states) {
            let ns = norm(s);
            m = m + ComplexMatrix::outer(s).scale_real(w / (ns * ns));
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn spectral(&self) -> &SpectralData<T> {
        &self.spectral
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        let cut = rank_cutoff::<T>();
        self.spectral.eigenvalues.iter().filter(|&&p| p > cut).count()
    }

    /// `sqrt(p_i) |eta_i>` for every eigenvalue above the rank cutoff.
    pub fn subnormalized_eigenvectors(&self) -> Vec<Vec<Complex<T>>> {
        let cut = rank_cutoff::<T>();
        self.spectral
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > cut)
            .map(|(k, &p)| {
                let s = p.sqrt();
                self.spectral.vector(k).into_iter().map(|z| z * s).collect()
            })
            .collect()
    }

    /// `rho^{1/2}` with the rank cutoff applied to the spectrum.
    pub fn sqrt(&self) -> ComplexMatrix<T> {
        let cut = rank_cutoff::<T>();
        self.spectral
            .apply(|p| if p > cut { p.sqrt() } else { T::zero() })
    }

    pub fn purity(&self) -> T {
        (&self.matrix * &self.matrix).trace().re
    }

    /// `O rho O^dagger` for a unitary `O`, revalidated.
    pub fn conjugated_by(&self, u: &ComplexMatrix<T>) -> Result<Self> {
        Self::new(&(u * &self.matrix) * &u.adjoint())
    }
}
