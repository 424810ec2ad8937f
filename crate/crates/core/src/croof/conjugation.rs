use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matkernel::{conj_vec, ComplexMatrix};
use crate::scalar::Real;

/// Transpose symmetry of the unitary part of an antiunitary map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
}

/// Antiunitary map `Theta = T K`, stored through its unitary part `T`.
///
/// `K` is complex conjugation in the computational basis. A symmetric `T`
/// makes `Theta` a conjugation (`Theta^2 = 1`).
#[derive(Debug, Clone)]
pub struct Conjugation<T: Real> {
    t: ComplexMatrix<T>,
    symmetry: Symmetry,
}

impl<T: Real> Conjugation<T> {
    pub fn new(t: ComplexMatrix<T>) -> Result<Self> {
        Self::with_tol(t, T::structural_tol())
    }

    pub fn with_tol(t: ComplexMatrix<T>, tol: T) -> Result<Self> {
        t.check_unitary(tol)?;
        let sym = t.symmetry_defect();
        let anti = t.antisymmetry_defect();
        let symmetry = if sym <= tol {
            Symmetry::Symmetric
        } else if anti <= tol {
            Symmetry::Antisymmetric
        } else {
            return Err(Error::NoTransposeSymmetry(sym.min(anti).as_f64()));
        };
        Ok(Self { t, symmetry })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            t: ComplexMatrix::identity(n),
            symmetry: Symmetry::Symmetric,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.t
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn require_symmetric(&self) -> Result<()> {
        match self.symmetry {
            Symmetry::Symmetric => Ok(()),
            Symmetry::Antisymmetric => Err(Error::AntisymmetricConjugation),
        }
    }

    /// `Theta |psi> = T |psi*>`.
    pub fn apply(&self, psi: &[Complex<T>]) -> Vec<Complex<T>> {
        self.t.matvec(&conj_vec(psi))
    }

    /// `<psi|T|psi*>`; its modulus is the pure-state concurrence.
    pub fn overlap(&self, psi: &[Complex<T>]) -> Complex<T> {
        self.t.sandwich(psi, &conj_vec(psi))
    }

    pub fn concurrence(&self, psi: &[Complex<T>]) -> T {
        self.overlap(psi).norm()
    }
}
