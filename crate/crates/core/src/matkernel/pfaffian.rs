use num_complex::Complex;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Pfaffian of a 4x4 antisymmetric matrix, `X12 X34 - X13 X24 + X14 X23`.
pub fn pfaffian4<T: Real>(x: &ComplexMatrix<T>) -> Result<Complex<T>> {
    pfaffian4_with_tol(x, T::structural_tol())
}

pub fn pfaffian4_with_tol<T: Real>(x: &ComplexMatrix<T>, tol: T) -> Result<Complex<T>> {
    if x.rows() != 4 || x.cols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "Pfaffian needs a 4x4 matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    x.check_antisymmetric(tol)?;
    Ok(x[(0, 1)] * x[(2, 3)] - x[(0, 2)] * x[(1, 3)] + x[(0, 3)] * x[(1, 2)])
}
