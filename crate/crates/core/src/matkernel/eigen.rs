use num_complex::Complex;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::{unit_phase, Real};

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct SpectralData<T: Real> {
    /// Eigenvalues, sorted descending.
    pub eigenvalues: Vec<T>,
    /// Orthonormal eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: ComplexMatrix<T>,
}

impl<T: Real> SpectralData<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vector(&self, k: usize) -> Vec<Complex<T>> {
        self.eigenvectors.column(k)
    }

    /// `V diag(lambda) V^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let scaled = ComplexMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.eigenvectors[(i, j)] * self.eigenvalues[j]
        });
        &scaled * &self.eigenvectors.adjoint()
    }

    pub fn min_eigenvalue(&self) -> T {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn max_eigenvalue(&self) -> T {
        self.eigenvalues[0]
    }

    /// Applies a real function to the spectrum: `V diag(f(lambda)) V^dagger`.
    pub fn apply(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let d: Vec<T> = self.eigenvalues.iter().map(|&x| f(x)).collect();
        let scaled = ComplexMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.eigenvectors[(i, j)] * d[j]
        });
        &scaled * &self.eigenvectors.adjoint()
    }
}

/// Two-by-two unitary `J` with `J^dagger H J` diagonal, for the Hermitian block
/// `H = [[a, g], [conj(g), b]]`. Returned as `(c, s, phase)` with
/// `J = [[c, s], [-s*phase, c*phase]]`.
pub(crate) fn jacobi_rotation<T: Real>(a: T, b: T, g: Complex<T>) -> (T, T, Complex<T>) {
    let mag = g.norm();
    let phase = unit_phase(g).conj();
    let zeta = (b - a) / (T::lit(2.0) * mag);
    let t = if zeta >= T::zero() {
        T::one() / (zeta + T::one().hypot(zeta))
    } else {
        -T::one() / (-zeta + T::one().hypot(zeta))
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    (c, t * c, phase)
}

/// Right-multiplies columns `p`, `q` of `m` by `J = [[c, s], [-s*ph, c*ph]]`.
pub(crate) fn rotate_columns<T: Real>(
    m: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    (c, s, ph): (T, T, Complex<T>),
) {
    for k in 0..m.rows() {
        let mp = m[(k, p)];
        let mq = m[(k, q)];
        m[(k, p)] = mp * c - mq * ph * s;
        m[(k, q)] = mp * s + mq * ph * c;
    }
}

/// Left-multiplies rows `p`, `q` of `m` by `J^dagger`.
fn rotate_rows_adjoint<T: Real>(
    m: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    (c, s, ph): (T, T, Complex<T>),
) {
    let phc = ph.conj();
    for k in 0..m.cols() {
        let mp = m[(p, k)];
        let mq = m[(q, k)];
        m[(p, k)] = mp * c - mq * phc * s;
        m[(q, k)] = mp * s + mq * phc * c;
    }
}

/// Sorts eigenpairs (or singular triples) descending; equal values keep their
/// original relative order.
pub(crate) fn descending_order<T: Real>(values: &[T]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap_or(std::cmp::Ordering::Equal));
    idx
}

/// Hermitian eigenproblem with the default structural tolerance.
pub fn eig_hermitian<T: Real>(h: &ComplexMatrix<T>) -> Result<SpectralData<T>> {
    eig_hermitian_with_tol(h, T::structural_tol())
}

/// Cyclic complex Jacobi eigensolver.
///
/// `tol` bounds the accepted Hermiticity defect; the input is symmetrized
/// before iterating.
pub fn eig_hermitian_with_tol<T: Real>(h: &ComplexMatrix<T>, tol: T) -> Result<SpectralData<T>> {
    h.check_hermitian(tol)?;
    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let total = a.frobenius_norm();
    if total == T::zero() {
        return Ok(SpectralData {
            eigenvalues: vec![T::zero(); n],
            eigenvectors: v,
        });
    }
    let eps = T::sweep_eps();
    let floor = eps * eps * total;
    for _sweep in 0..64 {
        let mut rotations = 0usize;
        for p in 0..n {
            for q in p + 1..n {
                let g = a[(p, q)];
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if g.norm() <= eps * (app.abs() * aqq.abs()).sqrt() || g.norm() <= floor {
                    continue;
                }
                rotations += 1;
                let rot = jacobi_rotation(app, aqq, g);
                rotate_columns(&mut a, p, q, rot);
                rotate_rows_adjoint(&mut a, p, q, rot);
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
                rotate_columns(&mut v, p, q, rot);
            }
        }
        if rotations == 0 {
            break;
        }
    }
    let raw: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    let order = descending_order(&raw);
    let eigenvalues = order.iter().map(|&i| raw[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(SpectralData {
        eigenvalues,
        eigenvectors,
    })
}

/// Principal square root of a positive-semidefinite Hermitian matrix;
/// eigenvalues at or below `cutoff` are set to zero.
pub fn hermitian_sqrt<T: Real>(h: &ComplexMatrix<T>, cutoff: T) -> Result<ComplexMatrix<T>> {
    let sd = eig_hermitian(h)?;
    Ok(sd.apply(|x| if x > cutoff { x.sqrt() } else { T::zero() }))
}

/// Outcome of a positivity test with a tolerance band around zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    Boundary,
    NotPositive,
}

/// Classifies the smallest eigenvalue of `h` against the band `[-tol, tol]`.
pub fn is_positive_definite<T: Real>(h: &ComplexMatrix<T>, tol: T) -> Result<Definiteness> {
    let min = eig_hermitian(h)?.min_eigenvalue();
    Ok(classify_min_eigenvalue(min, tol))
}

pub fn classify_min_eigenvalue<T: Real>(min: T, tol: T) -> Definiteness {
    if min > tol {
        Definiteness::Positive
    } else if min.abs() <= tol {
        Definiteness::Boundary
    } else {
        Definiteness::NotPositive
    }
}

impl From<Definiteness> for &'static str {
    fn from(d: Definiteness) -> Self {
        match d {
            Definiteness::Positive => "positive",
            Definiteness::Boundary => "boundary",
            Definiteness::NotPositive => "not_positive",
        }
    }
}

pub(crate) fn not_psd<T: Real>(min: T) -> Error {
    Error::NotPositive(min.as_f64())
}
