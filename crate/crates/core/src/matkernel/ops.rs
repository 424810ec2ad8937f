use num_complex::Complex;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Kronecker product; entry `(i*p + k, j*q + l)` is `a_ij * b_kl`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let (p, q) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * p, a.cols() * q, |r, c| {
        a[(r / p, c / q)] * b[(r % p, c % q)]
    })
}

/// Which tensor factor a partial trace removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Partial trace of an operator on `C^dim1 (x) C^dim2`.
///
/// Tracing out [`Subsystem::First`] leaves a `dim2 x dim2` matrix, tracing out
/// [`Subsystem::Second`] a `dim1 x dim1` one.
pub fn partial_trace<T: Real>(
    m: &ComplexMatrix<T>,
    dim1: usize,
    dim2: usize,
    which: Subsystem,
) -> Result<ComplexMatrix<T>> {
    if !m.is_square() || m.rows() != dim1 * dim2 {
        return Err(Error::DimensionMismatch(format!(
            "partial trace of a {}x{} matrix over {}x{}",
            m.rows(),
            m.cols(),
            dim1,
            dim2
        )));
    }
    let zero = Complex::new(T::zero(), T::zero());
    Ok(match which {
        Subsystem::First => ComplexMatrix::from_fn(dim2, dim2, |k, l| {
            (0..dim1).fold(zero, |acc, i| acc + m[(i * dim2 + k, i * dim2 + l)])
        }),
        Subsystem::Second => ComplexMatrix::from_fn(dim1, dim1, |i, j| {
            (0..dim2).fold(zero, |acc, k| acc + m[(i * dim2 + k, j * dim2 + k)])
        }),
    })
}

/// Determinant by LU decomposition with partial pivoting.
pub fn det<T: Real>(m: &ComplexMatrix<T>) -> Result<Complex<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Complex::new(T::one(), T::zero());
    for k in 0..n {
        let piv = (k..n)
            .max_by(|&i, &j| a[(i, k)].norm().partial_cmp(&a[(j, k)].norm()).unwrap())
            .unwrap();
        if a[(piv, k)].norm() == T::zero() {
            return Ok(Complex::new(T::zero(), T::zero()));
        }
        if piv != k {
            for j in 0..n {
                let t = a[(k, j)];
                a[(k, j)] = a[(piv, j)];
                a[(piv, j)] = t;
            }
            d = -d;
        }
        let p = a[(k, k)];
        d *= p;
        for i in k + 1..n {
            let f = a[(i, k)] / p;
            for j in k..n {
                let t = a[(k, j)];
                a[(i, j)] -= f * t;
            }
        }
    }
    Ok(d)
}

/// Thin QR factorization by modified Gram-Schmidt with one reorthogonalization
/// pass. Columns that are numerically dependent are replaced by an orthonormal
/// completion, in which case the corresponding diagonal entry of `R` is zero.
pub fn qr<T: Real>(m: &ComplexMatrix<T>) -> (ComplexMatrix<T>, ComplexMatrix<T>) {
    let (rows, cols) = (m.rows(), m.cols());
    assert!(rows >= cols, "thin QR needs rows >= cols");
    let mut q: Vec<Vec<Complex<T>>> = Vec::with_capacity(cols);
    let mut r = ComplexMatrix::zeros(cols, cols);
    let scale = m.max_abs().max(T::min_positive_value());
    for j in 0..cols {
        let mut v = m.column(j);
        for _pass in 0..2 {
            for (i, qi) in q.iter().enumerate() {
                let h = super::matrix::inner(qi, &v);
                r[(i, j)] += h;
                for (x, y) in v.iter_mut().zip(qi) {
                    *x -= h * y;
                }
            }
        }
        let nv = super::matrix::norm(&v);
        if nv > scale * T::sweep_eps() * T::lit(64.0) {
            r[(j, j)] = Complex::new(nv, T::zero());
            q.push(v.iter().map(|&z| z / nv).collect());
        } else {
            q.push(next_orthonormal(&q, rows));
        }
    }
    (ComplexMatrix::from_columns(&q), r)
}

/// A unit vector orthogonal to all of `basis` (which must be orthonormal and
/// shorter than `dim`), built from the best-conditioned standard basis vector.
pub fn next_orthonormal<T: Real>(basis: &[Vec<Complex<T>>], dim: usize) -> Vec<Complex<T>> {
    let mut best: Option<(T, Vec<Complex<T>>)> = None;
    for e in 0..dim {
        let mut v = vec![Complex::new(T::zero(), T::zero()); dim];
        v[e] = Complex::new(T::one(), T::zero());
        for _pass in 0..2 {
            for b in basis {
                let h = super::matrix::inner(b, &v);
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= h * y;
                }
            }
        }
        let nv = super::matrix::norm(&v);
        if best.as_ref().is_none_or(|(n, _)| nv > *n) {
            best = Some((nv, v));
        }
    }
    let (nv, v) = best.expect("dimension must be positive");
    v.into_iter().map(|z| z / nv).collect()
}

/// Extends orthonormal columns to a full orthonormal basis of `C^dim`.
pub fn complete_basis<T: Real>(mut basis: Vec<Vec<Complex<T>>>, dim: usize) -> Vec<Vec<Complex<T>>> {
    while basis.len() < dim {
        let v = next_orthonormal(&basis, dim);
        basis.push(v);
    }
    basis
}
