use num_complex::Complex;

use super::eigen::{descending_order, eig_hermitian, jacobi_rotation, rotate_columns};
use super::matrix::{inner, norm, ComplexMatrix};
use super::ops::complete_basis;
use crate::error::{Error, Result};
use crate::scalar::{unit_phase, Real};

/// Full singular value decomposition `m = u diag(sigma) v^dagger`.
#[derive(Debug, Clone)]
pub struct Svd<T: Real> {
    /// `rows x rows` unitary.
    pub u: ComplexMatrix<T>,
    /// `min(rows, cols)` singular values, descending.
    pub sigma: Vec<T>,
    /// `cols x cols` unitary.
    pub v: ComplexMatrix<T>,
}

impl<T: Real> Svd<T> {
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let (m, n) = (self.u.rows(), self.v.rows());
        ComplexMatrix::from_fn(m, n, |i, j| {
            self.sigma
                .iter()
                .enumerate()
                .map(|(k, &s)| self.u[(i, k)] * self.v[(j, k)].conj() * s)
                .sum()
        })
    }
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd<T: Real>(m: &ComplexMatrix<T>) -> Svd<T> {
    if m.rows() < m.cols() {
        let t = svd(&m.adjoint());
        return Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut g = m.clone();
    let mut v = ComplexMatrix::identity(cols);
    let eps = T::sweep_eps();
    for _sweep in 0..64 {
        let mut rotations = 0usize;
        for p in 0..cols {
            for q in p + 1..cols {
                let gp = g.column(p);
                let gq = g.column(q);
                let a = norm(&gp).powi(2);
                let b = norm(&gq).powi(2);
                let h = inner(&gp, &gq);
                if a == T::zero() || b == T::zero() || h.norm() <= eps * (a * b).sqrt() {
                    continue;
                }
                rotations += 1;
                let rot = jacobi_rotation(a, b, h);
                rotate_columns(&mut g, p, q, rot);
                rotate_columns(&mut v, p, q, rot);
            }
        }
        if rotations == 0 {
            break;
        }
    }
    let raw: Vec<T> = (0..cols).map(|j| norm(&g.column(j))).collect();
    let order = descending_order(&raw);
    let sigma: Vec<T> = order.iter().map(|&j| raw[j]).collect();
    let v = ComplexMatrix::from_fn(cols, cols, |i, j| v[(i, order[j])]);
    let tiny = T::min_positive_value() * T::lit(1e10);
    let mut ucols: Vec<Vec<Complex<T>>> = Vec::with_capacity(rows);
    for (k, &j) in order.iter().enumerate() {
        if sigma[k] <= tiny {
            break;
        }
        ucols.push(g.column(j).iter().map(|&z| z / sigma[k]).collect());
    }
    let ucols = complete_basis(ucols, rows);
    Svd {
        u: ComplexMatrix::from_columns(&ucols),
        sigma,
        v,
    }
}

/// Takagi factorization `s = w diag(mu) w^T` of a complex symmetric matrix.
#[derive(Debug, Clone)]
pub struct Takagi<T: Real> {
    pub w: ComplexMatrix<T>,
    /// Non-negative Takagi values, descending; these are the singular values of `s`.
    pub mu: Vec<T>,
}

impl<T: Real> Takagi<T> {
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.w.rows();
        ComplexMatrix::from_fn(n, n, |i, j| {
            self.mu
                .iter()
                .enumerate()
                .map(|(k, &m)| self.w[(i, k)] * self.w[(j, k)] * m)
                .sum()
        })
    }
}

/// Takagi factorization with the default symmetry tolerance.
pub fn takagi<T: Real>(s: &ComplexMatrix<T>) -> Result<Takagi<T>> {
    takagi_with_tol(s, T::structural_tol())
}

/// Takagi factorization through the real symmetric embedding
/// `[[Re s, Im s], [Im s, -Re s]]`, whose positive eigenvectors `[a; b]` give
/// Takagi vectors `a + i b`.
pub fn takagi_with_tol<T: Real>(s: &ComplexMatrix<T>, tol: T) -> Result<Takagi<T>> {
    s.check_symmetric(tol)?;
    let n = s.rows();
    let sym = ComplexMatrix::from_fn(n, n, |i, j| (s[(i, j)] + s[(j, i)]) * T::lit(0.5));
    let embed = ComplexMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, ii) = (i / n, i % n);
        let (bj, jj) = (j / n, j % n);
        let z = sym[(ii, jj)];
        let x = match (bi, bj) {
            (0, 0) => z.re,
            (1, 1) => -z.re,
            _ => z.im,
        };
        Complex::new(x, T::zero())
    });
    let sd = eig_hermitian(&embed).map_err(|e| match e {
        Error::NotHermitian(d) => Error::NotSymmetric(d),
        other => other,
    })?;
    let top = sd.eigenvalues[0].max(T::zero());
    let threshold = top * T::sweep_eps() * T::lit(1e4);
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for k in 0..n {
        if sd.eigenvalues[k] <= threshold || top == T::zero() {
            break;
        }
        let ev = sd.vector(k);
        let mut w: Vec<Complex<T>> = (0..n).map(|i| Complex::new(ev[i].re, ev[n + i].re)).collect();
        // reorthogonalize against earlier columns
        for _pass in 0..2 {
            for prev in &cols {
                let h = inner(prev, &w);
                for (x, y) in w.iter_mut().zip(prev) {
                    *x -= h * y;
                }
            }
        }
        let nw = norm(&w);
        if nw <= T::lit(0.5) {
            break;
        }
        cols.push(w.iter().map(|&z| z / nw).collect());
    }
    let cols = complete_basis(cols, n);
    // fix phases so that diag(w^dagger s conj(w)) is real and non-negative
    let mut w = ComplexMatrix::from_columns(&cols);
    let mut mu = Vec::with_capacity(n);
    for k in 0..n {
        let col = w.column(k);
        let sw: Vec<Complex<T>> = sym.matvec(&col.iter().map(|z| z.conj()).collect::<Vec<_>>());
        let d = inner(&col, &sw);
        let half = unit_phase(d).sqrt();
        for i in 0..n {
            w[(i, k)] *= half;
        }
        mu.push(d.norm());
    }
    let order = descending_order(&mu);
    let mu_sorted = order.iter().map(|&k| mu[k]).collect();
    let w = ComplexMatrix::from_fn(n, n, |i, j| w[(i, order[j])]);
    Ok(Takagi { w, mu: mu_sorted })
}
