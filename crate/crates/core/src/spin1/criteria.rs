use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_dim, spin_matrices};
use crate::croof::mu_values;
use crate::matkernel::{classify_min_eigenvalue, eig_hermitian, Definiteness};
use crate::{CMatrix, Conj, Density, C64};

/// Outcome of a classicality test with a tolerance band around the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Classical,
    Boundary,
    Nonclassical,
}

impl Verdict {
    /// Verdict of a statistic that is negative on classical states.
    pub fn from_statistic(value: f64, tol: f64) -> Self {
        if value < -tol {
            Self::Classical
        } else if value.abs() <= tol {
            Self::Boundary
        } else {
            Self::Nonclassical
        }
    }

    pub fn from_definiteness(d: Definiteness) -> Self {
        match d {
            Definiteness::Positive => Self::Classical,
            Definiteness::Boundary => Self::Boundary,
            Definiteness::NotPositive => Self::Nonclassical,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Classical => "classical",
            Self::Boundary => "boundary",
            Self::Nonclassical => "nonclassical",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(real rotation O, rho' = O^T rho O)` with `Re rho'` diagonal:
///
/// ```text
///        [ l1     -i v3   i v2 ]
/// rho' = [ i v3    l2    -i v1 ]
///        [ -i v2   i v1   l3   ]
/// ```
#[derive(Debug, Clone, Serialize)]
pub struct CanonicalForm {
    pub lambdas: [f64; 3],
    pub v: [f64; 3],
    /// Columns are the eigenvectors of `Re rho`; `det O = +1`.
    pub rotation: [[f64; 3]; 3],
}

impl CanonicalForm {
    pub fn matrix(&self) -> CMatrix {
        let [l1, l2, l3] = self.lambdas;
        let [v1, v2, v3] = self.v;
        let c = |re: f64, im: f64| C64::new(re, im);
        CMatrix::from_vec(
            3,
            3,
            vec![
                c(l1, 0.0), c(0.0, -v3), c(0.0, v2),
                c(0.0, v3), c(l2, 0.0), c(0.0, -v1),
                c(0.0, -v2), c(0.0, v1), c(l3, 0.0),
            ],
        )
        .expect("3x3")
    }

    pub fn rotation_matrix(&self) -> CMatrix {
        CMatrix::from_fn(3, 3, |i, j| C64::new(self.rotation[i][j], 0.0))
    }

    /// Largest entry of `O^T rho O` minus the canonical matrix.
    pub fn structure_residual(&self, rho: &Density) -> f64 {
        let o = self.rotation_matrix();
        let turned = &(&o.transpose() * rho.matrix()) * &o;
        (&turned - &self.matrix()).max_abs()
    }
}

pub fn canonical_form(rho: &Density) -> CanonicalForm {
    let re = rho.matrix().real_part();
    let sd = eig_hermitian(&re).expect("real part of a Hermitian matrix is symmetric");
    let mut rotation = [[0.0; 3]; 3];
    for (i, row) in rotation.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = sd.eigenvectors[(i, j)].re;
        }
    }
    if crate::ensemble::random::det3(&rotation) < 0.0 {
        for row in rotation.iter_mut() {
            row[2] = -row[2];
        }
    }
    let o = CMatrix::from_fn(3, 3, |i, j| C64::new(rotation[i][j], 0.0));
    let turned = &(&o.transpose() * rho.matrix()) * &o;
    CanonicalForm {
        lambdas: [turned[(0, 0)].re, turned[(1, 1)].re, turned[(2, 2)].re],
        v: [-turned[(1, 2)].im, turned[(0, 2)].im, -turned[(0, 1)].im],
        rotation,
    }
}

/// The trace statistic `2 Tr(R^2) - (Tr R)^2` and its verdict.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TraceCriterion {
    pub value: f64,
    pub verdict: Verdict,
}

/// `R = rho rho*` with complex conjugation in the Cartesian basis.
pub fn r_matrix(rho: &Density) -> CMatrix {
    rho.matrix() * &rho.matrix().conj()
}

pub fn trace_criterion(rho: &Density, tol: f64) -> TraceCriterion {
    let r = r_matrix(rho);
    let tr = r.trace().re;
    let value = 2.0 * (&r * &r).trace().re - tr * tr;
    TraceCriterion {
        value,
        verdict: Verdict::from_statistic(value, tol),
    }
}

/// `rho = (I - W + u . L) / 2` and `Z = W - u u^T`.
#[derive(Debug, Clone, Serialize)]
pub struct GiraudData {
    pub w: [[f64; 3]; 3],
    pub u: [f64; 3],
    pub z: [[f64; 3]; 3],
    /// `(a2, a1, a0)` of `det(x I - Z) = x^3 + a2 x^2 + a1 x + a0`.
    pub charpoly: [f64; 3],
    /// Eigenvalues of `Z`, descending.
    pub z_eigenvalues: [f64; 3],
}

impl GiraudData {
    pub fn z_min_eigenvalue(&self) -> f64 {
        self.z_eigenvalues[2]
    }

    pub fn verdict(&self, tol: f64) -> Verdict {
        Verdict::from_definiteness(classify_min_eigenvalue(self.z_min_eigenvalue(), tol))
    }

    /// `(I - W + u . L) / 2`.
    pub fn reconstruct(&self) -> CMatrix {
        let l = spin_matrices();
        let mut m = CMatrix::from_fn(3, 3, |i, j| {
            let id = if i == j { 1.0 } else { 0.0 };
            C64::new(0.5 * (id - self.w[i][j]), 0.0)
        });
        for (lk, &uk) in l.iter().zip(&self.u) {
            m = m + lk.scale_real(0.5 * uk);
        }
        m
    }
}

pub fn giraud_z(rho: &Density) -> GiraudData {
    let m = rho.matrix();
    let mut w = [[0.0; 3]; 3];
    for (i, row) in w.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let id = if i == j { 1.0 } else { 0.0 };
            *x = id - 2.0 * m[(i, j)].re;
        }
    }
    let u = [-2.0 * m[(1, 2)].im, 2.0 * m[(0, 2)].im, -2.0 * m[(0, 1)].im];
    let mut z = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            z[i][j] = w[i][j] - u[i] * u[j];
        }
    }
    let tr = z[0][0] + z[1][1] + z[2][2];
    let tr_sq: f64 = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| z[i][j] * z[j][i]).sum();
    let det = crate::ensemble::random::det3(&z);
    let zc = CMatrix::from_fn(3, 3, |i, j| C64::new(z[i][j], 0.0));
    let ev = eig_hermitian(&zc).expect("Z is real symmetric").eigenvalues;
    GiraudData {
        w,
        u,
        z,
        charpoly: [-tr, 0.5 * (tr * tr - tr_sq), -det],
        z_eigenvalues: [ev[0], ev[1], ev[2]],
    }
}

/// The three spin-1 tests side by side.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub mu_values: Vec<f64>,
    pub mu_gap: f64,
    pub trace_value: f64,
    pub z_min_eigenvalue: f64,
    pub mu_verdict: Verdict,
    pub trace_verdict: Verdict,
    pub z_verdict: Verdict,
    /// No two verdicts outside the boundary band contradict each other.
    pub agree: bool,
}

impl Classification {
    /// True if none of the three statistics falls inside the boundary band.
    pub fn outside_band(&self) -> bool {
        [self.mu_verdict, self.trace_verdict, self.z_verdict]
            .iter()
            .all(|&v| v != Verdict::Boundary)
    }

    /// Trace verdict, the reference test.
    pub fn verdict(&self) -> Verdict {
        self.trace_verdict
    }
}

pub fn classify(rho: &Density, tol: f64) -> crate::Result<Classification> {
    check_dim(rho)?;
    let mu = mu_values(rho, &Conj::identity(3))?;
    let mu_gap = mu[0] - mu[1] - mu[2];
    let tc = trace_criterion(rho, tol);
    let gz = giraud_z(rho);
    let verdicts = [
        Verdict::from_statistic(mu_gap, tol),
        tc.verdict,
        gz.verdict(tol),
    ];
    let decided: Vec<Verdict> = verdicts.iter().copied().filter(|&v| v != Verdict::Boundary).collect();
    let agree = decided.windows(2).all(|w| w[0] == w[1]);
    Ok(Classification {
        mu_values: mu,
        mu_gap,
        trace_value: tc.value,
        z_min_eigenvalue: gz.z_min_eigenvalue(),
        mu_verdict: verdicts[0],
        trace_verdict: verdicts[1],
        z_verdict: verdicts[2],
        agree,
    })
}
