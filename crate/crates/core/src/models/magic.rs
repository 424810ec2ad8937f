use std::f64::consts::FRAC_1_SQRT_2;

use serde::Serialize;

use super::ModelKind;
use crate::error::Result;
use crate::matkernel::{norm, takagi, ComplexMatrix};
use crate::{CMatrix, C64};

/// Imaginary parts below this are treated as rounding noise.
const NOISE_FLOOR: f64 = 1e-14;

/// `e^{i phi} psi = cos(theta) x + i sin(theta) y` with real orthonormal
/// `x`, `y` and `theta` in `[0, pi/4]`.
#[derive(Debug, Clone, Serialize)]
pub struct RealSplit {
    pub theta: f64,
    pub phase: f64,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl RealSplit {
    /// `e^{-i phi} (cos(theta) x + i sin(theta) y)`, which should equal `psi`.
    pub fn reconstruct(&self) -> Vec<C64> {
        let back = C64::from_polar(1.0, -self.phase);
        let (s, c) = self.theta.sin_cos();
        self.x
            .iter()
            .zip(&self.y)
            .map(|(&x, &y)| back * C64::new(c * x, s * y))
            .collect()
    }
}

/// Splits a unit vector into real and imaginary directions.
///
/// The phase `phi = -arg(psi^T psi) / 2` makes `psi^T psi` real and
/// non-negative, which forces the real and imaginary parts to be orthogonal
/// with the real part the longer one.
pub fn real_split(psi: &[C64]) -> RealSplit {
    let q: C64 = psi.iter().map(|z| z * z).sum();
    let phase = if q.norm() > 0.0 { -q.arg() / 2.0 } else { 0.0 };
    let rot = C64::from_polar(1.0, phase);
    let turned: Vec<C64> = psi.iter().map(|z| z * rot).collect();
    let xr: Vec<f64> = turned.iter().map(|z| z.re).collect();
    let yr: Vec<f64> = turned.iter().map(|z| z.im).collect();
    let nx = xr.iter().map(|v| v * v).sum::<f64>().sqrt();
    let x = unit_or_orthogonal(&xr, nx, None);
    // rounding leaves a sliver of x in the imaginary part; strip it so a
    // nearly real psi does not get a noise direction for y
    let overlap: f64 = x.iter().zip(&yr).map(|(a, b)| a * b).sum();
    let yr: Vec<f64> = yr.iter().zip(&x).map(|(b, a)| b - overlap * a).collect();
    let mut ny = yr.iter().map(|v| v * v).sum::<f64>().sqrt();
    if ny <= NOISE_FLOOR {
        ny = 0.0;
    }
    let theta = ny.atan2(nx);
    let y = unit_or_orthogonal(&yr, ny, Some(&x));
    RealSplit { theta, phase, x, y }
}

/// `v / |v|`, or when `v` vanishes a unit vector orthogonal to `other`.
fn unit_or_orthogonal(v: &[f64], n: f64, other: Option<&[f64]>) -> Vec<f64> {
    if n > 0.0 {
        return v.iter().map(|x| x / n).collect();
    }
    let dim = v.len();
    let Some(o) = other else {
        let mut e = vec![0.0; dim];
        e[0] = 1.0;
        return e;
    };
    // least-aligned basis vector, orthogonalized against `o`
    let k = (0..dim)
        .min_by(|&a, &b| o[a].abs().total_cmp(&o[b].abs()))
        .expect("non-empty");
    let mut e: Vec<f64> = (0..dim).map(|i| if i == k { 1.0 } else { 0.0 } - o[k] * o[i]).collect();
    let ne = e.iter().map(|x| x * x).sum::<f64>().sqrt();
    e.iter_mut().for_each(|x| *x /= ne);
    e
}

/// Basis `B` fixed pointwise by `Theta = T K`, i.e. `B^dagger T conj(B) = I`;
/// in the coordinates `psi = B c` the form `<psi|T|psi*>` is `conj(c^T c)`.
pub fn magic_transform(kind: ModelKind) -> CMatrix {
    magic_basis(&kind.conjugation_matrix()).expect("model T is a symmetric unitary")
}

/// Magic basis of a symmetric unitary `T`. Signed antidiagonal matrices get
/// the Bell-type combinations `(e_a +- e_b)/sqrt 2` with phases chosen by the
/// sign; other matrices use a Takagi factorization `T = W W^T`.
pub fn magic_basis(t: &CMatrix) -> Result<CMatrix> {
    let n = t.rows();
    if t.max_abs() > 0.0 && (t - &CMatrix::identity(n)).max_abs() == 0.0 {
        return Ok(CMatrix::identity(n));
    }
    let antidiagonal = (0..n).all(|i| {
        (0..n).all(|j| i + j == n - 1 || t[(i, j)].norm() == 0.0)
            && t[(i, n - 1 - i)].im == 0.0
            && t[(i, n - 1 - i)].re.abs() == 1.0
    });
    if !antidiagonal {
        return Ok(takagi(t)?.w);
    }
    let zero = C64::new(0.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    for a in 0..n / 2 {
        let b = n - 1 - a;
        let s = t[(a, b)].re;
        let (p, q) = if s > 0.0 { (C64::new(1.0, 0.0), i) } else { (i, C64::new(1.0, 0.0)) };
        let mut plus = vec![zero; n];
        plus[a] = p * FRAC_1_SQRT_2;
        plus[b] = p * FRAC_1_SQRT_2;
        let mut minus = vec![zero; n];
        minus[a] = q * FRAC_1_SQRT_2;
        minus[b] = -q * FRAC_1_SQRT_2;
        cols.push(plus);
        cols.push(minus);
    }
    if n % 2 == 1 {
        let c = n / 2;
        let mut e = vec![zero; n];
        e[c] = if t[(c, c)].re > 0.0 { C64::new(1.0, 0.0) } else { i };
        cols.push(e);
    }
    debug_assert!(cols.iter().all(|c| (norm(c) - 1.0).abs() < 1e-12));
    Ok(ComplexMatrix::from_columns(&cols))
}
