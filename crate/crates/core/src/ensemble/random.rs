//! Seeded random primitives shared by the samplers, the symmetry-group
//! samplers of the models and the oracle restarts.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rand_distr::{Exp1, StandardNormal};

use crate::matkernel::{det, normalized, qr};
use crate::{CMatrix, C64};

/// Independent generator for work unit `index` of the stream `seed`.
///
/// ChaCha is counter-based: the stream id selects a disjoint keystream, so
/// unit `index` sees the same numbers whatever order the units run in.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Standard complex normal, `E|z|^2 = 1`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    (0..n).map(|_| complex_normal(rng)).collect()
}

/// Ginibre matrix with i.i.d. standard complex normal entries.
pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Haar-random unit vector.
pub fn haar_pure<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    normalized(&gaussian_vector(rng, n))
}

/// Haar-random unitary: QR of a Ginibre matrix with the phases of `R`'s
/// diagonal pushed into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let (q, r) = qr(&gaussian_matrix(rng, n, n));
    CMatrix::from_fn(n, n, |i, j| {
        let d = r[(j, j)];
        let ph = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        q[(i, j)] * ph
    })
}

/// Haar unitary rescaled to unit determinant.
pub fn special_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let u = haar_unitary(rng, n);
    let d = det(&u).expect("square");
    let fix = C64::from_polar(1.0, -d.arg() / n as f64);
    u.scale(fix)
}

/// Uniformly random rotation in SO(3), from orthogonalized normal triples.
pub fn random_rotation<R: Rng + ?Sized>(rng: &mut R) -> [[f64; 3]; 3] {
    let g = CMatrix::from_fn(3, 3, |_, _| C64::new(rng.sample(StandardNormal), 0.0));
    let (q, r) = qr(&g);
    let mut o = [[0.0; 3]; 3];
    for (i, row) in o.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = q[(i, j)].re * r[(j, j)].re.signum();
        }
    }
    if det3(&o) < 0.0 {
        for row in o.iter_mut() {
            row[0] = -row[0];
        }
    }
    o
}

pub(crate) fn det3(o: &[[f64; 3]; 3]) -> f64 {
    o[0][0] * (o[1][1] * o[2][2] - o[1][2] * o[2][1])
        - o[0][1] * (o[1][0] * o[2][2] - o[1][2] * o[2][0])
        + o[0][2] * (o[1][0] * o[2][1] - o[1][1] * o[2][0])
}

pub fn rotation_matrix(o: &[[f64; 3]; 3]) -> CMatrix {
    CMatrix::from_fn(3, 3, |i, j| C64::new(o[i][j], 0.0))
}

/// Hilbert-Schmidt random density matrix `G G^dagger / Tr(G G^dagger)`.
pub fn hs_mixed<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let g = gaussian_matrix(rng, n, n);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr).hermitian_part()
}

/// Uniform point of the `k - 1` simplex.
pub fn uniform_simplex<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}
