use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::matkernel::{det, norm, pfaffian4, svd, takagi, ComplexMatrix};
use crate::{CMatrix, C64};

const ENCODING_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-10;
/// Singular or Takagi values above this count towards the Slater rank.
pub const SLATER_RANK_TOL: f64 = 1e-10;
const PAIRING_TOL: f64 = 1e-8;

/// Upper-triangle positions `(i, j)`, `i < j`, in the order of the encoding.
const FERMION_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn require_unit(v: &[C64], len: usize) -> Result<()> {
    if v.len() != len {
        return Err(Error::DimensionMismatch(format!("expected {len} amplitudes, got {}", v.len())));
    }
    let n = norm(v);
    if (n - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(n));
    }
    Ok(())
}

/// Two-fermion state `sum_ij w_ij f_i^dagger f_j^dagger |0>` with antisymmetric
/// `4 x 4` amplitudes, encoded as `2 (w_12, w_13, w_14, w_23, w_24, w_34)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FermionState {
    w: CMatrix,
    vec: Vec<C64>,
}

impl FermionState {
    pub fn encode(w: &CMatrix) -> Vec<C64> {
        FERMION_PAIRS.iter().map(|&(i, j)| w[(i, j)] * 2.0).collect()
    }

    pub fn decode(vec: &[C64]) -> CMatrix {
        let mut w = CMatrix::zeros(4, 4);
        for (&(i, j), &x) in FERMION_PAIRS.iter().zip(vec) {
            w[(i, j)] = x * 0.5;
            w[(j, i)] = -x * 0.5;
        }
        w
    }

    /// Wraps an antisymmetric amplitude matrix, rescaled to unit norm.
    pub fn from_matrix(w: CMatrix) -> Result<Self> {
        if w.rows() != 4 || w.cols() != 4 {
            return Err(Error::DimensionMismatch("fermion amplitudes must be 4x4".into()));
        }
        w.check_antisymmetric(ENCODING_TOL * w.max_abs().max(1.0))?;
        let vec = Self::encode(&w);
        let n = norm(&vec);
        if n == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(Self::from_vec_unchecked(&vec.iter().map(|&z| z / n).collect::<Vec<_>>()))
    }

    pub fn from_vec(vec: &[C64]) -> Result<Self> {
        require_unit(vec, 6)?;
        Ok(Self::from_vec_unchecked(vec))
    }

    pub(crate) fn from_vec_unchecked(vec: &[C64]) -> Self {
        Self {
            w: Self::decode(vec),
            vec: vec.to_vec(),
        }
    }

    pub fn w(&self) -> &CMatrix {
        &self.w
    }

    pub fn vec(&self) -> &[C64] {
        &self.vec
    }

    pub fn slater_rank(&self) -> Result<usize> {
        Ok(slater_values_fermion(self)?
            .iter()
            .filter(|&&z| z > SLATER_RANK_TOL)
            .count())
    }
}

/// Two-boson state `sum_ij v_ij a_i^dagger a_j^dagger |0>` with symmetric
/// `2 x 2` amplitudes, encoded as `(v_11 / sqrt 2, v_12, v_22 / sqrt 2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BosonState {
    v: CMatrix,
    vec: Vec<C64>,
}

impl BosonState {
    pub fn encode(v: &CMatrix) -> Vec<C64> {
        vec![v[(0, 0)] / SQRT_2, v[(0, 1)], v[(1, 1)] / SQRT_2]
    }

    pub fn decode(vec: &[C64]) -> CMatrix {
        CMatrix::from_vec(
            2,
            2,
            vec![vec[0] * SQRT_2, vec[1], vec[1], vec[2] * SQRT_2],
        )
        .expect("2x2")
    }

    /// Wraps a symmetric amplitude matrix, rescaled so the encoding is a unit
    /// vector.
    pub fn from_matrix(v: CMatrix) -> Result<Self> {
        if v.rows() != 2 || v.cols() != 2 {
            return Err(Error::DimensionMismatch("boson amplitudes must be 2x2".into()));
        }
        v.check_symmetric(ENCODING_TOL * v.max_abs().max(1.0))?;
        let vec = Self::encode(&v);
        let n = norm(&vec);
        if n == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(Self::from_vec_unchecked(&vec.iter().map(|&z| z / n).collect::<Vec<_>>()))
    }

    pub fn from_vec(vec: &[C64]) -> Result<Self> {
        require_unit(vec, 3)?;
        Ok(Self::from_vec_unchecked(vec))
    }

    pub(crate) fn from_vec_unchecked(vec: &[C64]) -> Self {
        Self {
            v: Self::decode(vec),
            vec: vec.to_vec(),
        }
    }

    pub fn v(&self) -> &CMatrix {
        &self.v
    }

    pub fn vec(&self) -> &[C64] {
        &self.vec
    }

    pub fn det(&self) -> C64 {
        det(&self.v).expect("2x2")
    }

    pub fn slater_rank(&self) -> Result<usize> {
        Ok(slater_values_boson(self)?
            .iter()
            .filter(|&&z| z > SLATER_RANK_TOL)
            .count())
    }
}

/// Schmidt coefficients of a bipartite vector, descending.
pub fn schmidt_coeffs(psi: &[C64], dim1: usize, dim2: usize) -> Result<Vec<f64>> {
    if dim1 * dim2 != psi.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} amplitudes for a {dim1}x{dim2} system",
            psi.len()
        )));
    }
    let c = ComplexMatrix::from_fn(dim1, dim2, |i, j| psi[i * dim2 + j]);
    Ok(svd(&c).sigma)
}

/// Magnitudes `z_k` of the canonical `2 x 2` blocks of `w`, descending.
///
/// The singular values of an antisymmetric matrix come in equal pairs; a pair
/// that differs by more than `1e-8` is reported as an error.
pub fn slater_values_fermion(f: &FermionState) -> Result<Vec<f64>> {
    let s = svd(f.w()).sigma;
    s.chunks(2)
        .map(|p| {
            let gap = (p[0] - p[1]).abs();
            if gap > PAIRING_TOL {
                Err(Error::UnpairedSingularValues(gap))
            } else {
                Ok(0.5 * (p[0] + p[1]))
            }
        })
        .collect()
}

/// Takagi values of `v`, descending.
pub fn slater_values_boson(b: &BosonState) -> Result<Vec<f64>> {
    Ok(takagi(b.v())?.mu)
}

/// `8 |Pf(w)|`, the fermion concurrence of a unit-norm encoding; it vanishes
/// exactly on single Slater determinants.
pub fn pfaffian_residual(f: &FermionState) -> f64 {
    8.0 * pfaffian4(f.w()).expect("decoded amplitudes are antisymmetric").norm()
}

/// Sum of `|Pf|^2` over all `4 x 4` principal minors of an antisymmetric
/// `2K x 2K` matrix, `2K` in `{4, 6, 8}`. Zero iff the Slater rank is one.
pub fn pfaffian_minor_sum(w: &CMatrix) -> Result<f64> {
    let n = w.rows();
    if !w.is_square() || !matches!(n, 4 | 6 | 8) {
        return Err(Error::UnsupportedDimension(n));
    }
    w.check_antisymmetric(ENCODING_TOL * w.max_abs().max(1.0))?;
    let mut sum = 0.0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let keep = [a, b, c, d];
                    sum += pfaffian4(&w.select(&keep, &keep))?.norm_sqr();
                }
            }
        }
    }
    Ok(sum)
}
