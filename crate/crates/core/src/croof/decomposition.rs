use num_complex::Complex;
use serde::Serialize;

use super::concurrence::{tau_matrices, gap_of};
use super::conjugation::Conjugation;
use super::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::matkernel::{norm, takagi, ComplexMatrix};
use crate::scalar::Real;

/// One term `weight * |state><state|` of a pure-state decomposition.
#[derive(Debug, Clone, Serialize)]
pub struct Component<T: Real> {
    pub weight: T,
    pub state: Vec<Complex<T>>,
}

/// Convex decomposition of a density matrix into pure states.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition<T: Real> {
    pub components: Vec<Component<T>>,
    /// Concurrence of each normalized component state.
    pub component_concurrences: Vec<T>,
    /// Frobenius distance between the reassembled mixture and the target.
    pub reconstruction_residual: T,
}

impl<T: Real> Decomposition<T> {
    /// Normalizes subnormalized vectors `phi_k` into weighted components and
    /// scores them with `concurrence`. Vectors of zero norm are dropped.
    pub fn from_vectors(
        rho: &ComplexMatrix<T>,
        vectors: &[Vec<Complex<T>>],
        concurrence: impl Fn(&[Complex<T>]) -> T,
    ) -> Self {
        let mut components = Vec::with_capacity(vectors.len());
        let mut concurrences = Vec::with_capacity(vectors.len());
        for phi in vectors {
            let n = norm(phi);
            if n == T::zero() {
                continue;
            }
            let state: Vec<Complex<T>> = phi.iter().map(|&z| z / n).collect();
            concurrences.push(concurrence(&state));
            components.push(Component {
                weight: n * n,
                state,
            });
        }
        let mut out = Self {
            components,
            component_concurrences: concurrences,
            reconstruction_residual: T::zero(),
        };
        out.reconstruction_residual = (&out.reconstruct() - rho).frobenius_norm();
        out
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn weight_sum(&self) -> T {
        self.components.iter().map(|c| c.weight).sum()
    }

    /// `sum_k weight_k |state_k><state_k|`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let n = self.components.first().map_or(0, |c| c.state.len());
        self.components
            .iter()
            .fold(ComplexMatrix::zeros(n.max(1), n.max(1)), |acc, c| {
                acc + ComplexMatrix::outer(&c.state).scale_real(c.weight)
            })
    }

    /// Average concurrence `sum_k weight_k C(state_k)`.
    pub fn average_concurrence(&self) -> T {
        self.components
            .iter()
            .zip(&self.component_concurrences)
            .map(|(c, &k)| c.weight * k)
            .sum()
    }
}

/// Real Sylvester-Hadamard matrix of order `k` (a power of two), entries `+-1`.
pub fn sylvester_hadamard(k: usize) -> Vec<Vec<i8>> {
    assert!(k.is_power_of_two(), "Sylvester construction needs a power of two");
    let mut h = vec![vec![1i8]];
    while h.len() < k {
        let m = h.len();
        let mut next = vec![vec![0i8; 2 * m]; 2 * m];
        for i in 0..m {
            for j in 0..m {
                next[i][j] = h[i][j];
                next[i][j + m] = h[i][j];
                next[i + m][j] = h[i][j];
                next[i + m][j + m] = -h[i][j];
            }
        }
        h = next;
    }
    h
}

/// Phases `alpha_j` with `|sum_j mu_j e^{i alpha_j}| = max(0, gap)`, plus the
/// closure residual. `mu` is sorted descending.
pub(crate) fn closing_phases<T: Real>(mu: &[T]) -> (Vec<T>, T) {
    let r = mu.len();
    let gap = gap_of(mu);
    if gap > T::zero() || r <= 1 {
        // mu_1 - sum_{j>1} mu_j: alpha_1 = 0, the rest opposite.
        let phases = (0..r).map(|j| if j == 0 { T::zero() } else { T::PI() }).collect();
        return (phases, T::zero());
    }
    // Classical case: split mu_2.. greedily into two groups, then close the
    // triangle with sides (mu_1, a, b).
    let mut group = vec![0u8; r];
    let (mut a, mut b) = (T::zero(), T::zero());
    for j in 1..r {
        if a <= b {
            a += mu[j];
            group[j] = 1;
        } else {
            b += mu[j];
            group[j] = 2;
        }
    }
    let m1 = mu[0];
    let phi_a = if a > T::zero() && m1 > T::zero() {
        let cos = (b * b - m1 * m1 - a * a) / (T::lit(2.0) * m1 * a);
        cos.max(-T::one()).min(T::one()).acos()
    } else {
        T::zero()
    };
    let partial = Complex::new(m1, T::zero()) + Complex::from_polar(a, phi_a);
    let phi_b = if partial.norm() > T::zero() {
        (-partial).arg()
    } else {
        T::zero()
    };
    let closure = (partial + Complex::from_polar(b, phi_b)).norm();
    let phases = group
        .iter()
        .map(|g| match g {
            1 => phi_a,
            2 => phi_b,
            _ => T::zero(),
        })
        .collect();
    (phases, closure)
}

/// Optimal decomposition for a symmetric conjugation.
///
/// Uses `2^ceil(log2 r)` components, `r = rank(rho)`: the subnormalized
/// eigenvectors are rotated so that `tau` becomes `diag(mu)`, rephased so that
/// the phased values `mu_j e^{i alpha_j}` sum to the concurrence, and mixed
/// with a normalized Hadamard matrix. Every component then carries the same
/// share of the concurrence; on classical states all components are classical.
pub fn optimal_decomposition<T: Real>(
    rho: &DensityMatrix<T>,
    c: &Conjugation<T>,
) -> Result<Decomposition<T>> {
    c.require_symmetric()?;
    let xi = rho.subnormalized_eigenvectors();
    let r = xi.len();
    let n = rho.dim();
    let tau = tau_matrices(rho, std::slice::from_ref(c.matrix()))
        .pop()
        .expect("one Kraus operator")
        .entries;
    let tau = ComplexMatrix::from_fn(r, r, |i, j| (tau[(i, j)] + tau[(j, i)]) * T::lit(0.5));
    let tk = takagi(&tau)?;
    // y_j = sum_i W_ij xi_i diagonalizes tau
    let zero = Complex::new(T::zero(), T::zero());
    let y: Vec<Vec<Complex<T>>> = (0..r)
        .map(|j| {
            (0..n)
                .map(|a| (0..r).fold(zero, |acc, i| acc + xi[i][a] * tk.w[(i, j)]))
                .collect()
        })
        .collect();
    let (alpha, closure) = closing_phases(&tk.mu);
    let scale = tk.mu.iter().copied().sum::<T>().max(T::one());
    if closure > T::lit(1e-9) * scale {
        return Err(Error::PhaseClosure {
            residual: closure.as_f64(),
            mu: tk.mu.iter().map(|m| m.as_f64()).collect(),
        });
    }
    // z_j = e^{-i alpha_j / 2} y_j so that z_j^dagger T conj(z_j) = mu_j e^{i alpha_j}
    let z: Vec<Vec<Complex<T>>> = y
        .iter()
        .zip(&alpha)
        .map(|(yj, &al)| {
            let ph = Complex::from_polar(T::one(), -al / T::lit(2.0));
            yj.iter().map(|&v| v * ph).collect()
        })
        .collect();
    let k = r.next_power_of_two();
    let h = sylvester_hadamard(k);
    let inv = T::one() / T::lit(k as f64).sqrt();
    let phis: Vec<Vec<Complex<T>>> = (0..k)
        .map(|row| {
            (0..n)
                .map(|a| {
                    (0..r).fold(zero, |acc, j| acc + z[j][a] * T::lit(h[row][j] as f64)) * inv
                })
                .collect()
        })
        .collect();
    Ok(Decomposition::from_vectors(rho.matrix(), &phis, |s| c.concurrence(s)))
}
