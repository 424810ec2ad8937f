//! Brute-force convex roof: direct minimization of the average concurrence
//! over all decompositions of a fixed cardinality.
//!
//! A decomposition with `K` elements is `phi_k = sum_j V_kj xi_j` for a
//! `K x r` matrix with orthonormal columns. Writing `U = conj(V)` with rows
//! `u_k`, the average concurrence is
//! `f(U) = sum_k (sum_alpha |u_k^T tau_alpha u_k|^2)^{1/2}`, minimized here on
//! the Stiefel manifold `U^dagger U = I`.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::random::{gaussian_matrix, rng_for};
use crate::croof::{tau_matrices, Decomposition, TauMatrix};
use crate::matkernel::qr;
use crate::{Bilinear, CMatrix, Decomp, Density, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleBackend {
    /// Riemannian gradient descent on a smoothed objective with Armijo steps.
    Gradient,
    /// (1+1) evolution strategy with random skew-Hermitian rotations.
    Evolution,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OracleBudget {
    /// Random starting frames per cardinality.
    pub restarts: usize,
    /// Local iterations per restart.
    pub iterations: usize,
    /// Smallest cardinality tried; never below `rank(rho)`.
    pub k_min: Option<usize>,
    /// Largest cardinality; defaults to the smallest power of two `>= N`.
    pub k_max: Option<usize>,
    pub seed: u64,
    pub backend: OracleBackend,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            restarts: 50,
            iterations: 500,
            k_min: None,
            k_max: None,
            seed: 0,
            backend: OracleBackend::Gradient,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleResult {
    /// Average concurrence of `best_decomposition`.
    pub upper_bound: f64,
    pub best_decomposition: Decomp,
    /// Restarts actually run, over all cardinalities.
    pub restarts: usize,
    /// The best run reached a stationary point (or the value zero) before
    /// exhausting its iterations.
    pub converged: bool,
}

/// Restarts are run in parallel batches of this size; the early exit is
/// decided per batch so the result does not depend on scheduling.
const BATCH: usize = 8;
/// Improvements below this are not worth another batch.
const IMPROVEMENT: f64 = 1e-12;
const ZERO: f64 = 1e-13;

struct Problem {
    tau: Vec<CMatrix>,
    /// `tau_alpha + tau_alpha^T`.
    sym: Vec<CMatrix>,
    xi: Vec<Vec<C64>>,
}

impl Problem {
    fn new(tau: Vec<TauMatrix<f64>>, xi: Vec<Vec<C64>>) -> Self {
        let tau: Vec<CMatrix> = tau.into_iter().map(|t| t.entries).collect();
        let sym = tau.iter().map(|t| t + &t.transpose()).collect();
        Self { tau, sym, xi }
    }

    fn values(&self, row: &[C64]) -> Vec<C64> {
        self.tau
            .iter()
            .map(|t| row.iter().zip(t.matvec(row)).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn objective(&self, u: &CMatrix, eps: f64) -> f64 {
        (0..u.rows())
            .map(|k| {
                let s: f64 = self.values(&u.row(k)).iter().map(|g| g.norm_sqr()).sum();
                (s + eps * eps).sqrt()
            })
            .sum()
    }

    /// Smoothed objective and its Euclidean gradient `2 df/d conj(U)`.
    fn gradient(&self, u: &CMatrix, eps: f64) -> (f64, CMatrix) {
        let (kk, r) = (u.rows(), u.cols());
        let mut grad = CMatrix::zeros(kk, r);
        let mut f = 0.0;
        for k in 0..kk {
            let row = u.row(k);
            let g = self.values(&row);
            let fk = (g.iter().map(|z| z.norm_sqr()).sum::<f64>() + eps * eps).sqrt();
            f += fk;
            if fk == 0.0 {
                continue;
            }
            for (ga, s) in g.iter().zip(&self.sym) {
                let su = s.matvec(&row);
                for j in 0..r {
                    grad[(k, j)] += ga * su[j].conj() / fk;
                }
            }
        }
        (f, grad)
    }

    fn vectors(&self, u: &CMatrix) -> Vec<Vec<C64>> {
        let n = self.xi.first().map_or(0, |x| x.len());
        (0..u.rows())
            .map(|k| {
                (0..n)
                    .map(|a| {
                        (0..u.cols())
                            .map(|j| u[(k, j)].conj() * self.xi[j][a])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }
}

/// `Q` of a thin QR with the phases of `R` absorbed, so that small steps stay
/// close to the input.
fn retract(m: &CMatrix) -> CMatrix {
    let (q, r) = qr(m);
    CMatrix::from_fn(q.rows(), q.cols(), |i, j| {
        let d = r[(j, j)];
        if d.norm() > 0.0 {
            q[(i, j)] * (d / d.norm())
        } else {
            q[(i, j)]
        }
    })
}

fn random_frame<R: Rng + ?Sized>(rng: &mut R, k: usize, r: usize) -> CMatrix {
    retract(&gaussian_matrix(rng, k, r))
}

/// `G - U sym(U^dagger G)`: projection onto the tangent space at `U`.
fn project(u: &CMatrix, g: &CMatrix) -> CMatrix {
    let ug = &u.adjoint() * g;
    let sym = (&ug + &ug.adjoint()).scale_real(0.5);
    g - &(u * &sym)
}

struct Run {
    value: f64,
    frame: CMatrix,
    stationary: bool,
}

/// Real inner product `Re tr(a^dagger b)`.
fn real_inner(a: &CMatrix, b: &CMatrix) -> f64 {
    a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| (x.conj() * y).re).sum()
}

/// Riemannian gradient descent with Barzilai-Borwein steps and a
/// non-monotone Armijo search, on the objective smoothed by `eps`; `eps` is
/// cut by a decade whenever the smoothed problem is nearly solved.
fn descend(p: &Problem, mut u: CMatrix, iterations: usize) -> Run {
    const ETA: f64 = 0.85;
    let scale = p.objective(&u, 0.0).max(1e-300);
    let eps_floor = 1e-12 * scale;
    let mut eps = 1e-3 * scale;
    let mut best = (p.objective(&u, 0.0), u.clone());
    let mut stationary = false;
    let (mut f, g) = p.gradient(&u, eps);
    let mut xi = project(&u, &g);
    let mut step = 1.0 / xi.frobenius_norm().max(1e-300);
    let (mut reference, mut weight) = (f, 1.0);
    for it in 0..iterations {
        let gn2 = real_inner(&xi, &xi);
        let gn = gn2.sqrt();
        if gn <= 10.0 * eps || gn <= 1e-14 * scale {
            if eps <= eps_floor {
                stationary = true;
                break;
            }
            eps = (eps * 0.1).max(eps_floor);
            let (f2, g2) = p.gradient(&u, eps);
            f = f2;
            xi = project(&u, &g2);
            reference = f;
            weight = 1.0;
            continue;
        }
        let mut t = step;
        let mut accepted = None;
        for _ in 0..40 {
            let cand = retract(&(&u - &xi.scale_real(t)));
            let fc = p.objective(&cand, eps);
            if fc <= reference - 1e-4 * t * gn2 {
                accepted = Some((cand, fc));
                break;
            }
            t *= 0.5;
        }
        let Some((cand, _)) = accepted else {
            if eps <= eps_floor {
                stationary = true;
                break;
            }
            eps = (eps * 0.1).max(eps_floor);
            let (f2, g2) = p.gradient(&u, eps);
            f = f2;
            xi = project(&u, &g2);
            reference = f;
            weight = 1.0;
            step = 1.0 / xi.frobenius_norm().max(1e-300);
            continue;
        };
        let (fc, gc) = p.gradient(&cand, eps);
        let xic = project(&cand, &gc);
        let sk = &cand - &u;
        let yk = &xic - &xi;
        let sy = real_inner(&sk, &yk).abs();
        step = if sy > 0.0 {
            if it % 2 == 0 {
                real_inner(&sk, &sk) / sy
            } else {
                sy / real_inner(&yk, &yk)
            }
        } else {
            2.0 * t
        }
        .clamp(1e-12, 1e12);
        u = cand;
        xi = xic;
        f = fc;
        let next = ETA * weight + 1.0;
        reference = (ETA * weight * reference + f) / next;
        weight = next;
        let value = p.objective(&u, 0.0);
        if value < best.0 {
            best = (value, u.clone());
        }
        if best.0 <= ZERO * scale {
            stationary = true;
            break;
        }
    }
    Run {
        value: best.0,
        frame: best.1,
        stationary,
    }
}

fn evolve<R: Rng + ?Sized>(p: &Problem, u: CMatrix, iterations: usize, rng: &mut R) -> Run {
    let k = u.rows();
    let mut cur = (p.objective(&u, 0.0), u);
    let mut sigma = 0.3;
    for it in 0..iterations {
        let g = gaussian_matrix(rng, k, k);
        let skew = (&g - &g.adjoint()).scale_real(0.5 * sigma);
        let cand = retract(&(&cur.1 + &(&skew * &cur.1)));
        let fc = p.objective(&cand, 0.0);
        if fc < cur.0 {
            cur = (fc, cand);
            sigma *= 1.5;
        } else {
            sigma *= 0.9;
        }
        // the ceiling cools geometrically, keeping late steps local
        let ceiling = 1e-2f64.powf(it as f64 / iterations.max(1) as f64);
        sigma = sigma.clamp(1e-9, ceiling);
        if cur.0 <= ZERO {
            break;
        }
    }
    Run {
        value: cur.0,
        frame: cur.1,
        stationary: sigma <= 1e-8 || cur.0 <= ZERO,
    }
}

/// Upper bound on the convex roof of `a`'s concurrence at `rho`, with the
/// decomposition attaining it. Deterministic given `budget.seed`.
pub fn convex_roof_oracle(rho: &Density, a: &Bilinear, budget: OracleBudget) -> OracleResult {
    let xi = rho.subnormalized_eigenvectors();
    let r = xi.len();
    let n = rho.dim();
    let p = Problem::new(tau_matrices(rho, a.kraus()), xi);
    let k_min = budget.k_min.unwrap_or(r).max(r);
    let k_max = budget.k_max.unwrap_or(n.next_power_of_two()).max(k_min);
    let mut best: Option<Run> = None;
    let mut runs = 0usize;
    'sweep: for k in k_min..=k_max {
        let mut done = 0;
        while done < budget.restarts {
            let batch: Vec<usize> = (done..(done + BATCH).min(budget.restarts)).collect();
            let before = best.as_ref().map_or(f64::INFINITY, |b| b.value);
            let results: Vec<Run> = batch
                .par_iter()
                .map(|&s| {
                    let mut rng = rng_for(budget.seed, ((k as u64) << 32) | s as u64);
                    let start = random_frame(&mut rng, k, r);
                    match budget.backend {
                        OracleBackend::Gradient => descend(&p, start, budget.iterations),
                        OracleBackend::Evolution => evolve(&p, start, budget.iterations, &mut rng),
                    }
                })
                .collect();
            runs += results.len();
            done += batch.len();
            for run in results {
                if best.as_ref().is_none_or(|b| run.value < b.value) {
                    best = Some(run);
                }
            }
            let now = best.as_ref().map_or(f64::INFINITY, |b| b.value);
            if now <= ZERO {
                break 'sweep;
            }
            if before.is_finite() && before - now <= IMPROVEMENT * before.max(1.0) {
                break;
            }
        }
    }
    let best = best.expect("at least one restart");
    let decomposition = Decomposition::from_vectors(rho.matrix(), &p.vectors(&best.frame), |s| {
        a.pure_concurrence(s)
    });
    OracleResult {
        upper_bound: decomposition.average_concurrence(),
        best_decomposition: decomposition,
        restarts: runs,
        converged: best.stationary,
    }
}
