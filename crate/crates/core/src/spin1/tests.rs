use num_complex::Complex;
use proptest::prelude::*;

use super::*;
use crate::ensemble::random::{haar_pure, hs_mixed, random_rotation, rng_for, rotation_matrix};
use crate::ensemble::{classical_mixture, spin1_coherent_admixture};
use crate::matkernel::dot;
use crate::models::ModelKind;

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

fn maximally_mixed() -> Density {
    Density::new(CMatrix::identity(3).scale_real(1.0 / 3.0)).unwrap()
}

fn e3() -> Vec<C64> {
    vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]
}

fn random_density(seed: u64) -> Density {
    Density::new(hs_mixed(&mut rng_for(seed, 40), 3)).unwrap()
}

/// `-(m1+m2+m3)(-m1+m2+m3)(m1-m2+m3)(m1+m2-m3)`, the trace statistic written
/// through the `mu` values.
fn heron(mu: &[f64]) -> f64 {
    let (a, b, d) = (mu[0], mu[1], mu[2]);
    -(a + b + d) * (-a + b + d) * (a - b + d) * (a + b - d)
}

#[test]
fn verdict_thresholds() {
    assert_eq!(Verdict::from_statistic(-1e-3, 1e-9), Verdict::Classical);
    assert_eq!(Verdict::from_statistic(1e-10, 1e-9), Verdict::Boundary);
    assert_eq!(Verdict::from_statistic(-1e-9, 1e-9), Verdict::Boundary);
    assert_eq!(Verdict::from_statistic(2e-9, 1e-9), Verdict::Nonclassical);
    assert_eq!(Verdict::Nonclassical.to_string(), "nonclassical");
}

#[test]
fn generators_satisfy_the_algebra() {
    let l = spin_matrices();
    let i = c(0.0, 1.0);
    let comm = &(&l[0] * &l[1]) - &(&l[1] * &l[0]);
    assert!((&comm - &l[2].scale(i)).max_abs() < 1e-15);
    let casimir = l.iter().fold(CMatrix::zeros(3, 3), |acc, lk| acc + lk * lk);
    assert!((&casimir - &CMatrix::identity(3).scale_real(2.0)).max_abs() < 1e-15);
}

#[test]
fn coherence_examples() {
    let a = reference_coherent();
    assert!(coherence_residual(&a) < 1e-15);
    assert!((total_variance(&a) - 1.0).abs() < 1e-15);
    assert!(coherence_residual(&e3()) > 0.5);
    assert!((total_variance(&e3()) - 2.0).abs() < 1e-15);
    assert!((inner(&a, &spin_matrices()[2].matvec(&a)).re - 1.0).abs() < 1e-15);
}

#[test]
fn trace_examples() {
    let t = trace_criterion(&maximally_mixed(), DEFAULT_TOL);
    assert!((t.value + 1.0 / 27.0).abs() < 1e-15);
    assert_eq!(t.verdict, Verdict::Classical);
    let coherent = Density::from_pure(&reference_coherent()).unwrap();
    let t = trace_criterion(&coherent, DEFAULT_TOL);
    assert!(t.value.abs() < 1e-15);
    assert_eq!(t.verdict, Verdict::Boundary);
    let t = trace_criterion(&Density::from_pure(&e3()).unwrap(), DEFAULT_TOL);
    assert!((t.value - 1.0).abs() < 1e-15);
    assert_eq!(t.verdict, Verdict::Nonclassical);
}

#[test]
fn giraud_examples() {
    let g = giraud_z(&maximally_mixed());
    assert_eq!(g.u, [0.0, 0.0, 0.0]);
    for ev in g.z_eigenvalues {
        assert!((ev - 1.0 / 3.0).abs() < 1e-15);
    }
    let [a2, a1, a0] = g.charpoly;
    assert!((a2 + 1.0).abs() < 1e-15 && (a1 - 1.0 / 3.0).abs() < 1e-15 && (a0 + 1.0 / 27.0).abs() < 1e-15);
    assert_eq!(g.verdict(DEFAULT_TOL), Verdict::Classical);

    let g = giraud_z(&Density::from_pure(&reference_coherent()).unwrap());
    assert!((g.u[2] - 1.0).abs() < 1e-15);
    assert!(g.z_min_eigenvalue().abs() < 1e-15);
    assert_eq!(g.verdict(DEFAULT_TOL), Verdict::Boundary);

    let g = giraud_z(&Density::from_pure(&e3()).unwrap());
    assert!((g.z_min_eigenvalue() + 1.0).abs() < 1e-15);
    assert_eq!(g.verdict(DEFAULT_TOL), Verdict::Nonclassical);
}

#[test]
fn canonical_form_of_a_real_diagonal_state() {
    let rho = Density::new(CMatrix::diag_real(&[0.5, 0.3, 0.2])).unwrap();
    let cf = canonical_form(&rho);
    let mut l = cf.lambdas;
    l.sort_by(f64::total_cmp);
    assert!((l[0] - 0.2).abs() < 1e-15 && (l[2] - 0.5).abs() < 1e-15);
    assert_eq!(cf.v, [0.0, 0.0, 0.0]);
    assert!(cf.structure_residual(&rho) < 1e-15);
}

#[test]
fn coherent_decomposition_examples() {
    let d = coherent_decomposition(&maximally_mixed(), DEFAULT_TOL).unwrap();
    assert_eq!(d.len(), 4);
    assert!(d.components.iter().all(|k| (k.weight - 0.25).abs() < 1e-12));

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let b = vec![c(h, 0.0), c(0.0, -h), c(0.0, 0.0)];
    let rank2 = Density::from_mixture(&[0.7, 0.3], &[reference_coherent(), b]).unwrap();
    let d = coherent_decomposition(&rank2, DEFAULT_TOL).unwrap();
    assert_eq!(d.len(), 2);

    let err = coherent_decomposition(&Density::from_pure(&e3()).unwrap(), DEFAULT_TOL).unwrap_err();
    assert!(matches!(err, Error::Nonclassical { criterion: "2Tr(R^2) - (Tr R)^2", .. }));

    let q = Density::new(CMatrix::identity(4).scale_real(0.25)).unwrap();
    assert!(matches!(coherent_decomposition(&q, DEFAULT_TOL), Err(Error::UnsupportedDimension(4))));
    assert!(matches!(classify(&q, DEFAULT_TOL), Err(Error::UnsupportedDimension(4))));
}

#[test]
fn coherent_admixture_is_flagged_by_all_tests() {
    for p in [0.01, 0.05, 0.2, 0.5] {
        let cl = classify(&spin1_coherent_admixture(p), DEFAULT_TOL).unwrap();
        assert!((cl.mu_gap - p).abs() < 1e-12);
        assert_eq!(cl.mu_verdict, Verdict::Nonclassical);
        assert_eq!(cl.trace_verdict, Verdict::Nonclassical);
        assert_eq!(cl.z_verdict, Verdict::Nonclassical);
        assert!(cl.agree && cl.outside_band());
    }
}

#[test]
fn coherent_mixtures_decompose_into_coherent_states() {
    let mut rng = rng_for(41, 0);
    for _ in 0..300 {
        let rho = classical_mixture(&mut rng, ModelKind::Spin1);
        let cl = classify(&rho, DEFAULT_TOL).unwrap();
        assert_ne!(cl.trace_verdict, Verdict::Nonclassical);
        assert_ne!(cl.z_verdict, Verdict::Nonclassical);
        let d = coherent_decomposition(&rho, DEFAULT_TOL).unwrap();
        assert!(d.len() <= 4);
        assert!(d.reconstruction_residual < 1e-10);
        for k in &d.components {
            assert!(dot(&k.state, &k.state).norm() < 1e-8);
        }
    }
}

#[test]
fn classical_set_is_convex() {
    let mut rng = rng_for(43, 0);
    for _ in 0..10_000 {
        let a = classical_mixture(&mut rng, ModelKind::Spin1);
        let b = classical_mixture(&mut rng, ModelKind::Spin1);
        let p: f64 = rand::Rng::random(&mut rng);
        let m = Density::new(a.matrix().scale_real(p) + b.matrix().scale_real(1.0 - p)).unwrap();
        let cl = classify(&m, DEFAULT_TOL).unwrap();
        assert_ne!(cl.trace_verdict, Verdict::Nonclassical);
        assert_ne!(cl.z_verdict, Verdict::Nonclassical);
        assert_ne!(cl.mu_verdict, Verdict::Nonclassical);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn trace_statistic_is_heron_in_mu(seed in any::<u64>()) {
        let rho = random_density(seed);
        let mu = crate::croof::mu_values(&rho, &Conj::identity(3)).unwrap();
        let t = trace_criterion(&rho, DEFAULT_TOL).value;
        prop_assert!((t - heron(&mu)).abs() <= 1e-12);
    }

    #[test]
    fn giraud_data_is_consistent(seed in any::<u64>()) {
        let rho = random_density(seed);
        let g = giraud_z(&rho);
        prop_assert!((&g.reconstruct() - rho.matrix()).max_abs() <= 1e-14);
        let [a2, a1, a0] = g.charpoly;
        let [x, y, z] = g.z_eigenvalues;
        prop_assert!((a2 + x + y + z).abs() <= 1e-12);
        prop_assert!((a1 - (x * y + y * z + z * x)).abs() <= 1e-12);
        prop_assert!((a0 + x * y * z).abs() <= 1e-12);
        // Tr Z = 1 - |<L>|^2, strictly positive for full-rank states
        prop_assert!(a2 < 0.0);
        prop_assert!(!(a0 < 0.0 && a1 < 0.0));
        let cf = canonical_form(&rho);
        prop_assert!(cf.v.iter().map(|x| x * x).sum::<f64>() < 0.25);
    }

    #[test]
    fn canonical_form_reproduces_the_state(seed in any::<u64>()) {
        let rho = random_density(seed);
        let cf = canonical_form(&rho);
        prop_assert!(cf.structure_residual(&rho) <= 1e-12);
        let o = cf.rotation_matrix();
        prop_assert!((&(&o.transpose() * &o) - &CMatrix::identity(3)).max_abs() <= 1e-12);
        prop_assert!((crate::ensemble::random::det3(&cf.rotation) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn statistics_are_rotation_invariant(seed in any::<u64>()) {
        let rho = random_density(seed);
        let o = rotation_matrix(&random_rotation(&mut rng_for(seed, 42)));
        let turned = Density::new((&(&o * rho.matrix()) * &o.transpose()).hermitian_part()).unwrap();
        let a = classify(&rho, DEFAULT_TOL).unwrap();
        let b = classify(&turned, DEFAULT_TOL).unwrap();
        prop_assert!((a.trace_value - b.trace_value).abs() <= 1e-12);
        prop_assert!((a.z_min_eigenvalue - b.z_min_eigenvalue).abs() <= 1e-12);
        prop_assert!((a.mu_gap - b.mu_gap).abs() <= 1e-12);
    }

    #[test]
    fn pure_states_are_never_strictly_classical(seed in any::<u64>()) {
        let psi = haar_pure(&mut rng_for(seed, 44), 3);
        let rho = Density::from_pure(&psi).unwrap();
        let c2 = dot(&psi, &psi).norm_sqr();
        // mu = (|psi^T psi|, 0, 0), so the statistic is |psi^T psi|^4
        prop_assert!((trace_criterion(&rho, DEFAULT_TOL).value - c2 * c2).abs() <= 1e-12);
    }
}
