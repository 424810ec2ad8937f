use num_complex::Complex;
use proptest::prelude::*;

use super::*;
use crate::ensemble::random::{gaussian_matrix, haar_pure, rng_for};
use crate::matkernel::{dot, norm};

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

fn basis(n: usize, k: usize) -> Vec<C64> {
    let mut e = vec![c(0.0, 0.0); n];
    e[k] = c(1.0, 0.0);
    e
}

#[test]
fn operator_spectra() {
    let nonzero = |k: ModelKind| -> Vec<f64> {
        make_model(k)
            .bilinear
            .spectrum()
            .eigenvalues
            .iter()
            .copied()
            .filter(|x| x.abs() > 1e-10)
            .collect()
    };
    assert_eq!(nonzero(ModelKind::Qubit2).len(), 1);
    assert!((nonzero(ModelKind::Qubit2)[0] - 4.0).abs() < 1e-10);
    assert!((nonzero(ModelKind::Fermion4)[0] - 6.0).abs() < 1e-10);
    assert!((nonzero(ModelKind::Boson2)[0] - 3.0).abs() < 1e-10);
    let s = nonzero(ModelKind::Spin1);
    assert_eq!(s.len(), 4);
    assert!((s[0] - 3.0).abs() < 1e-10);
    assert!(s[1..].iter().all(|x| (x - 2.0).abs() < 1e-10));
}

#[test]
fn conjugations_are_symmetric_unitaries() {
    for k in ModelKind::ALL {
        let t = k.conjugation_matrix();
        assert_eq!(t.rows(), k.hilbert_dim());
        assert_eq!(t.unitarity_defect(), 0.0);
        assert_eq!(t.symmetry_defect(), 0.0);
    }
}

#[test]
fn parse_and_display() {
    for k in ModelKind::ALL {
        assert_eq!(k.to_string().parse::<ModelKind>().unwrap(), k);
    }
    assert!(matches!("qutrit".parse::<ModelKind>(), Err(Error::InvalidArgument(_))));
}

#[test]
fn schmidt_examples() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let bell = [c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)];
    let l = schmidt_coeffs(&bell, 2, 2).unwrap();
    assert!((l[0] - h).abs() < 1e-15 && (l[1] - h).abs() < 1e-15);
    let l = schmidt_coeffs(&basis(4, 0), 2, 2).unwrap();
    assert_eq!(l, vec![1.0, 0.0]);
    assert!(schmidt_coeffs(&basis(4, 0), 2, 3).is_err());
}

#[test]
fn fermion_examples() {
    // single Slater determinant f_1^dagger f_2^dagger
    let f = FermionState::from_vec(&basis(6, 0)).unwrap();
    assert_eq!(f.w()[(0, 1)], c(0.5, 0.0));
    assert_eq!(f.slater_rank().unwrap(), 1);
    assert_eq!(pfaffian_residual(&f), 0.0);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = vec![c(0.0, 0.0); 6];
    v[0] = c(h, 0.0);
    v[5] = c(h, 0.0);
    let f = FermionState::from_vec(&v).unwrap();
    assert_eq!(f.slater_rank().unwrap(), 2);
    let z = slater_values_fermion(&f).unwrap();
    assert!((z[0] - z[1]).abs() < 1e-15);
    assert!((pfaffian_residual(&f) - 1.0).abs() < 1e-15);
    assert!((make_model(ModelKind::Fermion4).pure_concurrence(&v) - 1.0).abs() < 1e-15);
}

#[test]
fn fermion_rejects_bad_input() {
    let mut w = CMatrix::zeros(4, 4);
    w[(0, 1)] = c(1.0, 0.0);
    assert!(FermionState::from_matrix(w).is_err());
    assert!(FermionState::from_matrix(CMatrix::zeros(4, 4)).is_err());
    assert!(FermionState::from_vec(&[c(1.0, 0.0); 6]).is_err());
    assert!(FermionState::from_vec(&basis(5, 0)).is_err());
}

#[test]
fn boson_examples() {
    // both bosons in mode 1: classical
    let b = BosonState::from_vec(&basis(3, 0)).unwrap();
    assert_eq!(b.slater_rank().unwrap(), 1);
    assert_eq!(b.det().norm(), 0.0);
    // a_1^dagger a_2^dagger |0>: maximally non-classical
    let b = BosonState::from_vec(&basis(3, 1)).unwrap();
    assert_eq!(b.slater_rank().unwrap(), 2);
    assert!((b.det().norm() - 1.0).abs() < 1e-15);
    let mu = slater_values_boson(&b).unwrap();
    assert!((mu[0] - 1.0).abs() < 1e-12 && (mu[1] - 1.0).abs() < 1e-12);
    let mut v = CMatrix::zeros(2, 2);
    v[(0, 1)] = c(1.0, 0.0);
    assert!(BosonState::from_matrix(v).is_err());
}

#[test]
fn pfaffian_minor_sum_examples() {
    let j = |n: usize, pairs: &[(usize, usize)]| {
        let mut w = CMatrix::zeros(n, n);
        for &(a, b) in pairs {
            w[(a, b)] = c(1.0, 0.0);
            w[(b, a)] = c(-1.0, 0.0);
        }
        w
    };
    assert_eq!(pfaffian_minor_sum(&j(6, &[(0, 1)])).unwrap(), 0.0);
    assert_eq!(pfaffian_minor_sum(&j(6, &[(0, 1), (2, 3), (4, 5)])).unwrap(), 3.0);
    assert_eq!(pfaffian_minor_sum(&j(8, &[(0, 1), (2, 3), (4, 5), (6, 7)])).unwrap(), 6.0);
    assert!(matches!(pfaffian_minor_sum(&j(5, &[])), Err(Error::UnsupportedDimension(5))));
    // rank two: a b^T - b a^T
    let mut rng = rng_for(31, 0);
    let g = gaussian_matrix(&mut rng, 8, 2);
    let w = CMatrix::from_fn(8, 8, |i, k| g[(i, 0)] * g[(k, 1)] - g[(k, 0)] * g[(i, 1)]);
    assert!(pfaffian_minor_sum(&w).unwrap() < 1e-20);
}

#[test]
fn real_split_examples() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let coherent = [c(h, 0.0), c(0.0, h), c(0.0, 0.0)];
    let s = real_split(&coherent);
    assert!((s.theta - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    let s = real_split(&[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]);
    assert!(s.theta.abs() < 1e-15);
    assert!(s.x.iter().zip(&s.y).map(|(a, b)| a * b).sum::<f64>().abs() < 1e-15);
}

#[test]
fn magic_bases_untwist_the_conjugation() {
    for k in ModelKind::ALL {
        let b = magic_transform(k);
        let t = k.conjugation_matrix();
        let n = k.hilbert_dim();
        assert!(b.unitarity_defect() < 1e-14);
        assert!((&(&b.adjoint() * &t) * &b.conj() - CMatrix::identity(n)).max_abs() < 1e-14);
        let model = make_model(k);
        let psi = haar_pure(&mut rng_for(32, k as u64), n);
        let coords = b.adjoint().matvec(&psi);
        assert!((dot(&coords, &coords).norm() - model.pure_concurrence(&psi)).abs() < 1e-12);
    }
}

#[test]
fn magic_basis_falls_back_to_takagi() {
    let u = crate::ensemble::random::haar_unitary(&mut rng_for(33, 0), 4);
    let t = &u * &u.transpose();
    let b = magic_basis(&t).unwrap();
    assert!((&(&b.adjoint() * &t) * &b.conj() - CMatrix::identity(4)).max_abs() < 1e-10);
}

#[test]
fn concurrence_is_symmetry_invariant() {
    for k in ModelKind::ALL {
        let model = make_model(k);
        let mut rng = rng_for(34, k as u64);
        for _ in 0..500 {
            let g = model.random_symmetry(&mut rng);
            assert!(g.unitarity_defect() < 1e-12);
            let psi = haar_pure(&mut rng, model.hilbert_dim);
            let moved = g.matvec(&psi);
            assert!((model.pure_concurrence(&psi) - model.pure_concurrence(&moved)).abs() <= 1e-12);
        }
    }
}

#[test]
fn classical_states_have_zero_concurrence() {
    for k in ModelKind::ALL {
        let model = make_model(k);
        let mut rng = rng_for(35, k as u64);
        for _ in 0..500 {
            let psi = model.random_classical_pure(&mut rng);
            assert!((norm(&psi) - 1.0).abs() < 1e-12);
            assert!(model.pure_concurrence(&psi) <= 1e-12);
            assert!(model.classicality_residual(&psi).unwrap() <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn concurrence_matches_model_residual(seed in any::<u64>(), m in 0usize..3) {
        let model = make_model(ModelKind::ALL[m]);
        let psi = haar_pure(&mut rng_for(seed, 0), model.hilbert_dim);
        let c = model.pure_concurrence(&psi);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        prop_assert!((c - model.classicality_residual(&psi).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn spin1_concurrence_is_a_ground_state_defect(seed in any::<u64>()) {
        // sum_k <L_k>^2 = 1 - |psi^T psi|^2 and sum_k L_k^2 = 2
        let model = make_model(ModelKind::Spin1);
        let psi = haar_pure(&mut rng_for(seed, 3), 3);
        let c = model.pure_concurrence(&psi);
        prop_assert!((c * c - (crate::spin1::total_variance(&psi) - 1.0)).abs() <= 1e-12);
    }

    #[test]
    fn qubit_concurrence_from_reduced_purity(seed in any::<u64>()) {
        let psi = haar_pure(&mut rng_for(seed, 4), 4);
        let reduced = crate::matkernel::partial_trace(&CMatrix::outer(&psi), 2, 2, crate::matkernel::Subsystem::Second).unwrap();
        let purity = (&reduced * &reduced).trace().re;
        let c = make_model(ModelKind::Qubit2).pure_concurrence(&psi);
        prop_assert!((2.0 * (1.0 - purity) - c * c).abs() <= 1e-10);
    }

    #[test]
    fn encodings_round_trip(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let f = haar_pure(&mut rng, 6);
        let fs = FermionState::from_vec(&f).unwrap();
        prop_assert_eq!(FermionState::encode(fs.w()), f.clone());
        prop_assert!(fs.w().antisymmetry_defect() == 0.0);
        let b = haar_pure(&mut rng, 3);
        let bs = BosonState::from_vec(&b).unwrap();
        let back = BosonState::encode(bs.v());
        prop_assert!(back.iter().zip(&b).all(|(x, y)| (x - y).norm() <= 1e-15));
        prop_assert!(bs.v().symmetry_defect() == 0.0);
    }

    #[test]
    fn real_split_reconstructs(seed in any::<u64>(), n in 2usize..7) {
        let psi = haar_pure(&mut rng_for(seed, 2), n);
        let s = real_split(&psi);
        let back = s.reconstruct();
        prop_assert!(back.iter().zip(&psi).all(|(x, y)| (x - y).norm() <= 1e-12));
        prop_assert!((0.0..=std::f64::consts::FRAC_PI_4 + 1e-12).contains(&s.theta));
        prop_assert!(s.x.iter().zip(&s.y).map(|(a, b)| a * b).sum::<f64>().abs() <= 1e-12);
        // |psi^T psi| = cos 2 theta
        prop_assert!((dot(&psi, &psi).norm() - (2.0 * s.theta).cos()).abs() <= 1e-12);
    }
}
