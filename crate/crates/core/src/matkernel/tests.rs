use num_complex::Complex;
use proptest::prelude::*;

use super::*;
use crate::ensemble::random::{gaussian_matrix, gaussian_vector, haar_unitary, rng_for};
use crate::error::Error;
use crate::{CMatrix, C64};

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

fn random_hermitian(seed: u64, n: usize) -> CMatrix {
    let g = gaussian_matrix(&mut rng_for(seed, 0), n, n);
    (&g + &g.adjoint()).scale_real(0.5)
}

fn random_symmetric(seed: u64, n: usize) -> CMatrix {
    let g = gaussian_matrix(&mut rng_for(seed, 1), n, n);
    (&g + &g.transpose()).scale_real(0.5)
}

fn random_antisymmetric(seed: u64, n: usize) -> CMatrix {
    let g = gaussian_matrix(&mut rng_for(seed, 2), n, n);
    (&g - &g.transpose()).scale_real(0.5)
}

fn sigma_y() -> CMatrix {
    CMatrix::from_complex_rows(&[&[(0.0, 0.0), (0.0, -1.0)], &[(0.0, 1.0), (0.0, 0.0)]])
}

fn orthonormality_defect(v: &CMatrix) -> f64 {
    (&(&v.adjoint() * v) - &CMatrix::identity(v.cols())).max_abs()
}

#[test]
fn kron_of_identities_is_identity() {
    let k = kron(&CMatrix::identity(2), &CMatrix::identity(2));
    assert_eq!(k, CMatrix::identity(4));
}

#[test]
fn kron_sigma_y_is_signed_antidiagonal() {
    let k = kron(&sigma_y(), &sigma_y());
    let signs = [-1.0, 1.0, 1.0, -1.0];
    for i in 0..4 {
        for j in 0..4 {
            let want = if i + j == 3 { c(signs[i], 0.0) } else { c(0.0, 0.0) };
            assert!((k[(i, j)] - want).norm() < 1e-15);
        }
    }
}

#[test]
fn kron_acts_factorwise_on_product_vectors() {
    let mut rng = rng_for(11, 0);
    let a = gaussian_matrix(&mut rng, 2, 2);
    let b = gaussian_matrix(&mut rng, 2, 2);
    let x = gaussian_vector(&mut rng, 2);
    let y = gaussian_vector(&mut rng, 2);
    let lhs = kron(&a, &b).matvec(&kron_vec(&x, &y));
    let rhs = kron_vec(&a.matvec(&x), &b.matvec(&y));
    assert!(distance(&lhs, &rhs) < 1e-13);
}

#[test]
fn kron_rectangular_index_convention() {
    let a = CMatrix::from_fn(2, 3, |i, j| c((i * 3 + j) as f64, 0.0));
    let b = CMatrix::from_fn(3, 2, |i, j| c(0.0, (i * 2 + j) as f64));
    let k = kron(&a, &b);
    assert_eq!((k.rows(), k.cols()), (6, 6));
    for (i, kk, j, l) in [(1, 2, 2, 1), (0, 1, 1, 0)] {
        assert_eq!(k[(i * 3 + kk, j * 2 + l)], a[(i, j)] * b[(kk, l)]);
    }
}

#[test]
fn partial_trace_of_product_factorizes() {
    let mut rng = rng_for(12, 0);
    let x = gaussian_matrix(&mut rng, 2, 2);
    let y = gaussian_matrix(&mut rng, 3, 3);
    let xy = kron(&x, &y);
    let t2 = partial_trace(&xy, 2, 3, Subsystem::Second).unwrap();
    assert!((&t2 - &x.scale(y.trace())).max_abs() < 1e-13);
    let t1 = partial_trace(&xy, 2, 3, Subsystem::First).unwrap();
    assert!((&t1 - &y.scale(x.trace())).max_abs() < 1e-13);
}

#[test]
fn partial_trace_of_identity() {
    let t = partial_trace(&CMatrix::identity(4), 2, 2, Subsystem::First).unwrap();
    assert_eq!(t, CMatrix::identity(2).scale_real(2.0));
}

#[test]
fn partial_trace_rejects_bad_dimensions() {
    let r = partial_trace(&CMatrix::identity(4), 2, 3, Subsystem::First);
    assert!(matches!(r, Err(Error::DimensionMismatch(_))));
}

#[test]
fn eig_of_diagonal_sorts_descending() {
    let d = CMatrix::diag_real(&[1.0, 2.0, 3.0]);
    let sd = eig_hermitian(&d).unwrap();
    assert_eq!(sd.eigenvalues, vec![3.0, 2.0, 1.0]);
}

#[test]
fn eig_rejects_non_hermitian() {
    let m = CMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
    assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
}

#[test]
fn eig_keeps_equal_values_in_index_order() {
    let sd = eig_hermitian(&CMatrix::diag_real(&[2.0, 5.0, 2.0])).unwrap();
    assert_eq!(sd.eigenvalues, vec![5.0, 2.0, 2.0]);
    assert_eq!(sd.vector(1)[0], c(1.0, 0.0));
    assert_eq!(sd.vector(2)[2], c(1.0, 0.0));
}

#[test]
fn svd_of_diagonal() {
    let s = svd(&CMatrix::diag_real(&[3.0, 1.0]));
    assert!((s.sigma[0] - 3.0).abs() < 1e-15 && (s.sigma[1] - 1.0).abs() < 1e-15);
}

#[test]
fn svd_of_bell_coefficients() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let s = svd(&CMatrix::identity(2).scale_real(h));
    for x in s.sigma {
        assert!((x - h).abs() < 1e-15);
    }
}

#[test]
fn svd_matches_gram_spectrum() {
    let m = gaussian_matrix(&mut rng_for(13, 0), 3, 4);
    let s = svd(&m);
    // eigenvalues of M M^dagger (3x3) are the squared singular values
    let ev = eig_hermitian(&(&m * &m.adjoint())).unwrap().eigenvalues;
    for (sig, e) in s.sigma.iter().zip(&ev) {
        assert!((sig - e.max(0.0).sqrt()).abs() < 1e-12);
    }
    assert!((&s.reconstruct() - &m).max_abs() < 1e-12);
}

#[test]
fn takagi_of_identity_is_orthogonal() {
    let t = takagi(&CMatrix::identity(3)).unwrap();
    assert_eq!(t.mu.len(), 3);
    for m in &t.mu {
        assert!((m - 1.0).abs() < 1e-14);
    }
    assert!((&t.reconstruct() - &CMatrix::identity(3)).max_abs() < 1e-14);
    assert!(orthonormality_defect(&t.w) < 1e-14);
}

#[test]
fn takagi_of_swap() {
    let s = CMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let t = takagi(&s).unwrap();
    assert!((t.mu[0] - 1.0).abs() < 1e-14 && (t.mu[1] - 1.0).abs() < 1e-14);
    assert!((&t.reconstruct() - &s).max_abs() < 1e-14);
}

#[test]
fn takagi_rejects_non_symmetric() {
    let m = CMatrix::from_real_rows(&[&[0.0, 1.0], &[2.0, 0.0]]);
    assert!(matches!(takagi(&m), Err(Error::NotSymmetric(_))));
}

#[test]
fn takagi_of_rank_deficient_matrix() {
    let v = gaussian_vector(&mut rng_for(14, 0), 4);
    let s = CMatrix::from_fn(4, 4, |i, j| v[i] * v[j]);
    let t = takagi(&s).unwrap();
    assert!((t.mu[0] - norm(&v).powi(2)).abs() < 1e-12);
    assert!(t.mu[1..].iter().all(|&m| m < 1e-12));
    assert!((&t.reconstruct() - &s).max_abs() < 1e-12);
    assert!(orthonormality_defect(&t.w) < 1e-12);
}

#[test]
fn pfaffian_single_block() {
    let mut x = CMatrix::zeros(4, 4);
    x[(0, 1)] = c(1.0, 0.0);
    x[(1, 0)] = c(-1.0, 0.0);
    x[(2, 3)] = c(1.0, 0.0);
    x[(3, 2)] = c(-1.0, 0.0);
    assert_eq!(pfaffian4(&x).unwrap(), c(1.0, 0.0));
}

#[test]
fn pfaffian_of_zero() {
    assert_eq!(pfaffian4(&CMatrix::zeros(4, 4)).unwrap(), c(0.0, 0.0));
}

#[test]
fn pfaffian_rejects_bad_input() {
    assert!(matches!(pfaffian4(&CMatrix::identity(4)), Err(Error::NotAntisymmetric(_))));
    assert!(pfaffian4(&CMatrix::zeros(3, 3)).is_err());
}

#[test]
fn definiteness_bands() {
    let tol = 1e-9;
    assert_eq!(is_positive_definite(&CMatrix::identity(3), tol).unwrap(), Definiteness::Positive);
    assert_eq!(
        is_positive_definite(&CMatrix::diag_real(&[1.0, 0.0, -1.0]), tol).unwrap(),
        Definiteness::NotPositive
    );
    assert_eq!(
        is_positive_definite(&CMatrix::diag_real(&[1.0, 1.0, 5e-10]), tol).unwrap(),
        Definiteness::Boundary
    );
}

#[test]
fn determinant_of_unitary_has_unit_modulus() {
    let u = haar_unitary(&mut rng_for(15, 0), 5);
    assert!((det(&u).unwrap().norm() - 1.0).abs() < 1e-12);
}

#[test]
fn qr_completes_dependent_columns() {
    let v = gaussian_vector(&mut rng_for(16, 0), 4);
    let m = CMatrix::from_columns(&[v.clone(), v.iter().map(|z| z * 2.0).collect()]);
    let (q, r) = qr(&m);
    assert!(orthonormality_defect(&q) < 1e-13);
    assert!(r[(1, 1)].norm() == 0.0);
}

#[test]
fn kernel_is_generic_over_the_scalar() {
    let m: ComplexMatrix<f32> = ComplexMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]);
    let sd = eig_hermitian(&m).unwrap();
    assert!((sd.eigenvalues[0] - 3.0).abs() < 1e-5 && (sd.eigenvalues[1] - 1.0).abs() < 1e-5);
    let s = svd(&m);
    assert!((s.sigma[0] - 3.0).abs() < 1e-5);
    let t = takagi(&m).unwrap();
    assert!((&t.reconstruct() - &m).max_abs() < 1e-5);
}

const DIMS: [usize; 6] = [2, 3, 4, 6, 9, 16];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn eig_reconstructs(seed in any::<u64>(), d in 0usize..DIMS.len()) {
        let n = DIMS[d];
        let h = random_hermitian(seed, n);
        let sd = eig_hermitian(&h).unwrap();
        prop_assert!((&sd.reconstruct() - &h).frobenius_norm() <= 1e-10);
        prop_assert!(orthonormality_defect(&sd.eigenvectors) <= 1e-10);
        prop_assert!(sd.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn svd_reconstructs(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7) {
        let m = gaussian_matrix(&mut rng_for(seed, 3), rows, cols);
        let s = svd(&m);
        prop_assert!((&s.reconstruct() - &m).frobenius_norm() <= 1e-10);
        prop_assert!(orthonormality_defect(&s.u) <= 1e-10);
        prop_assert!(orthonormality_defect(&s.v) <= 1e-10);
        prop_assert!(s.sigma.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn takagi_reconstructs_and_matches_svd(seed in any::<u64>(), n in 1usize..9) {
        let s = random_symmetric(seed, n);
        let t = takagi(&s).unwrap();
        prop_assert!((&t.reconstruct() - &s).frobenius_norm() <= 1e-10);
        prop_assert!(orthonormality_defect(&t.w) <= 1e-10);
        let sv = svd(&s).sigma;
        for (a, b) in t.mu.iter().zip(&sv) {
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spectrum_is_unitarily_invariant(seed in any::<u64>(), d in 0usize..4) {
        let n = DIMS[d];
        let h = random_hermitian(seed, n);
        let u = haar_unitary(&mut rng_for(seed, 4), n);
        let a = eig_hermitian(&h).unwrap().eigenvalues;
        let b = eig_hermitian(&(&(&u * &h) * &u.adjoint()).hermitian_part()).unwrap().eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant(seed in any::<u64>()) {
        let x = random_antisymmetric(seed, 4);
        let pf = pfaffian4(&x).unwrap();
        prop_assert!((pf * pf - det(&x).unwrap()).norm() <= 1e-10);
    }

    #[test]
    fn pfaffian_transforms_with_determinant(seed in any::<u64>()) {
        let x = random_antisymmetric(seed, 4);
        let u = haar_unitary(&mut rng_for(seed, 5), 4);
        let y = &(&u * &x) * &u.transpose();
        let lhs = pfaffian4(&y).unwrap();
        let rhs = det(&u).unwrap() * pfaffian4(&x).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9);
    }
}
