//! Dense complex linear algebra for the small matrices (at most 36x36) the
//! rest of the crate works with: Kronecker products, partial traces, the
//! Hermitian eigenproblem, SVD, Takagi factorization and the 4x4 Pfaffian.

mod eigen;
mod matrix;
mod ops;
mod pfaffian;
mod svd;

pub use eigen::{
    classify_min_eigenvalue, eig_hermitian, eig_hermitian_with_tol, hermitian_sqrt,
    is_positive_definite, Definiteness, SpectralData,
};
pub(crate) use eigen::not_psd;
pub use matrix::{conj_vec, distance, dot, inner, kron_vec, norm, normalized, ComplexMatrix};
pub use ops::{complete_basis, det, kron, next_orthonormal, partial_trace, qr, Subsystem};
pub use pfaffian::{pfaffian4, pfaffian4_with_tol};
pub use svd::{svd, takagi, takagi_with_tol, Svd, Takagi};

#[cfg(test)]
mod tests;
