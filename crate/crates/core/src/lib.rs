//! Generalized concurrences and classicality of low-dimensional quantum states.
//!
//! The crate is organised bottom-up:
//!
//! - [`matkernel`]: dense complex linear algebra (eigen, SVD, Takagi, Pfaffian).
//! - [`croof`]: the model-independent concurrence engine. Bilinear operators
//!   built from antiunitary conjugations, pure and mixed concurrences, and
//!   explicit optimal decompositions.
//! - [`models`]: two qubits, two spin-3/2 fermions, two two-mode bosons and
//!   spin 1, with their encodings and symmetry groups.
//! - [`spin1`]: spin-1 coherence tests, the trace and `Z`-matrix classicality
//!   criteria, and the four-state coherent decomposition.
//! - [`ensemble`]: seeded random states and a brute-force convex-roof oracle.
//!
//! The kernel and the engine are generic over [`Real`]; the aliases below fix
//! `f64`, which is what the models and all tolerances assume.

pub mod croof;
pub mod ensemble;
pub mod error;
pub mod matkernel;
pub mod models;
pub mod scalar;
pub mod spin1;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision complex scalar.
pub type C64 = num_complex::Complex<f64>;
/// Double-precision complex matrix.
pub type CMatrix = matkernel::ComplexMatrix<f64>;
pub type Spectral = matkernel::SpectralData<f64>;
pub type Density = croof::DensityMatrix<f64>;
pub type Conj = croof::Conjugation<f64>;
pub type Bilinear = croof::BilinearOperator<f64>;
pub type Decomp = croof::Decomposition<f64>;
