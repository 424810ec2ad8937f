//! The model-independent concurrence engine.
//!
//! A pure-state concurrence is either given by an antiunitary conjugation
//! `Theta = T K` as `|<psi|T|psi*>|`, or by a positive operator `A` on the
//! doubled space as `<psi psi|A|psi psi>^{1/2}`; the two descriptions are
//! related through the Choi-Jamiolkowski correspondence and a Kraus
//! decomposition of the associated map. For symmetric `T` the convex roof over
//! mixed states has the closed form `max(0, mu_1 - sum_{j>1} mu_j)` and an
//! explicit optimal decomposition.

mod bilinear;
mod concurrence;
mod conjugation;
mod decomposition;
mod density;

pub use bilinear::{kraus_cutoff, kraus_from_bilinear, BilinearOperator};
pub use concurrence::{
    concurrence_gap, decomposition_objective, mixed_concurrence, mu_values, tau_matrices,
    TauMatrix,
};
pub use conjugation::{Conjugation, Symmetry};
pub use decomposition::{optimal_decomposition, sylvester_hadamard, Component, Decomposition};
pub use density::{rank_cutoff, DensityMatrix};
