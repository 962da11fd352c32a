//! Exact computer algebra for Lie algebras with stable anti-Yetter–Drinfeld
//! (SAYD) coefficients.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] dense matrices, fraction-free rank, kernels and inverses;
//! * [`lie`] structure constants, validation, adjoint data, the modular
//!   character and the semidirect double `g* ⋊ g`;
//! * [`exterior`] exterior-algebra bases and the wedge / contraction /
//!   de Rham operators;
//! * [`sayd`] action and coaction matrices and the AYD / stability checks;
//! * [`complex`] Chevalley–Eilenberg and Koszul differentials, mixed and
//!   total complexes, cohomology dimensions;
//! * [`duality`] Poincaré transport between chain and cochain sides;
//! * [`weil`] truncated Weil coefficients and Weyl-algebra operators;
//! * [`enveloping`] PBW arithmetic in `U(g)`, the extended coaction and the
//!   Hopf-cyclic cocyclic module.
//!
//! All algorithms are generic over a [`Scalar`]. Exactness is only
//! guaranteed for exact fields; the crate-level aliases fix the scalar to
//! arbitrary-precision rationals, which is what every test and the CLI use.

pub mod complex;
pub mod duality;
pub mod enveloping;
pub mod error;
pub mod exterior;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod sayd;
pub mod scalar;
pub mod weil;

pub use error::{Error, Result};
pub use scalar::{Scalar, Q};

/// Rational Lie algebra.
pub type Lie = lie::LieAlgebra<Q>;
/// Rational dense matrix.
pub type QMatrix = linalg::Matrix<Q>;
/// Rational right action.
pub type Action = sayd::ActionMatrices<Q>;
/// Rational left coaction.
pub type Coaction = sayd::CoactionMatrices<Q>;
/// Rational SAYD candidate.
pub type Sayd = sayd::SaydModule<Q>;
/// Rational graded complex.
pub type Complex = complex::GradedComplex<Q>;
/// Rational PBW element.
pub type Pbw = enveloping::pbw::PbwElement<Q>;
/// Rational chain tensor in `V ⊗ U(g)^{⊗q}`.
pub type Chain = enveloping::chain::ChainTensor<Q>;
