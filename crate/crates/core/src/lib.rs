//! Orthogonal polynomial systems on a planar wedge, on the boundary of a
//! square, and inside the square, together with the machinery built on top
//! of them: Fourier orthogonal expansions and convergence diagnostics,
//! block-tridiagonal Jacobi operators, Cauchy/Stieltjes transform evaluation
//! by boundary-value recurrence solves, and determinantal point process
//! sampling with gap statistics.
//!
//! The polynomial core is generic over the scalar type via [`scalar::Scalar`]
//! (any IEEE float). The solver and sampling layers, and the type aliases
//! below, are pinned to `f64`.

pub mod error;
pub mod interior;
pub mod operators;
pub mod scalar;
pub mod stieltjes;
pub mod boundary;
pub mod univariate;
pub mod wedge;

pub use error::{Error, Result};

/// Concrete scalar used by the solver and sampling layers.
pub type Real = f64;

/// `f64` instantiations of the core generic types.
pub type JacobiParams64 = univariate::JacobiParams<Real>;
pub type WeightSpec64 = univariate::WeightSpec<Real>;
pub type OrthoPoly64 = univariate::OrthoPoly1D<Real>;
pub type QuadratureRule64 = univariate::QuadratureRule<Real>;
