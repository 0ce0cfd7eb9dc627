//! Univariate building blocks: shifted Jacobi polynomials, Gauss and
//! Clenshaw--Curtis rules, and orthogonal families for arbitrary weights.

mod jacobi;
mod ortho1d;
mod quadrature;

pub use jacobi::{
    eval_jacobi_shifted, eval_jacobi_shifted_all, jacobi_norm_h, jacobi_shifted_at_one,
    shifted_jacobi_coeffs, JacobiParams,
};
pub use ortho1d::{
    gauss_rule, kernel_1d, partial_sum_1d, stieltjes_procedure, OrthoPoly1D, QuadConvergence,
    WeightKind, WeightSpec,
};
pub use quadrature::{
    adaptive_gauss, clenshaw_curtis, gauss_jacobi_raw, NormedValue, QuadratureRule,
};
