//! Shifted Jacobi polynomials on [0,1].
//!
//! The family used throughout is P_n^{(γ,α)}(2x-1), orthogonal with respect
//! to x^α (1-x)^γ on [0,1]. Evaluation goes through the forward three-term
//! recurrence in the shifted variable, which is stable at the degrees this
//! crate works at.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{binom_shifted, jacobi_weight_normalizer, Scalar};

/// Exponents of the weight w(x) = x^alpha (1-x)^gamma on [0,1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams<F> {
    pub alpha: F,
    pub gamma: F,
}

impl<F: Scalar> JacobiParams<F> {
    pub fn new(alpha: F, gamma: F) -> Result<Self> {
        if alpha <= -F::one() || gamma <= -F::one() {
            return Err(Error::InvalidParam(format!(
                "Jacobi exponents must exceed -1, got alpha = {alpha}, gamma = {gamma}"
            )));
        }
        Ok(Self { alpha, gamma })
    }

    /// Constant c making c * x^alpha (1-x)^gamma a probability weight.
    pub fn normalizer(&self) -> F {
        jacobi_weight_normalizer(self.alpha, self.gamma)
    }

    /// Weight value x^alpha (1-x)^gamma without normalization.
    pub fn weight(&self, x: F) -> F {
        x.powf(self.alpha) * (F::one() - x).powf(self.gamma)
    }
}

/// Coefficients of p_{k+1}(x) = (a_k x + b_k) p_k(x) + c_k p_{k-1}(x)
/// for the shifted family; `c_0` is unused.
pub(crate) fn shifted_recurrence_step<F: Scalar>(p: &JacobiParams<F>, k: usize) -> (F, F, F) {
    let (a, b) = (p.gamma, p.alpha); // classical (a,b) with (1-t)^a (1+t)^b
    let one = F::one();
    let two = F::of(2.0);
    if k == 0 {
        // P_1^{(γ,α)}(2x-1) = (γ+α+2) x - (α+1)
        return (a + b + two, -(b + one), F::zero());
    }
    let kf = F::of_usize(k);
    let s = two * kf + a + b; // 2k+a+b > 0 for k >= 1
    let denom = two * (kf + one) * (kf + a + b + one) * s;
    let a_coef = (s + one) * (s + two) * s * two / denom;
    let b_coef = (s + one) * (a * a - b * b - (s + two) * s) / denom;
    let c_coef = -two * (kf + a) * (kf + b) * (s + two) / denom;
    (a_coef, b_coef, c_coef)
}

/// Evaluate P_n^{(γ,α)}(2x-1) by forward recurrence.
pub fn eval_jacobi_shifted<F: Scalar>(n: usize, p: &JacobiParams<F>, x: F) -> F {
    let mut prev = F::zero();
    let mut cur = F::one();
    for k in 0..n {
        let (a, b, c) = shifted_recurrence_step(p, k);
        let next = (a * x + b) * cur + c * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Run the recurrence once, handing each (degree, value) pair to `sink`.
pub fn eval_jacobi_shifted_all<F: Scalar>(
    n: usize,
    p: &JacobiParams<F>,
    x: F,
    mut sink: impl FnMut(usize, F),
) {
    let mut prev = F::zero();
    let mut cur = F::one();
    sink(0, cur);
    for k in 0..n {
        let (a, b, c) = shifted_recurrence_step(p, k);
        let next = (a * x + b) * cur + c * prev;
        prev = cur;
        cur = next;
        sink(k + 1, cur);
    }
}

/// Value at the right endpoint: P_n^{(γ,α)}(1) = binom(n+γ, n).
pub fn jacobi_shifted_at_one<F: Scalar>(n: usize, p: &JacobiParams<F>) -> F {
    binom_shifted(p.gamma, n)
}

/// Squared norm of P_n^{(γ,α)}(2x-1) against the normalized weight:
/// (γ+1)_n (α+1)_n (n+γ+α+1) / [n! (γ+α+2)_n (2n+γ+α+1)].
pub fn jacobi_norm_h<F: Scalar>(n: usize, p: &JacobiParams<F>) -> F {
    let (al, ga) = (p.alpha, p.gamma);
    let one = F::one();
    let two = F::of(2.0);
    // interleaved product keeps intermediate factors O(1) at large n
    let mut h = F::one();
    for k in 0..n {
        let kf = F::of_usize(k);
        h = h * (ga + one + kf) * (al + one + kf) / ((ga + al + two + kf) * (one + kf));
    }
    let nf = F::of_usize(n);
    h * (nf + ga + al + one) / (two * nf + ga + al + one)
}

/// Monomial coefficients of P_n^{(γ,α)}(2x-1) in x (index = power).
///
/// Only intended for modest degrees where the monomial form is well
/// conditioned; the separated-representation checks use it.
pub fn shifted_jacobi_coeffs<F: Scalar>(n: usize, p: &JacobiParams<F>) -> Vec<F> {
    let mut prev = vec![F::zero(); n + 1];
    let mut cur = vec![F::zero(); n + 1];
    cur[0] = F::one();
    for k in 0..n {
        let (a, b, c) = shifted_recurrence_step(p, k);
        let mut next = vec![F::zero(); n + 1];
        for j in 0..=k {
            next[j + 1] += a * cur[j];
            next[j] += b * cur[j];
            if k >= 1 {
                // prev[j] vanishes for j >= k, so the full range is safe
                next[j] += c * prev[j];
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
