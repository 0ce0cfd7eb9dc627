//! Scalar abstraction for the numerical core.
//!
//! Everything in the polynomial/quadrature layers is generic over [`Scalar`],
//! which any IEEE float provides (`f32`, `f64`). The crate root re-exports
//! `f64` aliases for the concrete types used by the solver and sampling
//! front ends.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the core math is written against.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Shorthand conversion from an `f64` literal.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal not representable in scalar type")
    }

    /// Shorthand conversion from a count.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Lanczos coefficients (g = 7, n = 9), accurate to ~15 digits in f64.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function, valid for positive arguments and
/// extended by reflection elsewhere (poles return infinity).
pub fn ln_gamma<F: Scalar>(x: F) -> F {
    let half = F::of(0.5);
    if x < half {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        let pi = F::of(std::f64::consts::PI);
        let s = (pi * x).sin();
        if s == F::zero() {
            return F::infinity();
        }
        return pi.ln() - s.abs().ln() - ln_gamma(F::one() - x);
    }
    let x = x - F::one();
    let g = F::of(7.0);
    let mut acc = F::of(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + F::of(c) / (x + F::of_usize(i));
    }
    let t = x + g + half;
    let ln_sqrt_2pi = F::of(0.918_938_533_204_672_74);
    ln_sqrt_2pi + (x + half) * t.ln() - t + acc.ln()
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); the empty product is 1.
pub fn pochhammer<F: Scalar>(a: F, n: usize) -> F {
    let mut prod = F::one();
    for k in 0..n {
        prod = prod * (a + F::of_usize(k));
    }
    prod
}

/// Generalized binomial coefficient binom(a + n, n) = (a+1)_n / n!.
pub fn binom_shifted<F: Scalar>(a: F, n: usize) -> F {
    let mut prod = F::one();
    for k in 0..n {
        prod = prod * (a + F::of_usize(k + 1)) / F::of_usize(k + 1);
    }
    prod
}

/// Normalization constant of the weight x^alpha (1-x)^gamma on [0,1]:
/// the reciprocal of its integral, Γ(γ+α+2) / (Γ(γ+1) Γ(α+1)).
pub fn jacobi_weight_normalizer<F: Scalar>(alpha: F, gamma: F) -> F {
    (ln_gamma(gamma + alpha + F::of(2.0)) - ln_gamma(gamma + F::one()) - ln_gamma(alpha + F::one()))
        .exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_matches_factorials() {
        for n in 1..10usize {
            let expect: f64 = (1..n).map(|k| (k as f64).ln()).sum();
            assert!((ln_gamma(n as f64) - expect).abs() < 1e-12);
        }
        // Γ(1/2) = sqrt(pi)
        assert!((ln_gamma(0.5f64) - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-13);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.0f64, 0), 1.0);
        assert_eq!(pochhammer(1.0f64, 3), 6.0);
        assert!((pochhammer(0.5f64, 2) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn normalizer_uniform_weight() {
        // alpha = gamma = 0 is the uniform weight on [0,1]
        assert!((jacobi_weight_normalizer(0.0f64, 0.0) - 1.0).abs() < 1e-13);
        // alpha = 1, gamma = 0: integral of x is 1/2
        assert!((jacobi_weight_normalizer(1.0f64, 0.0) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn generic_over_f32() {
        assert!((pochhammer(0.5f32, 2) - 0.75).abs() < 1e-6);
        assert!((jacobi_weight_normalizer(0.0f32, 0.0) - 1.0).abs() < 1e-5);
    }
}
