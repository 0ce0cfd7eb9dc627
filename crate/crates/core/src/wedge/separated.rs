//! Separated coefficient representation of wedge basis elements.
//!
//! Every element constructed in this crate has the form u(x) + v(y), so its
//! mixed partial ∂x∂y vanishes identically; storing the two coefficient
//! vectors makes that exact and keeps segment restrictions exact as well.

use crate::scalar::{binom_shifted, pochhammer, Scalar};
use crate::univariate::{shifted_jacobi_coeffs, JacobiParams};
use crate::wedge::{EqualWeightBasis, JacobiWedgeBasis};

/// f(x,y) = ux(x) + vy(y), with the whole constant carried by `ux`
/// (`vy[0]` is always zero).
#[derive(Debug, Clone)]
pub struct SeparatedPoly<F> {
    pub ux: Vec<F>,
    pub vy: Vec<F>,
}

fn horner<F: Scalar>(c: &[F], x: F) -> F {
    c.iter().rev().fold(F::zero(), |acc, &ck| acc * x + ck)
}

fn mul_one_minus_x<F: Scalar>(c: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); c.len() + 1];
    for (j, &cj) in c.iter().enumerate() {
        out[j] += cj;
        out[j + 1] -= cj;
    }
    out
}

impl<F: Scalar> SeparatedPoly<F> {
    fn assemble(mut ux: Vec<F>, mut vy: Vec<F>) -> Self {
        if !vy.is_empty() {
            if ux.is_empty() {
                ux.push(F::zero());
            }
            ux[0] += vy[0];
            vy[0] = F::zero();
        }
        Self { ux, vy }
    }

    pub fn eval(&self, x: F, y: F) -> F {
        horner(&self.ux, x) + horner(&self.vy, y)
    }

    pub fn degree(&self) -> usize {
        self.ux.len().max(self.vy.len()).saturating_sub(1)
    }

    /// Coefficients of the top restriction f(x, 1) in x.
    pub fn top_coeffs(&self) -> Vec<F> {
        let mut c = self.ux.clone();
        if c.is_empty() {
            c.push(F::zero());
        }
        c[0] += horner(&self.vy, F::one());
        c
    }

    /// Coefficients of the right restriction f(1, y) in y.
    pub fn right_coeffs(&self) -> Vec<F> {
        let mut c = self.vy.clone();
        if c.is_empty() {
            c.push(F::zero());
        }
        c[0] += horner(&self.ux, F::one());
        c
    }

    /// In-place linear combination self += c * other.
    pub fn axpy(&mut self, c: F, other: &Self) {
        if self.ux.len() < other.ux.len() {
            self.ux.resize(other.ux.len(), F::zero());
        }
        if self.vy.len() < other.vy.len() {
            self.vy.resize(other.vy.len(), F::zero());
        }
        for (a, &b) in self.ux.iter_mut().zip(&other.ux) {
            *a += c * b;
        }
        for (a, &b) in self.vy.iter_mut().zip(&other.vy) {
            *a += c * b;
        }
    }

    pub fn from_p_equal(basis: &EqualWeightBasis<F>, n: usize) -> Self {
        let c = basis.family_w().monomial_coeffs(n);
        let p_at_one = horner(&c, F::one());
        let mut ux = c.clone();
        ux[0] -= p_at_one;
        Self::assemble(ux, c)
    }

    pub fn from_q_equal(basis: &EqualWeightBasis<F>, n: usize) -> Self {
        assert!(n >= 1);
        let q = basis.family_phi().monomial_coeffs(n - 1);
        let a = mul_one_minus_x(&q);
        let neg: Vec<F> = a.iter().map(|&v| -v).collect();
        Self::assemble(a, neg)
    }

    pub fn from_p_jacobi(basis: &JacobiWedgeBasis<F>, n: usize) -> Self {
        if n == 0 {
            return Self {
                ux: vec![F::one()],
                vy: vec![F::zero()],
            };
        }
        let top = shifted_jacobi_coeffs(
            n,
            &JacobiParams {
                alpha: basis.alpha,
                gamma: basis.gamma,
            },
        );
        let right = shifted_jacobi_coeffs(
            n,
            &JacobiParams {
                alpha: basis.beta,
                gamma: basis.gamma,
            },
        );
        let mut ux = top;
        ux[0] -= binom_shifted(basis.gamma, n);
        Self::assemble(ux, right)
    }

    pub fn from_q_jacobi(basis: &JacobiWedgeBasis<F>, n: usize) -> Self {
        assert!(n >= 1);
        let one = F::one();
        let two = F::of(2.0);
        let pa = pochhammer(basis.gamma + basis.alpha + two, n)
            / pochhammer(basis.alpha + one, n - 1);
        let pb = pochhammer(basis.gamma + basis.beta + two, n)
            / pochhammer(basis.beta + one, n - 1);
        let top = shifted_jacobi_coeffs(
            n - 1,
            &JacobiParams {
                alpha: basis.alpha,
                gamma: basis.gamma + two,
            },
        );
        let right = shifted_jacobi_coeffs(
            n - 1,
            &JacobiParams {
                alpha: basis.beta,
                gamma: basis.gamma + two,
            },
        );
        let ux: Vec<F> = mul_one_minus_x(&top).iter().map(|&v| pa * v).collect();
        let vy: Vec<F> = mul_one_minus_x(&right)
            .iter()
            .map(|&v| -pb / basis.sigma * v)
            .collect();
        Self::assemble(ux, vy)
    }

    /// The prefactor-free antisymmetric Q (alpha = beta).
    pub fn from_q_sym_jacobi(basis: &JacobiWedgeBasis<F>, n: usize) -> Self {
        assert!(n >= 1);
        debug_assert!(basis.symmetric());
        let top = shifted_jacobi_coeffs(
            n - 1,
            &JacobiParams {
                alpha: basis.alpha,
                gamma: basis.gamma + F::of(2.0),
            },
        );
        let ux = mul_one_minus_x(&top);
        let vy: Vec<F> = ux.iter().map(|&v| -v).collect();
        Self::assemble(ux, vy)
    }

    pub fn from_r_jacobi(basis: &JacobiWedgeBasis<F>, n: usize) -> Self {
        let mut q = Self::from_q_jacobi(basis, n);
        let c = basis.cross(n) / basis.norm_p(n);
        let p = Self::from_p_jacobi(basis, n);
        q.axpy(-c, &p);
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::univariate::WeightSpec;

    fn coeff_scale(p: &SeparatedPoly<f64>) -> f64 {
        // conditioning bound of the monomial form on [0,1]
        p.ux.iter().chain(&p.vy).map(|c| c.abs()).sum::<f64>().max(1.0)
    }

    #[test]
    fn jacobi_representation_matches_recurrence_evaluation() {
        let b = JacobiWedgeBasis::new(0.3f64, 1.1, 0.5, 1.4).unwrap();
        let pts = [(0.1, 1.0), (0.67, 1.0), (1.0, 0.41), (1.0, 1.0)];
        for n in 0..=12usize {
            let rep = SeparatedPoly::from_p_jacobi(&b, n);
            for &(x, y) in &pts {
                let got = rep.eval(x, y);
                let want = b.eval_p(n, x, y);
                assert!(
                    (got - want).abs() < 1e-13 * coeff_scale(&rep),
                    "P n={n}: {got} vs {want}"
                );
            }
            if n >= 1 {
                let rep_q = SeparatedPoly::from_q_jacobi(&b, n);
                let rep_r = SeparatedPoly::from_r_jacobi(&b, n);
                for &(x, y) in &pts {
                    let tol_q = 1e-13 * coeff_scale(&rep_q);
                    let tol_r = 1e-13 * coeff_scale(&rep_r);
                    assert!((rep_q.eval(x, y) - b.eval_q(n, x, y)).abs() < tol_q);
                    assert!((rep_r.eval(x, y) - b.eval_r(n, x, y)).abs() < tol_r);
                }
            }
        }
    }

    #[test]
    fn equal_weight_representation_and_restrictions() {
        let basis = EqualWeightBasis::new(
            WeightSpec::jacobi(crate::univariate::JacobiParams::new(0.0f64, 0.0).unwrap()),
            8,
        )
        .unwrap();
        for n in 1..=8usize {
            let p = SeparatedPoly::from_p_equal(&basis, n);
            let q = SeparatedPoly::from_q_equal(&basis, n);
            // restrictions are symmetric / antisymmetric across the corner
            let pt = p.top_coeffs();
            let pr = p.right_coeffs();
            let qt = q.top_coeffs();
            let qr = q.right_coeffs();
            for j in 0..pt.len() {
                assert!((pt[j] - pr[j]).abs() < 1e-10);
                assert!((qt[j] + qr[j]).abs() < 1e-10);
            }
            for &t in &[0.0, 0.3, 1.0] {
                assert!((p.eval(t, 1.0) - basis.eval_p(n, t, 1.0)).abs() < 1e-10);
                assert!((q.eval(1.0, t) - basis.eval_q(n, 1.0, t)).abs() < 1e-10);
            }
        }
    }
}
