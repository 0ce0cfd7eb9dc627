//! The two orthogonal families on the wedge.
//!
//! For one weight on both segments the pair is
//!   P_n(x,y) = p_n(w;x) + p_n(w;y) - p_n(w;1),
//!   Q_n(x,y) = (1-x) p_{n-1}(φw;x) - (1-y) p_{n-1}(φw;y),  φw = (1-x)^2 w.
//! For Jacobi weights x^α(1-x)^γ / y^β(1-y)^γ with factor σ there is an
//! explicit pair (P_n, Q_n) whose cross inner product has a closed form,
//! and R_n orthogonalizes Q_n against P_n when α ≠ β.

use crate::error::{Error, Result};
use crate::scalar::{binom_shifted, pochhammer, Scalar};
use crate::univariate::{
    eval_jacobi_shifted, jacobi_norm_h, JacobiParams, OrthoPoly1D, WeightKind, WeightSpec,
};
use crate::wedge::{WedgePoint, WedgeWeights};

/// Evaluation interface shared by both basis constructions; `second` is the
/// family used opposite P in expansions (Q for equal weights, R or the
/// symmetric Q for Jacobi weights).
pub trait WedgeBasisEval<F: Scalar> {
    fn p(&self, n: usize, x: F, y: F) -> F;
    fn second(&self, n: usize, x: F, y: F) -> F;
    fn norm_p(&self, n: usize) -> F;
    fn norm_second(&self, n: usize) -> F;
    fn norm_const(&self) -> F;
    fn weights(&self) -> WedgeWeights<F>;

    fn p_at(&self, n: usize, pt: &WedgePoint<F>) -> F {
        let (x, y) = pt.xy();
        self.p(n, x, y)
    }

    fn second_at(&self, n: usize, pt: &WedgePoint<F>) -> F {
        let (x, y) = pt.xy();
        self.second(n, x, y)
    }
}

/// Basis for a single weight w on both segments (sigma = 1).
#[derive(Debug, Clone)]
pub struct EqualWeightBasis<F> {
    op_w: OrthoPoly1D<F>,
    op_phi: OrthoPoly1D<F>,
}

impl<F: Scalar> EqualWeightBasis<F> {
    pub fn new(w: WeightSpec<F>, n_max: usize) -> Result<Self> {
        let phi = w.phi();
        let (op_w, op_phi) = match w.kind {
            WeightKind::Jacobi(_) => (
                OrthoPoly1D::jacobi(w, n_max)?,
                OrthoPoly1D::jacobi(phi, n_max.max(1) - 1)?,
            ),
            WeightKind::General(_) => (
                OrthoPoly1D::stieltjes_default(w, n_max)?,
                OrthoPoly1D::stieltjes_default(phi, n_max.max(1) - 1)?,
            ),
        };
        Ok(Self { op_w, op_phi })
    }

    pub fn max_degree(&self) -> usize {
        self.op_w.max_degree()
    }

    pub fn family_w(&self) -> &OrthoPoly1D<F> {
        &self.op_w
    }

    pub fn family_phi(&self) -> &OrthoPoly1D<F> {
        &self.op_phi
    }

    pub fn eval_p(&self, n: usize, x: F, y: F) -> F {
        self.op_w.eval(n, x) + self.op_w.eval(n, y) - self.op_w.eval(n, F::one())
    }

    /// Q_n, defined for n >= 1; antisymmetric across the corner.
    pub fn eval_q(&self, n: usize, x: F, y: F) -> F {
        assert!(n >= 1, "Q_n starts at degree 1");
        (F::one() - x) * self.op_phi.eval(n - 1, x) - (F::one() - y) * self.op_phi.eval(n - 1, y)
    }

    /// <P_n, P_n> = 2 h_n(w).
    pub fn norm_p(&self, n: usize) -> F {
        F::of(2.0) * self.op_w.norm(n)
    }

    /// <Q_n, Q_n> = 2 h_{n-1}(φw).
    pub fn norm_q(&self, n: usize) -> F {
        assert!(n >= 1);
        F::of(2.0) * self.op_phi.norm(n - 1)
    }
}

impl<F: Scalar> WedgeBasisEval<F> for EqualWeightBasis<F> {
    fn p(&self, n: usize, x: F, y: F) -> F {
        self.eval_p(n, x, y)
    }
    fn second(&self, n: usize, x: F, y: F) -> F {
        self.eval_q(n, x, y)
    }
    fn norm_p(&self, n: usize) -> F {
        self.norm_p(n)
    }
    fn norm_second(&self, n: usize) -> F {
        self.norm_q(n)
    }
    fn norm_const(&self) -> F {
        F::of(2.0) * self.op_w.norm(0)
    }
    fn weights(&self) -> WedgeWeights<F> {
        WedgeWeights::equal(self.op_w.weight().clone())
    }
}

/// The I_{m,n}^{α,γ} integral: c_{α,γ} ∫ P_n^{(γ,α)}(2x-1) P_{m-1}^{(γ+2,α)}(2x-1) (1-x)^{γ+1} x^α dx.
pub fn integral_i<F: Scalar>(m: usize, n: usize, alpha: F, gamma: F) -> F {
    assert!(m >= 1, "integral_i needs m >= 1");
    let one = F::one();
    let two = F::of(2.0);
    if n > m {
        return F::zero();
    }
    if n == m {
        let mf = F::of_usize(m);
        // -m (γ+1)_m (α+1)_m / [m! (2m+γ+α+1) (γ+α+2)_m]
        let mut prod = F::one();
        for k in 0..m {
            let kf = F::of_usize(k);
            prod = prod * (gamma + one + kf) * (alpha + one + kf)
                / ((one + kf) * (gamma + alpha + two + kf));
        }
        return -mf * prod / (two * mf + gamma + alpha + one);
    }
    // n < m: (γ+1)(α+1)_{m-1}(γ+1)_n / [(γ+α+2)_m n!]
    (gamma + one) * pochhammer(alpha + one, m - 1) * pochhammer(gamma + one, n)
        / (pochhammer(gamma + alpha + two, m) * pochhammer(one, n))
}

/// Closed form of <P_n, Q_n>_{α,β,γ}; independent of sigma.
pub fn cross_ipd_pq<F: Scalar>(alpha: F, beta: F, gamma: F, n: usize) -> F {
    assert!(n >= 1);
    let one = F::one();
    let two = F::of(2.0);
    let nf = F::of_usize(n);
    (beta - alpha) * pochhammer(gamma + one, n + 1)
        / ((two * nf + gamma + alpha + one)
            * (two * nf + gamma + beta + one)
            * pochhammer(one, n - 1))
}

/// Jacobi-weight basis on the wedge for parameters (α, β, γ) and σ.
#[derive(Debug, Clone, Copy)]
pub struct JacobiWedgeBasis<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub sigma: F,
}

impl<F: Scalar> JacobiWedgeBasis<F> {
    pub fn new(alpha: F, beta: F, gamma: F, sigma: F) -> Result<Self> {
        let neg_one = -F::one();
        if alpha <= neg_one || beta <= neg_one || gamma <= neg_one {
            return Err(Error::InvalidParam(
                "Jacobi exponents must exceed -1".into(),
            ));
        }
        if sigma <= F::zero() {
            return Err(Error::InvalidParam("sigma must be positive".into()));
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            sigma,
        })
    }

    pub fn symmetric(&self) -> bool {
        self.alpha == self.beta
    }

    fn top_params(&self) -> JacobiParams<F> {
        JacobiParams {
            alpha: self.alpha,
            gamma: self.gamma,
        }
    }

    fn right_params(&self) -> JacobiParams<F> {
        JacobiParams {
            alpha: self.beta,
            gamma: self.gamma,
        }
    }

    /// P_n(x,y) = P_n^{(γ,α)}(2x-1) + P_n^{(γ,β)}(2y-1) - binom(n+γ, n).
    pub fn eval_p(&self, n: usize, x: F, y: F) -> F {
        if n == 0 {
            return F::one();
        }
        eval_jacobi_shifted(n, &self.top_params(), x)
            + eval_jacobi_shifted(n, &self.right_params(), y)
            - binom_shifted(self.gamma, n)
    }

    fn q_prefactors(&self, n: usize) -> (F, F) {
        let one = F::one();
        let two = F::of(2.0);
        let pa = pochhammer(self.gamma + self.alpha + two, n) / pochhammer(self.alpha + one, n - 1);
        let pb = pochhammer(self.gamma + self.beta + two, n) / pochhammer(self.beta + one, n - 1);
        (pa, pb)
    }

    /// Q_n with the explicit prefactors and the σ^{-1} factor on the
    /// right-segment term; defined for n >= 1.
    pub fn eval_q(&self, n: usize, x: F, y: F) -> F {
        assert!(n >= 1, "Q_n starts at degree 1");
        let one = F::one();
        let two = F::of(2.0);
        let (pa, pb) = self.q_prefactors(n);
        let qa = JacobiParams {
            alpha: self.alpha,
            gamma: self.gamma + two,
        };
        let qb = JacobiParams {
            alpha: self.beta,
            gamma: self.gamma + two,
        };
        pa * (one - x) * eval_jacobi_shifted(n - 1, &qa, x)
            - pb / self.sigma * (one - y) * eval_jacobi_shifted(n - 1, &qb, y)
    }

    /// The plain antisymmetric normalization (no prefactors); requires α = β.
    pub fn eval_q_sym(&self, n: usize, x: F, y: F) -> F {
        assert!(n >= 1);
        debug_assert!(self.symmetric(), "symmetric Q needs alpha = beta");
        let one = F::one();
        let qa = JacobiParams {
            alpha: self.alpha,
            gamma: self.gamma + F::of(2.0),
        };
        (one - x) * eval_jacobi_shifted(n - 1, &qa, x)
            - (one - y) * eval_jacobi_shifted(n - 1, &qa, y)
    }

    /// R_n = Q_n - (<P_n,Q_n> / <P_n,P_n>) P_n, orthogonal to P_n.
    pub fn eval_r(&self, n: usize, x: F, y: F) -> F {
        let c = self.cross(n) / self.norm_p(n);
        self.eval_q(n, x, y) - c * self.eval_p(n, x, y)
    }

    /// <P_n, P_n> = h_n^{α,γ} + σ h_n^{β,γ}.
    pub fn norm_p(&self, n: usize) -> F {
        if n == 0 {
            return self.norm_const();
        }
        jacobi_norm_h(n, &self.top_params()) + self.sigma * jacobi_norm_h(n, &self.right_params())
    }

    /// <1, 1> = 1 + σ.
    pub fn norm_const(&self) -> F {
        F::one() + self.sigma
    }

    /// <Q_n, Q_n> in closed form.
    pub fn norm_q(&self, n: usize) -> F {
        assert!(n >= 1);
        let one = F::one();
        let two = F::of(2.0);
        let g2 = pochhammer(self.gamma + one, 2);
        let term = |e: F| -> F {
            let num = g2 * pochhammer(e + self.gamma + two, n).powi(2);
            let den = pochhammer(e + self.gamma + two, 2) * pochhammer(e + one, n - 1).powi(2);
            let h = jacobi_norm_h(
                n - 1,
                &JacobiParams {
                    alpha: e,
                    gamma: self.gamma + two,
                },
            );
            num / den * h
        };
        term(self.alpha) + term(self.beta) / self.sigma
    }

    /// <Q_n^sym, Q_n^sym> for the prefactor-free normalization (α = β).
    pub fn norm_q_sym(&self, n: usize) -> F {
        assert!(n >= 1);
        debug_assert!(self.symmetric());
        let one = F::one();
        let two = F::of(2.0);
        let h = jacobi_norm_h(
            n - 1,
            &JacobiParams {
                alpha: self.alpha,
                gamma: self.gamma + two,
            },
        );
        let ratio = pochhammer(self.gamma + one, 2) / pochhammer(self.gamma + self.alpha + two, 2);
        (one + self.sigma) * ratio * h
    }

    /// <P_n, Q_n> closed form.
    pub fn cross(&self, n: usize) -> F {
        cross_ipd_pq(self.alpha, self.beta, self.gamma, n)
    }

    /// <R_n, R_n> = <Q_n,Q_n> - <P_n,Q_n>^2 / <P_n,P_n>.
    pub fn norm_r(&self, n: usize) -> F {
        let c = self.cross(n);
        self.norm_q(n) - c * c / self.norm_p(n)
    }

    /// The second expansion family: R_n when α ≠ β, the symmetric Q_n
    /// otherwise.
    pub fn eval_second(&self, n: usize, x: F, y: F) -> F {
        if self.symmetric() {
            self.eval_q_sym(n, x, y)
        } else {
            self.eval_r(n, x, y)
        }
    }

    pub fn norm_second(&self, n: usize) -> F {
        if self.symmetric() {
            self.norm_q_sym(n)
        } else {
            self.norm_r(n)
        }
    }
}

impl<F: Scalar> WedgeBasisEval<F> for JacobiWedgeBasis<F> {
    fn p(&self, n: usize, x: F, y: F) -> F {
        self.eval_p(n, x, y)
    }
    fn second(&self, n: usize, x: F, y: F) -> F {
        self.eval_second(n, x, y)
    }
    fn norm_p(&self, n: usize) -> F {
        self.norm_p(n)
    }
    fn norm_second(&self, n: usize) -> F {
        self.norm_second(n)
    }
    fn norm_const(&self) -> F {
        self.norm_const()
    }
    fn weights(&self) -> WedgeWeights<F> {
        WedgeWeights::jacobi(self.alpha, self.beta, self.gamma, self.sigma)
            .expect("params validated at construction")
    }
}
