//! Weights on [0,1] and families of univariate orthogonal polynomials.
//!
//! Jacobi weights get closed-form recurrences and norms; any other
//! nonnegative weight goes through the discretized Stieltjes procedure on a
//! high-order rule. Both paths expose the same evaluation, kernel and
//! partial-sum interface.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::univariate::jacobi::{
    jacobi_norm_h, shifted_recurrence_step, JacobiParams,
};
use crate::univariate::quadrature::{clenshaw_curtis, gauss_jacobi_raw, QuadratureRule};

/// Base shape of a weight on [0,1].
#[derive(Clone)]
pub enum WeightKind<F> {
    Jacobi(JacobiParams<F>),
    General(Arc<dyn Fn(F) -> F + Send + Sync>),
}

impl<F> std::fmt::Debug for WeightKind<F>
where
    F: std::fmt::Debug,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeightKind::Jacobi(p) => write!(f, "Jacobi({p:?})"),
            WeightKind::General(_) => write!(f, "General(..)"),
        }
    }
}

/// A weight function together with a multiplicative normalization constant.
///
/// The effective weight is `normalization * base(x)`.
#[derive(Debug, Clone)]
pub struct WeightSpec<F> {
    pub kind: WeightKind<F>,
    pub normalization: F,
}

impl<F: Scalar> WeightSpec<F> {
    /// Jacobi weight normalized to unit mass (the c_{α,γ} convention).
    pub fn jacobi(p: JacobiParams<F>) -> Self {
        let c = p.normalizer();
        Self {
            kind: WeightKind::Jacobi(p),
            normalization: c,
        }
    }

    /// Jacobi weight without the unit-mass constant.
    pub fn jacobi_raw(p: JacobiParams<F>) -> Self {
        Self {
            kind: WeightKind::Jacobi(p),
            normalization: F::one(),
        }
    }

    /// General nonnegative weight; the caller owns any normalization.
    pub fn general(f: impl Fn(F) -> F + Send + Sync + 'static) -> Self {
        Self {
            kind: WeightKind::General(Arc::new(f)),
            normalization: F::one(),
        }
    }

    /// Effective weight value at x.
    pub fn eval(&self, x: F) -> F {
        let base = match &self.kind {
            WeightKind::Jacobi(p) => p.weight(x),
            WeightKind::General(f) => f(x),
        };
        self.normalization * base
    }

    /// The derived weight (1-x)^2 w(x); keeps the same normalization constant.
    pub fn phi(&self) -> Self {
        match &self.kind {
            WeightKind::Jacobi(p) => Self {
                kind: WeightKind::Jacobi(JacobiParams {
                    alpha: p.alpha,
                    gamma: p.gamma + F::of(2.0),
                }),
                normalization: self.normalization,
            },
            WeightKind::General(f) => {
                let f = Arc::clone(f);
                Self {
                    kind: WeightKind::General(Arc::new(move |x: F| {
                        let r = F::one() - x;
                        r * r * f(x)
                    })),
                    normalization: self.normalization,
                }
            }
        }
    }

    /// Quadrature rule resolving this weight: Gauss--Jacobi for Jacobi kinds,
    /// a Clenshaw--Curtis rule carrying the weight values otherwise.
    pub fn rule(&self, order: usize) -> Result<QuadratureRule<F>> {
        match &self.kind {
            WeightKind::Jacobi(p) => {
                Ok(gauss_jacobi_raw(order.max(1), p)?.scaled(self.normalization))
            }
            WeightKind::General(f) => {
                let f = Arc::clone(f);
                let n = order.max(512);
                let base = clenshaw_curtis(n, F::zero(), F::one())?;
                let c = self.normalization;
                Ok(base.with_weight(move |x| c * f(x)))
            }
        }
    }

    /// Total mass of the effective weight.
    pub fn mass(&self) -> F {
        match &self.kind {
            WeightKind::Jacobi(p) => self.normalization / p.normalizer(),
            WeightKind::General(_) => self.rule(512).expect("rule").integrate(|_| F::one()),
        }
    }

    /// Structural equality good enough to detect "same weight on both
    /// segments" (general weights compare by function identity).
    pub fn same_as(&self, other: &Self) -> bool {
        if self.normalization != other.normalization {
            return false;
        }
        match (&self.kind, &other.kind) {
            (WeightKind::Jacobi(a), WeightKind::Jacobi(b)) => a == b,
            (WeightKind::General(a), WeightKind::General(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

/// Free-standing Gauss rule builder matching the weight spec.
pub fn gauss_rule<F: Scalar>(n: usize, w: &WeightSpec<F>) -> Result<QuadratureRule<F>> {
    w.rule(n)
}

/// An orthogonal family p_0..p_N for a weight, with recurrence and norms.
#[derive(Debug, Clone)]
pub struct OrthoPoly1D<F> {
    weight: WeightSpec<F>,
    /// step k: p_{k+1} = (A_k x + B_k) p_k + C_k p_{k-1}
    rec: Vec<(F, F, F)>,
    /// squared norms h_0..h_N against the effective weight
    norms: Vec<F>,
    rule: QuadratureRule<F>,
    monic: bool,
}

/// Diagnostic from a coefficient computation: whether a refined rule agreed.
#[derive(Debug, Clone, Copy)]
pub struct QuadConvergence<F> {
    pub converged: bool,
    pub max_deviation: F,
}

impl<F: Scalar> OrthoPoly1D<F> {
    /// Closed-form family for a Jacobi weight, in the shifted-Jacobi
    /// normalization P_n^{(γ,α)}(2x-1).
    pub fn jacobi(weight: WeightSpec<F>, n_max: usize) -> Result<Self> {
        let p = match &weight.kind {
            WeightKind::Jacobi(p) => *p,
            WeightKind::General(_) => {
                return Err(Error::InvalidParam(
                    "closed-form construction needs a Jacobi weight".into(),
                ))
            }
        };
        let rec: Vec<_> = (0..n_max).map(|k| shifted_recurrence_step(&p, k)).collect();
        let scale = weight.normalization / p.normalizer();
        let norms: Vec<F> = (0..=n_max).map(|n| scale * jacobi_norm_h(n, &p)).collect();
        let rule = weight.rule(4 * (n_max + 1))?;
        Ok(Self {
            weight,
            rec,
            norms,
            rule,
            monic: false,
        })
    }

    /// Discretized Stieltjes procedure: monic orthogonal polynomials whose
    /// recurrence coefficients come from inner products on `rule`.
    pub fn stieltjes(weight: WeightSpec<F>, n_max: usize, rule: QuadratureRule<F>) -> Result<Self> {
        let m = rule.len();
        let mut p_prev = vec![F::zero(); m];
        let mut p_cur = vec![F::one(); m];
        let mut rec = Vec::with_capacity(n_max);
        let mut norms = Vec::with_capacity(n_max + 1);
        let mut h_prev = F::zero();
        for k in 0..=n_max {
            let mut h = F::zero();
            let mut xa = F::zero();
            for i in 0..m {
                let wp = rule.weights[i] * p_cur[i] * p_cur[i];
                h += wp;
                xa += wp * rule.nodes[i];
            }
            if !(h > F::zero()) || !h.is_finite() {
                return Err(Error::NormBreakdown { degree: k });
            }
            norms.push(h);
            if k == n_max {
                break;
            }
            let a = xa / h;
            let b = if k == 0 { F::zero() } else { h / h_prev };
            rec.push((F::one(), -a, -b));
            for i in 0..m {
                let next = (rule.nodes[i] - a) * p_cur[i] - b * p_prev[i];
                p_prev[i] = p_cur[i];
                p_cur[i] = next;
            }
            h_prev = h;
        }
        Ok(Self {
            weight,
            rec,
            norms,
            rule,
            monic: true,
        })
    }

    /// Stieltjes procedure on the weight's default high-order rule.
    pub fn stieltjes_default(weight: WeightSpec<F>, n_max: usize) -> Result<Self> {
        let rule = weight.rule(4 * (n_max + 1))?;
        Self::stieltjes(weight, n_max, rule)
    }

    pub fn weight(&self) -> &WeightSpec<F> {
        &self.weight
    }

    pub fn max_degree(&self) -> usize {
        self.norms.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.monic
    }

    pub fn norm(&self, n: usize) -> F {
        self.norms[n]
    }

    pub fn rule(&self) -> &QuadratureRule<F> {
        &self.rule
    }

    /// Evaluate p_n(x).
    pub fn eval(&self, n: usize, x: F) -> F {
        assert!(n <= self.max_degree(), "degree beyond construction");
        let mut prev = F::zero();
        let mut cur = F::one();
        for k in 0..n {
            let (a, b, c) = self.rec[k];
            let next = (a * x + b) * cur + c * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Evaluate p_0(x)..p_n(x) into a vector.
    pub fn eval_all(&self, n: usize, x: F) -> Vec<F> {
        assert!(n <= self.max_degree(), "degree beyond construction");
        let mut out = Vec::with_capacity(n + 1);
        let mut prev = F::zero();
        let mut cur = F::one();
        out.push(cur);
        for k in 0..n {
            let (a, b, c) = self.rec[k];
            let next = (a * x + b) * cur + c * prev;
            prev = cur;
            cur = next;
            out.push(cur);
        }
        out
    }

    /// Monomial coefficients of p_n (index = power). Intended for the
    /// separated coefficient representation at modest degrees only.
    pub fn monomial_coeffs(&self, n: usize) -> Vec<F> {
        assert!(n <= self.max_degree());
        let mut prev = vec![F::zero(); n + 1];
        let mut cur = vec![F::zero(); n + 1];
        cur[0] = F::one();
        for k in 0..n {
            let (a, b, c) = self.rec[k];
            let mut next = vec![F::zero(); n + 1];
            for j in 0..=k {
                next[j + 1] += a * cur[j];
                next[j] += b * cur[j];
                if k >= 1 {
                    next[j] += c * prev[j];
                }
            }
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// Reproducing kernel k_n(x,y) = sum_{k<=n} p_k(x) p_k(y) / h_k.
    pub fn kernel(&self, n: usize, x: F, y: F) -> F {
        let px = self.eval_all(n, x);
        let py = self.eval_all(n, y);
        px.iter()
            .zip(&py)
            .zip(&self.norms)
            .map(|((&a, &b), &h)| a * b / h)
            .sum()
    }

    /// Expansion coefficients f_hat_0..f_hat_n through the stored rule.
    pub fn coefficients(&self, f: &mut impl FnMut(F) -> F, n: usize) -> Vec<F> {
        self.coefficients_on(&self.rule, f, n)
    }

    fn coefficients_on(
        &self,
        rule: &QuadratureRule<F>,
        f: &mut impl FnMut(F) -> F,
        n: usize,
    ) -> Vec<F> {
        let mut acc = vec![F::zero(); n + 1];
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let fv = f(x);
            let basis = self.eval_all(n, x);
            for (a, &p) in acc.iter_mut().zip(&basis) {
                *a += w * fv * p;
            }
        }
        for (a, &h) in acc.iter_mut().zip(&self.norms) {
            *a /= h;
        }
        acc
    }

    /// Coefficients plus a convergence diagnostic from a refined rule.
    pub fn coefficients_checked(
        &self,
        f: &mut impl FnMut(F) -> F,
        n: usize,
    ) -> Result<(Vec<F>, QuadConvergence<F>)> {
        let coarse = self.coefficients(f, n);
        let refined_rule = self.weight.rule(self.rule.len() * 3 / 2 + 8)?;
        let fine = self.coefficients_on(&refined_rule, f, n);
        let mut dev = F::zero();
        let mut scale = F::epsilon();
        for (&c, &d) in coarse.iter().zip(&fine) {
            dev = dev.max((c - d).abs());
            scale = scale.max(d.abs());
        }
        let rel = dev / scale.max(F::one());
        Ok((
            fine,
            QuadConvergence {
                converged: rel < F::of(1e-8),
                max_deviation: rel,
            },
        ))
    }

    /// Partial sum s_n(f)(x) of the orthogonal expansion.
    pub fn partial_sum(&self, f: &mut impl FnMut(F) -> F, n: usize, x: F) -> F {
        let coeffs = self.coefficients(f, n);
        self.partial_sum_from_coeffs(&coeffs, n, x)
    }

    pub fn partial_sum_from_coeffs(&self, coeffs: &[F], n: usize, x: F) -> F {
        let basis = self.eval_all(n, x);
        basis
            .iter()
            .zip(coeffs.iter().take(n + 1))
            .map(|(&p, &c)| p * c)
            .sum()
    }

    /// Squared L^2(w) distance between f and the expansion truncated at n.
    pub fn truncation_error_sq(&self, f: &mut impl FnMut(F) -> F, coeffs: &[F], n: usize) -> F {
        let mut err = F::zero();
        for (&x, &w) in self.rule.nodes.iter().zip(&self.rule.weights) {
            let d = f(x) - self.partial_sum_from_coeffs(coeffs, n, x);
            err += w * d * d;
        }
        err
    }

    /// Squared L^2(w) norm of f under the stored rule.
    pub fn norm_sq(&self, f: &mut impl FnMut(F) -> F) -> F {
        let mut out = F::zero();
        for (&x, &w) in self.rule.nodes.iter().zip(&self.rule.weights) {
            let v = f(x);
            out += w * v * v;
        }
        out
    }
}

/// Spec-level names for the kernel and partial-sum operations.
pub fn kernel_1d<F: Scalar>(op: &OrthoPoly1D<F>, n: usize, x: F, y: F) -> F {
    op.kernel(n, x, y)
}

pub fn partial_sum_1d<F: Scalar>(
    op: &OrthoPoly1D<F>,
    f: &mut impl FnMut(F) -> F,
    n: usize,
    x: F,
) -> F {
    op.partial_sum(f, n, x)
}

/// Discretized Stieltjes orthogonalization against an explicit rule.
pub fn stieltjes_procedure<F: Scalar>(
    w: &WeightSpec<F>,
    n_max: usize,
    rule: QuadratureRule<F>,
) -> Result<OrthoPoly1D<F>> {
    OrthoPoly1D::stieltjes(w.clone(), n_max, rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn legendre01(n_max: usize) -> OrthoPoly1D<f64> {
        OrthoPoly1D::jacobi(
            WeightSpec::jacobi(JacobiParams::new(0.0, 0.0).unwrap()),
            n_max,
        )
        .unwrap()
    }

    #[test]
    fn stieltjes_matches_legendre_recurrence() {
        let w: WeightSpec<f64> = WeightSpec::jacobi(JacobiParams::new(0.0, 0.0).unwrap());
        let rule = w.rule(24).unwrap();
        let op = OrthoPoly1D::stieltjes(w, 3, rule).unwrap();
        // monic Legendre on [0,1]: a_k = 1/2, b_k = k^2 / (4 (4k^2 - 1))
        for k in 0..3 {
            let (a, b, c) = op.rec[k];
            assert!((a - 1.0).abs() < 1e-14);
            assert!((-b - 0.5).abs() < 1e-11, "a_{k} = {}", -b);
            if k > 0 {
                let kk = k as f64;
                let want = kk * kk / (4.0 * (4.0 * kk * kk - 1.0));
                assert!((-c - want).abs() < 1e-11, "b_{k} = {}", -c);
            }
        }
    }

    #[test]
    fn stieltjes_norms_match_closed_form() {
        // monic norms differ from the shifted-Jacobi ones by the square of
        // the leading coefficient (n+γ+α+1)_n / n!
        let p = JacobiParams::new(0.4, 0.9).unwrap();
        let w = WeightSpec::jacobi(p);
        let rule = w.rule(40).unwrap();
        let op = OrthoPoly1D::stieltjes(w, 6, rule).unwrap();
        for n in 0..=6usize {
            let mut lead = 1.0;
            for k in 0..n {
                lead *= (n as f64 + p.gamma + p.alpha + 1.0 + k as f64) / (k as f64 + 1.0);
            }
            let want = jacobi_norm_h(n, &p) / (lead * lead);
            let got = op.norm(n);
            assert!(
                (got - want).abs() < 1e-10 * want.abs(),
                "n={n}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn stieltjes_cubic_radial_weight_gram_diagonal() {
        let w = WeightSpec::general(|t: f64| t * t * t);
        let rule = gauss_jacobi_raw(24, &JacobiParams::new(3.0, 0.0).unwrap()).unwrap();
        let op = OrthoPoly1D::stieltjes(w, 2, rule.clone()).unwrap();
        for i in 0..=2usize {
            for j in 0..=2usize {
                let g = rule.integrate(|x| op.eval(i, x) * op.eval(j, x));
                if i == j {
                    assert!(g > 0.0);
                } else {
                    assert!(g.abs() < 1e-12 * op.norm(i).max(op.norm(j)), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn kernel_reproduces_basis() {
        let op = legendre01(8);
        let rule = op.rule().clone();
        for m in 0..=4usize {
            for &x in &[0.123, 0.5, 0.871] {
                let got = rule.integrate(|y| op.kernel(4, x, y) * op.eval(m, y));
                let want = op.eval(m, x);
                assert!((got - want).abs() < 1e-10, "m={m} x={x}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn kernel_degree_zero() {
        let op = legendre01(2);
        assert!((op.kernel(0, 0.2, 0.9) - 1.0).abs() < 1e-14); // 1/h_0, h_0 = 1
    }

    #[test]
    fn partial_sum_projects_basis_elements() {
        let op = legendre01(6);
        let p2 = |x: f64| op.eval(2, x);
        for &x in &[0.0, 0.31, 1.0] {
            let s = op.partial_sum(&mut { p2 }, 4, x);
            assert!((s - op.eval(2, x)).abs() < 1e-12);
            let s1 = op.partial_sum(&mut { p2 }, 1, x);
            assert!(s1.abs() < 1e-12);
        }
    }

    #[test]
    fn partial_sum_matches_oracle_projection() {
        // independent oracle: coefficients from a much finer rule
        let op = legendre01(8);
        let fine = WeightSpec::jacobi(JacobiParams::new(0.0, 0.0).unwrap())
            .rule(120)
            .unwrap();
        let mut f = |x: f64| x.exp();
        let mut oracle = vec![0.0; 9];
        for (&x, &w) in fine.nodes.iter().zip(&fine.weights) {
            let all = op.eval_all(8, x);
            for (k, acc) in oracle.iter_mut().enumerate() {
                *acc += w * f(x) * all[k];
            }
        }
        for (k, acc) in oracle.iter_mut().enumerate() {
            *acc /= op.norm(k);
        }
        for &x in &[0.1, 0.42, 0.95] {
            let got = op.partial_sum(&mut f, 8, x);
            let want = op.partial_sum_from_coeffs(&oracle, 8, x);
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
    }

    #[test]
    fn parseval_monotone_and_bounded() {
        let op = legendre01(12);
        let mut f = |x: f64| (3.0 * x).sin() + 0.3;
        let total = op.norm_sq(&mut f);
        let coeffs = op.coefficients(&mut f, 12);
        let mut running = 0.0;
        for n in 0..=12usize {
            running += coeffs[n] * coeffs[n] * op.norm(n);
            assert!(running <= total * (1.0 + 1e-12), "n={n}");
        }
    }

    #[test]
    fn gram_diagonal_jacobi_grid() {
        let grid: [(f64, f64); 4] = [(0.0, 0.0), (-0.4, 0.7), (1.5, -0.4), (0.7, 1.5)];
        for &(al, ga) in &grid {
            let p = JacobiParams::new(al, ga).unwrap();
            let w = WeightSpec::jacobi(p);
            let op = OrthoPoly1D::jacobi(w.clone(), 20).unwrap();
            let rule = w.rule(44).unwrap();
            for n in 0..=20usize {
                let quad = rule.integrate(|x| {
                    let v = op.eval(n, x);
                    v * v
                });
                let want = jacobi_norm_h(n, &p);
                assert!(
                    (quad - want).abs() < 1e-10 * want.abs(),
                    "({al},{ga}) n={n}: {quad} vs {want}"
                );
            }
        }
    }

    #[test]
    fn norm_breakdown_reported() {
        // a sign-indefinite "weight" breaks positivity quickly
        let w = WeightSpec::general(|t: f64| t - 0.5);
        let rule = clenshaw_curtis(64, 0.0, 1.0)
            .unwrap()
            .with_weight(|t| t - 0.5);
        match OrthoPoly1D::stieltjes(w, 4, rule) {
            Err(Error::NormBreakdown { .. }) => {}
            other => panic!("expected norm breakdown, got {other:?}"),
        }
    }
}
