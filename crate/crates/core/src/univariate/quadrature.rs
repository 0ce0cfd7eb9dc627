//! Quadrature rules: Gauss rules against Jacobi weights on [0,1] via
//! Golub--Welsch, Clenshaw--Curtis rules on arbitrary intervals, and a
//! small adaptive Gauss driver used by the Cauchy-transform oracles.

use crate::error::{Error, Result};
use crate::scalar::{ln_gamma, Scalar};
use crate::univariate::jacobi::JacobiParams;

/// Nodes and weights of a quadrature rule on some interval.
#[derive(Debug, Clone)]
pub struct QuadratureRule<F> {
    pub nodes: Vec<F>,
    pub weights: Vec<F>,
}

impl<F: Scalar> QuadratureRule<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, mut f: impl FnMut(F) -> F) -> F {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Scale every weight by `f(node)`, e.g. to absorb an extra weight factor.
    pub fn with_weight(&self, mut f: impl FnMut(F) -> F) -> Self {
        Self {
            nodes: self.nodes.clone(),
            weights: self
                .nodes
                .iter()
                .zip(&self.weights)
                .map(|(&x, &w)| w * f(x))
                .collect(),
        }
    }

    /// Scale all weights by a constant.
    pub fn scaled(&self, c: F) -> Self {
        Self {
            nodes: self.nodes.clone(),
            weights: self.weights.iter().map(|&w| w * c).collect(),
        }
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// components of its normalized eigenvectors (implicit-shift QL).
///
/// `d` holds the diagonal, `e` the subdiagonal (length n, last entry unused);
/// on return `d` holds eigenvalues and `z` the first components. This is the
/// classical Golub--Welsch workhorse.
fn symtridiag_eigen_first_components<F: Scalar>(
    d: &mut [F],
    e: &mut [F],
    z: &mut [F],
) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = F::zero();
    let eps = F::epsilon();
    for l in 0..n {
        let mut iter = 0usize;
        loop {
            // locate a negligible subdiagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Eigensolve { index: l });
            }
            let two = F::of(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(F::one());
            let sign_r = if g >= F::zero() { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let mut s = F::one();
            let mut c = F::one();
            let mut p = F::zero();
            let mut underflowed = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    underflowed = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflowed {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
    // sort ascending, carrying z along
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let d_old = d.to_vec();
    let z_old = z.to_vec();
    for (k, &idx) in order.iter().enumerate() {
        d[k] = d_old[idx];
        z[k] = z_old[idx];
    }
    Ok(())
}

/// n-point Gauss rule for the raw weight x^alpha (1-x)^gamma on [0,1],
/// exact for polynomials of degree <= 2n-1.
pub fn gauss_jacobi_raw<F: Scalar>(n: usize, p: &JacobiParams<F>) -> Result<QuadratureRule<F>> {
    if n == 0 {
        return Err(Error::InvalidParam("gauss rule needs n >= 1".into()));
    }
    // classical parameters on [-1,1]: weight (1-t)^a (1+t)^b with a = gamma, b = alpha
    let (a, b) = (p.gamma, p.alpha);
    let one = F::one();
    let two = F::of(2.0);
    let four = F::of(4.0);
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];
    // monic recurrence coefficients (Gautschi): t p_k = p_{k+1} + a_k p_k + b_k p_{k-1}
    d[0] = (b - a) / (a + b + two);
    for k in 1..n {
        let kf = F::of_usize(k);
        let s = two * kf + a + b;
        d[k] = (b * b - a * a) / (s * (s + two));
        let bk = if k == 1 {
            // the generic formula has a removable (a+b+1) factor here
            four * (one + a) * (one + b) / ((two + a + b) * (two + a + b) * (F::of(3.0) + a + b))
        } else {
            four * kf * (kf + a) * (kf + b) * (kf + a + b)
                / (s * s * (s + one) * (s - one))
        };
        e[k - 1] = bk.sqrt();
    }
    let mut z = vec![F::zero(); n];
    z[0] = F::one();
    symtridiag_eigen_first_components(&mut d, &mut e, &mut z)?;
    // mu_0 = integral of the weight over [-1,1]
    let ln_mu0 = (a + b + one) * two.ln() + ln_gamma(a + one) + ln_gamma(b + one)
        - ln_gamma(a + b + two);
    let mu0 = ln_mu0.exp();
    // map t -> x = (1+t)/2 and rescale onto the [0,1] weight
    let scale = (-(p.alpha + p.gamma + one) * two.ln()).exp();
    let nodes: Vec<F> = d.iter().map(|&t| (t + one) / two).collect();
    let weights: Vec<F> = z.iter().map(|&zi| mu0 * zi * zi * scale).collect();
    Ok(QuadratureRule { nodes, weights })
}

/// n-point Clenshaw--Curtis rule on [a,b] (n >= 2), exact for polynomials of
/// degree <= n-1 against the unit weight; all weights positive.
pub fn clenshaw_curtis<F: Scalar>(n: usize, a: F, b: F) -> Result<QuadratureRule<F>> {
    if n < 2 {
        return Err(Error::InvalidParam(
            "Clenshaw-Curtis rule needs n >= 2".into(),
        ));
    }
    let m = n - 1;
    let pi = F::of(std::f64::consts::PI);
    let one = F::one();
    let two = F::of(2.0);
    let mf = F::of_usize(m);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let half_len = (b - a) / two;
    let mid = (a + b) / two;
    for j in 0..=m {
        let theta = pi * F::of_usize(j) / mf;
        // descending cos order flipped so nodes increase
        let t = -theta.cos();
        nodes.push(mid + half_len * t);
        let mut w = F::one();
        let kmax = m / 2;
        for k in 1..=kmax {
            let bk = if 2 * k == m { one } else { two };
            let kf = F::of_usize(k);
            w = w - bk * (two * kf * theta).cos() / (F::of(4.0) * kf * kf - one);
        }
        let cj = if j == 0 || j == m { one } else { two };
        weights.push(cj * w / mf * half_len);
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Adaptive Gauss integration of a complex- or real-valued function; splits
/// the interval until a 15-point rule agrees with its two halves.
pub fn adaptive_gauss<F: Scalar, T>(f: &mut impl FnMut(F) -> T, a: F, b: F, tol: F) -> T
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
    T: NormedValue<F>,
{
    fn gauss15<F: Scalar, T>(f: &mut impl FnMut(F) -> T, a: F, b: F, rule: &QuadratureRule<F>) -> T
    where
        T: Copy + std::ops::Add<Output = T> + NormedValue<F>,
    {
        let half = (b - a) / F::of(2.0);
        let mid = (a + b) / F::of(2.0);
        let mut acc: Option<T> = None;
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            let v = f(mid + half * x).scale(w * half);
            acc = Some(match acc {
                None => v,
                Some(s) => s + v,
            });
        }
        acc.unwrap()
    }
    fn recurse<F: Scalar, T>(
        f: &mut impl FnMut(F) -> T,
        a: F,
        b: F,
        whole: T,
        tol: F,
        depth: usize,
        rule: &QuadratureRule<F>,
    ) -> T
    where
        T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + NormedValue<F>,
    {
        let mid = (a + b) / F::of(2.0);
        let left = gauss15(f, a, mid, rule);
        let right = gauss15(f, mid, b, rule);
        let sum = left + right;
        let err = (sum - whole).norm();
        // the round-off floor keeps narrow near-singular layers from
        // splitting past what double precision can resolve
        let floor = F::of(4.0) * F::epsilon() * (sum.norm() + whole.norm());
        if depth == 0 || err <= tol.max(floor) || !err.is_finite() {
            return sum;
        }
        let half_tol = tol / F::of(2.0);
        recurse(f, a, mid, left, half_tol, depth - 1, rule)
            + recurse(f, mid, b, right, half_tol, depth - 1, rule)
    }
    // 15-point Gauss-Legendre reference rule on [-1,1]
    let p = JacobiParams::new(F::zero(), F::zero()).unwrap();
    let base = gauss_jacobi_raw(15, &p).expect("legendre rule");
    let rule = QuadratureRule {
        nodes: base.nodes.iter().map(|&x| F::of(2.0) * x - F::one()).collect(),
        weights: base.weights.iter().map(|&w| w * F::of(2.0)).collect(),
    };
    let whole = gauss15(f, a, b, &rule);
    recurse(f, a, b, whole, tol, 48, &rule)
}

/// Values the adaptive driver can accumulate: needs a norm and scaling.
pub trait NormedValue<F> {
    fn norm(&self) -> F;
    fn scale(&self, s: F) -> Self;
}

impl<F: Scalar> NormedValue<F> for F {
    fn norm(&self) -> F {
        self.abs()
    }
    fn scale(&self, s: F) -> Self {
        *self * s
    }
}

impl<F: Scalar> NormedValue<F> for num_complex::Complex<F> {
    fn norm(&self) -> F {
        num_complex::Complex::norm(*self)
    }
    fn scale(&self, s: F) -> Self {
        self * s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_rule() {
        let p = JacobiParams::new(0.0f64, 0.0).unwrap();
        let r = gauss_jacobi_raw(1, &p).unwrap();
        assert!((r.nodes[0] - 0.5).abs() < 1e-15);
        assert!((r.weights[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn two_point_exact_degree_three() {
        let p = JacobiParams::new(0.0f64, 0.0).unwrap();
        let r = gauss_jacobi_raw(2, &p).unwrap();
        let got = r.integrate(|x| x * x * x);
        assert!((got - 0.25).abs() < 1e-14);
    }

    #[test]
    fn jacobi_weighted_moment() {
        // c_{1/2,1} * int x * x^{1/2} (1-x) dx = 3/7 after normalization
        let p = JacobiParams::new(0.5f64, 1.0).unwrap();
        let r = gauss_jacobi_raw(5, &p).unwrap();
        let c = p.normalizer();
        let got = c * r.integrate(|x| x);
        assert!((got - 3.0 / 7.0).abs() < 1e-13, "got {got}");
    }

    #[test]
    fn gauss_exactness_sweep() {
        let p = JacobiParams::new(0.3f64, 1.7).unwrap();
        let c = p.normalizer();
        let r = gauss_jacobi_raw(8, &p).unwrap();
        // moments of the normalized weight: (alpha+1)_k / (alpha+gamma+2)_k
        let mut expect = 1.0;
        for k in 0..15usize {
            let got = c * r.integrate(|x| x.powi(k as i32));
            assert!(
                (got - expect).abs() < 1e-12 * expect.abs(),
                "k={k}: {got} vs {expect}"
            );
            expect *= (p.alpha + 1.0 + k as f64) / (p.alpha + p.gamma + 2.0 + k as f64);
        }
    }

    #[test]
    fn clenshaw_curtis_trapezoid() {
        let r = clenshaw_curtis(2, -1.0f64, 1.0).unwrap();
        assert_eq!(r.nodes, vec![-1.0, 1.0]);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);
        assert!((r.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn clenshaw_curtis_interval_length() {
        let r = clenshaw_curtis(17, 0.25f64, 0.75).unwrap();
        assert!((r.integrate(|_| 1.0) - 0.5).abs() < 1e-14);
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn clenshaw_curtis_power_eight() {
        let r = clenshaw_curtis(33, 0.0f64, 1.0).unwrap();
        let got = r.integrate(|x| x.powi(8));
        assert!((got - 1.0 / 9.0).abs() < 1e-13);
    }

    #[test]
    fn adaptive_matches_closed_form() {
        let mut f = |x: f64| (4.0 * x).sin();
        let got = adaptive_gauss(&mut f, 0.0, 1.0, 1e-13);
        let want = (1.0 - 4.0f64.cos()) / 4.0;
        assert!((got - want).abs() < 1e-12);
    }

    #[test]
    fn gauss_chebyshev_like_parameters() {
        // alpha = gamma = -1/2 exercises the a+b = -1 edge in the coefficients
        let p = JacobiParams::new(-0.5f64, -0.5).unwrap();
        let r = gauss_jacobi_raw(6, &p).unwrap();
        let total: f64 = r.weights.iter().sum();
        assert!((total - std::f64::consts::PI).abs() < 1e-12);
    }
}
