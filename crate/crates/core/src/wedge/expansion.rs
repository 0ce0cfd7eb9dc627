//! Fourier orthogonal expansions on the wedge: coefficient computation,
//! truncated partial sums (directly and through the even/odd decomposition),
//! and per-order convergence tables.

use serde::Serialize;

use crate::error::Result;
use crate::scalar::Scalar;
use crate::univariate::{JacobiParams, OrthoPoly1D, WeightSpec};
use crate::wedge::{
    EqualWeightBasis, JacobiWedgeBasis, Segment, WedgeBasisEval, WedgeFunction, WedgePoint,
};

/// Which family sits opposite P in the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SecondFamily {
    /// Q from the single-weight construction.
    EqualQ,
    /// Prefactor-free antisymmetric Q (Jacobi weights with alpha = beta).
    JacobiQSym,
    /// R, the Gram-Schmidt correction of Q against P (alpha != beta).
    JacobiR,
}

/// Coefficients of f against {1, P_k, second_k} up to a truncation order.
#[derive(Debug, Clone, Serialize)]
pub struct WedgeExpansion<F> {
    pub hat_f0: F,
    /// degree-k coefficient stored at index k-1
    pub hat_p: Vec<F>,
    pub hat_second: Vec<F>,
    pub family: SecondFamily,
    pub norm_const: F,
    pub norm_p: Vec<F>,
    pub norm_second: Vec<F>,
}

impl<F: Scalar> WedgeExpansion<F> {
    pub fn n_max(&self) -> usize {
        self.hat_p.len()
    }

    /// Evaluate the degree-n partial sum at planar coordinates on the wedge.
    pub fn eval<B: WedgeBasisEval<F>>(&self, basis: &B, n: usize, x: F, y: F) -> F {
        let mut acc = self.hat_f0;
        for k in 1..=n.min(self.n_max()) {
            acc += self.hat_p[k - 1] * basis.p(k, x, y);
            acc += self.hat_second[k - 1] * basis.second(k, x, y);
        }
        acc
    }

    pub fn eval_at<B: WedgeBasisEval<F>>(&self, basis: &B, n: usize, pt: &WedgePoint<F>) -> F {
        let (x, y) = pt.xy();
        self.eval(basis, n, x, y)
    }
}

fn family_of<F: Scalar, B: WedgeBasisEval<F> + 'static>(basis: &B) -> SecondFamily {
    use std::any::Any;
    if let Some(j) = (basis as &dyn Any).downcast_ref::<JacobiWedgeBasis<F>>() {
        if j.symmetric() {
            SecondFamily::JacobiQSym
        } else {
            SecondFamily::JacobiR
        }
    } else {
        SecondFamily::EqualQ
    }
}

/// Expansion coefficients by two-segment quadrature against the basis'
/// weights, divided by the closed-form norms.
pub fn expand<F: Scalar, B: WedgeBasisEval<F> + 'static>(
    basis: &B,
    f: &WedgeFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<WedgeExpansion<F>> {
    let w = basis.weights();
    let (top, right) = w.rules(order)?;
    let mut raw0 = F::zero();
    let mut raw_p = vec![F::zero(); n_max];
    let mut raw_s = vec![F::zero(); n_max];
    let mut accumulate = |t: F, wt: F, seg: Segment| {
        let (x, y) = WedgePoint { segment: seg, t }.xy();
        let fv = match seg {
            Segment::Top => f.on_top(t),
            Segment::Right => f.on_right(t),
        };
        raw0 += wt * fv;
        for k in 1..=n_max {
            raw_p[k - 1] += wt * fv * basis.p(k, x, y);
            raw_s[k - 1] += wt * fv * basis.second(k, x, y);
        }
    };
    for (&t, &wt) in top.nodes.iter().zip(&top.weights) {
        accumulate(t, wt, Segment::Top);
    }
    for (&t, &wt) in right.nodes.iter().zip(&right.weights) {
        accumulate(t, wt, Segment::Right);
    }
    let norm_const = basis.norm_const();
    let norm_p: Vec<F> = (1..=n_max).map(|k| basis.norm_p(k)).collect();
    let norm_second: Vec<F> = (1..=n_max).map(|k| basis.norm_second(k)).collect();
    Ok(WedgeExpansion {
        hat_f0: raw0 / norm_const,
        hat_p: raw_p
            .into_iter()
            .zip(&norm_p)
            .map(|(v, &h)| v / h)
            .collect(),
        hat_second: raw_s
            .into_iter()
            .zip(&norm_second)
            .map(|(v, &h)| v / h)
            .collect(),
        family: family_of(basis),
        norm_const,
        norm_p,
        norm_second,
    })
}

pub fn expand_equal<F: Scalar>(
    basis: &EqualWeightBasis<F>,
    f: &WedgeFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<WedgeExpansion<F>> {
    expand(basis, f, n_max, order)
}

pub fn expand_jacobi<F: Scalar>(
    basis: &JacobiWedgeBasis<F>,
    f: &WedgeFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<WedgeExpansion<F>> {
    expand(basis, f, n_max, order)
}

/// Partial sum through the even/odd decomposition (equal weights):
/// S_n f(x,1) = s_n(w; f_e)(x) + (1-x) s_{n-1}(φw; f_o)(x) and the right
/// segment with the opposite sign.
pub fn partial_sum_wedge_decomposed<F: Scalar>(
    basis: &EqualWeightBasis<F>,
    f: &WedgeFunction<F>,
    n: usize,
    pt: &WedgePoint<F>,
) -> F {
    let mut fe = |x: F| f.f_even(x);
    let even = basis.family_w().partial_sum(&mut fe, n, pt.t);
    if n == 0 {
        return even;
    }
    let mut fo = |x: F| f.f_odd(x);
    let odd = basis.family_phi().partial_sum(&mut fo, n - 1, pt.t);
    let corr = (F::one() - pt.t) * odd;
    match pt.segment {
        Segment::Top => even + corr,
        Segment::Right => even - corr,
    }
}

/// One row of a convergence study at truncation order n. Squared wedge
/// errors; the four univariate columns are norms (not squared).
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow<F> {
    pub n: usize,
    /// ||S_n f - f||^2 in the wedge norm
    pub err_wedge_sq: F,
    /// 2 (||s_n(w;f_e)-f_e||^2 + ||s_{n-1}(φw;f_o)-f_o||^2), equal weights
    pub err_decomposed_sq: Option<F>,
    pub err_f1: Option<F>,
    pub err_f2: Option<F>,
    pub err_g1: Option<F>,
    pub err_g2: Option<F>,
}

fn wedge_errors<F: Scalar, B: WedgeBasisEval<F> + 'static>(
    basis: &B,
    f: &WedgeFunction<F>,
    exp: &WedgeExpansion<F>,
    n_max: usize,
    order: usize,
) -> Result<Vec<F>> {
    let w = basis.weights();
    let (top, right) = w.rules(order)?;
    let mut errs = vec![F::zero(); n_max + 1];
    let mut add_segment = |rule: &crate::univariate::QuadratureRule<F>, seg: Segment| {
        for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
            let (x, y) = WedgePoint { segment: seg, t }.xy();
            let fv = match seg {
                Segment::Top => f.on_top(t),
                Segment::Right => f.on_right(t),
            };
            let mut partial = exp.hat_f0;
            let d0 = fv - partial;
            errs[0] += wt * d0 * d0;
            for k in 1..=n_max {
                partial += exp.hat_p[k - 1] * basis.p(k, x, y);
                partial += exp.hat_second[k - 1] * basis.second(k, x, y);
                let d = fv - partial;
                errs[k] += wt * d * d;
            }
        }
    };
    add_segment(&top, Segment::Top);
    add_segment(&right, Segment::Right);
    Ok(errs)
}

/// Convergence table for the equal-weight expansion; the decomposed column
/// restates the wedge error through the two univariate expansions.
pub fn convergence_report_equal<F: Scalar>(
    basis: &EqualWeightBasis<F>,
    f: &WedgeFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<Vec<ConvergenceRow<F>>> {
    let exp = expand(basis, f, n_max, order)?;
    let wedge = wedge_errors(basis, f, &exp, n_max, order)?;
    let op_w = basis.family_w();
    let op_phi = basis.family_phi();
    let mut fe = |x: F| f.f_even(x);
    let coeff_e = op_w.coefficients(&mut fe, n_max);
    let mut fo = |x: F| f.f_odd(x);
    let coeff_o = op_phi.coefficients(&mut fo, n_max.max(1) - 1);
    let err_e: Vec<F> = (0..=n_max)
        .map(|n| op_w.truncation_error_sq(&mut fe, &coeff_e, n))
        .collect();
    let full_o = op_phi.norm_sq(&mut fo);
    let err_o: Vec<F> = (0..n_max)
        .map(|n| op_phi.truncation_error_sq(&mut fo, &coeff_o, n))
        .collect();
    let rows = (0..=n_max)
        .map(|n| {
            let o = if n == 0 { full_o } else { err_o[n - 1] };
            ConvergenceRow {
                n,
                err_wedge_sq: wedge[n],
                err_decomposed_sq: Some(F::of(2.0) * (err_e[n] + o)),
                err_f1: None,
                err_f2: None,
                err_g1: None,
                err_g2: None,
            }
        })
        .collect();
    Ok(rows)
}

/// Convergence table for Jacobi weights: wedge error plus the four
/// univariate error norms that control it (f_1, f_2 and the difference
/// quotients g_1, g_2 against the γ+2 weights).
pub fn convergence_report_jacobi<F: Scalar>(
    basis: &JacobiWedgeBasis<F>,
    f: &WedgeFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<Vec<ConvergenceRow<F>>> {
    let exp = expand(basis, f, n_max, order)?;
    let wedge = wedge_errors(basis, f, &exp, n_max, order)?;
    let two = F::of(2.0);
    let mk = |alpha: F, gamma: F| -> Result<OrthoPoly1D<F>> {
        OrthoPoly1D::jacobi(
            WeightSpec::jacobi(JacobiParams::new(alpha, gamma)?),
            n_max,
        )
    };
    let op_f1 = mk(basis.alpha, basis.gamma)?;
    let op_f2 = mk(basis.beta, basis.gamma)?;
    let op_g1 = mk(basis.alpha, basis.gamma + two)?;
    let op_g2 = mk(basis.beta, basis.gamma + two)?;
    let table = |op: &OrthoPoly1D<F>, g: &mut dyn FnMut(F) -> F| -> Vec<F> {
        let mut gf = |x: F| g(x);
        let coeffs = op.coefficients(&mut gf, n_max);
        (0..=n_max)
            .map(|n| op.truncation_error_sq(&mut gf, &coeffs, n).sqrt())
            .collect()
    };
    let e_f1 = table(&op_f1, &mut |x| f.on_top(x));
    let e_f2 = table(&op_f2, &mut |x| f.on_right(x));
    let e_g1 = table(&op_g1, &mut |x| f.g1(x));
    let e_g2 = table(&op_g2, &mut |x| f.g2(x));
    let rows = (0..=n_max)
        .map(|n| ConvergenceRow {
            n,
            err_wedge_sq: wedge[n],
            err_decomposed_sq: None,
            err_f1: Some(e_f1[n]),
            err_f2: Some(e_f2[n]),
            err_g1: Some(e_g1[n]),
            err_g2: Some(e_g2[n]),
        })
        .collect();
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis00(n: usize) -> EqualWeightBasis<f64> {
        EqualWeightBasis::new(
            WeightSpec::jacobi(JacobiParams::new(0.0, 0.0).unwrap()),
            n,
        )
        .unwrap()
    }

    #[test]
    fn expansion_projects_basis_element() {
        let b = basis00(6);
        let p2 = WedgeFunction::from_xy({
            let b = b.clone();
            move |x, y| b.eval_p(2, x, y)
        })
        .unwrap();
        let exp = expand_equal(&b, &p2, 5, 30).unwrap();
        assert!((exp.hat_p[1] - 1.0).abs() < 1e-12);
        for (k, &c) in exp.hat_p.iter().enumerate() {
            if k != 1 {
                assert!(c.abs() < 1e-12, "P coefficient {k}");
            }
        }
        for &c in &exp.hat_second {
            assert!(c.abs() < 1e-12);
        }
        for &pt in &[WedgePoint::top(0.2), WedgePoint::right(0.9)] {
            let (x, y) = pt.xy();
            assert!((exp.eval(&b, 5, x, y) - b.eval_p(2, x, y)).abs() < 1e-11);
            assert!(exp.eval(&b, 1, x, y).abs() < 1e-11);
        }
    }

    #[test]
    fn linear_function_reproduced_at_order_two() {
        // f(x,y) = x restricted to the wedge
        let b = basis00(4);
        let f = WedgeFunction::from_xy(|x, _y| x).unwrap();
        let exp = expand_equal(&b, &f, 2, 30).unwrap();
        for &pt in &[
            WedgePoint::top(0.0),
            WedgePoint::top(0.37),
            WedgePoint::right(0.81),
            WedgePoint::corner(),
        ] {
            let (x, _) = pt.xy();
            let want = match pt.segment {
                Segment::Top => x,
                Segment::Right => 1.0,
            };
            assert!((exp.eval_at(&b, 2, &pt) - want).abs() < 1e-10);
            let dec = partial_sum_wedge_decomposed(&b, &f, 2, &pt);
            assert!((dec - want).abs() < 1e-10);
        }
    }

    #[test]
    fn decomposed_matches_direct_truncation() {
        let b = basis00(12);
        let f = WedgeFunction::from_xy(|x: f64, y: f64| (x + y).exp()).unwrap();
        let exp = expand_equal(&b, &f, 10, 48).unwrap();
        let pts: Vec<WedgePoint<f64>> = (0..25)
            .map(|i| {
                let t = i as f64 / 24.0;
                if i % 2 == 0 {
                    WedgePoint::top(t)
                } else {
                    WedgePoint::right(t)
                }
            })
            .collect();
        for n in 0..=10usize {
            for pt in &pts {
                let direct = exp.eval_at(&b, n, pt);
                let dec = partial_sum_wedge_decomposed(&b, &f, n, pt);
                assert!(
                    (direct - dec).abs() < 1e-10 * direct.abs().max(1.0),
                    "n={n} pt={pt:?}: {direct} vs {dec}"
                );
            }
        }
    }

    #[test]
    fn smooth_function_errors_decrease() {
        let b = basis00(14);
        let f = WedgeFunction::from_xy(|x: f64, y: f64| (x + y).exp()).unwrap();
        let rows = convergence_report_equal(&b, &f, 12, 60).unwrap();
        for pair in rows.windows(2).skip(2) {
            // monotone decrease until the round-off floor of the squared error
            assert!(
                pair[1].err_wedge_sq <= pair[0].err_wedge_sq * (1.0 + 1e-9) + 1e-24,
                "error not monotone at n={}",
                pair[1].n
            );
        }
        // the normwise identity: the two columns agree
        for row in &rows {
            let dec = row.err_decomposed_sq.unwrap();
            assert!(
                (row.err_wedge_sq - dec).abs() < 1e-9 * dec.max(1e-12),
                "n={}: {} vs {}",
                row.n,
                row.err_wedge_sq,
                dec
            );
        }
    }

    #[test]
    fn polynomial_errors_vanish_beyond_degree() {
        let b = JacobiWedgeBasis::new(0.3f64, 1.2, 0.5, 1.0).unwrap();
        // f = P_2 + 0.5 R_1 has exact degree 2
        let f = WedgeFunction::from_xy({
            move |x, y| b.eval_p(2, x, y) + 0.5 * b.eval_r(1, x, y)
        })
        .unwrap();
        let rows = convergence_report_jacobi(&b, &f, 6, 40).unwrap();
        for row in rows.iter().filter(|r| r.n >= 2) {
            assert!(row.err_wedge_sq.abs() < 1e-10, "n={}", row.n);
            assert!(row.err_f1.unwrap() < 1e-5);
            assert!(row.err_g1.unwrap() < 1e-5);
        }
    }
}
