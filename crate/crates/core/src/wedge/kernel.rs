//! Reproducing kernel of degree n on the wedge for the equal-weight inner
//! product. On the contour the kernel collapses to a combination of the two
//! univariate kernels, with a sign that distinguishes same-segment from
//! cross-segment point pairs.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::wedge::{EqualWeightBasis, WedgePoint, WedgeWeights};

/// K_n(p1, p2) = 1/2 k_n(w; t1, t2) ± 1/2 (1-t1)(1-t2) k_{n-1}(φw; t1, t2),
/// plus sign when the points share a segment.
pub fn kernel_wedge<F: Scalar>(
    basis: &EqualWeightBasis<F>,
    n: usize,
    p1: &WedgePoint<F>,
    p2: &WedgePoint<F>,
) -> F {
    let half = F::of(0.5);
    let (t1, t2) = (p1.t, p2.t);
    let mut out = half * basis.family_w().kernel(n, t1, t2);
    if n >= 1 {
        let corr = half
            * (F::one() - t1)
            * (F::one() - t2)
            * basis.family_phi().kernel(n - 1, t1, t2);
        if p1.segment == p2.segment {
            out += corr;
        } else {
            out -= corr;
        }
    }
    out
}

/// Checked entry point: rejects weight pairs that are not a single weight
/// with sigma = 1, for which no closed kernel is available here.
pub fn kernel_wedge_checked<F: Scalar>(
    w: &WedgeWeights<F>,
    n: usize,
    p1: &WedgePoint<F>,
    p2: &WedgePoint<F>,
) -> Result<F> {
    if !w.top.same_as(&w.right) || w.sigma != F::one() {
        return Err(Error::InvalidParam(
            "the closed kernel needs equal segment weights and sigma = 1".into(),
        ));
    }
    let basis = EqualWeightBasis::new(w.top.clone(), n)?;
    Ok(kernel_wedge(&basis, n, p1, p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::univariate::{JacobiParams, WeightSpec};
    use crate::wedge::WedgeBasisEval;

    fn basis00(n: usize) -> EqualWeightBasis<f64> {
        EqualWeightBasis::new(
            WeightSpec::jacobi(JacobiParams::new(0.0, 0.0).unwrap()),
            n,
        )
        .unwrap()
    }

    #[test]
    fn degree_zero_kernel_is_inverse_mass() {
        let b = basis00(2);
        let k = kernel_wedge(&b, 0, &WedgePoint::top(0.3), &WedgePoint::right(0.8));
        assert!((k - 0.5).abs() < 1e-14); // <1,1> = 2
    }

    #[test]
    fn matches_spectral_sum() {
        let b = basis00(8);
        let pts = [
            WedgePoint::top(0.12),
            WedgePoint::top(0.77),
            WedgePoint::right(0.4),
            WedgePoint::right(1.0),
        ];
        for p1 in &pts {
            for p2 in &pts {
                let direct = kernel_wedge(&b, 6, p1, p2);
                let mut spectral = 1.0 / b.norm_const();
                let (x1, y1) = p1.xy();
                let (x2, y2) = p2.xy();
                for k in 1..=6usize {
                    spectral += b.eval_p(k, x1, y1) * b.eval_p(k, x2, y2) / b.norm_p(k);
                    spectral += b.eval_q(k, x1, y1) * b.eval_q(k, x2, y2) / b.norm_q(k);
                }
                assert!(
                    (direct - spectral).abs() < 1e-10 * spectral.abs().max(1.0),
                    "{p1:?} {p2:?}: {direct} vs {spectral}"
                );
            }
        }
    }

    #[test]
    fn same_vs_cross_segment_difference() {
        let b = basis00(6);
        let (x, y) = (0.3, 0.7);
        let same = kernel_wedge(&b, 5, &WedgePoint::top(x), &WedgePoint::top(y));
        let cross = kernel_wedge(&b, 5, &WedgePoint::top(x), &WedgePoint::right(y));
        let want = (1.0 - x) * (1.0 - y) * b.family_phi().kernel(4, x, y);
        assert!(((same - cross) - want).abs() < 1e-12 * want.abs().max(1.0));
    }

    #[test]
    fn unequal_weights_rejected() {
        let w = crate::wedge::WedgeWeights::jacobi(0.0f64, 1.0, 0.0, 1.0).unwrap();
        assert!(kernel_wedge_checked(&w, 3, &WedgePoint::top(0.1), &WedgePoint::top(0.2)).is_err());
    }

    #[test]
    fn kernel_reproduces_basis_elements() {
        let b = basis00(8);
        let w = b.weights();
        let (top_rule, right_rule) = w.rules(30).unwrap();
        let n = 5usize;
        for m in 1..=n {
            for &pt in &[WedgePoint::top(0.25), WedgePoint::right(0.6)] {
                let mut acc = 0.0;
                for (&t, &wt) in top_rule.nodes.iter().zip(&top_rule.weights) {
                    let q = WedgePoint::top(t);
                    acc += wt * b.eval_p(m, t, 1.0) * kernel_wedge(&b, n, &pt, &q);
                }
                for (&t, &wt) in right_rule.nodes.iter().zip(&right_rule.weights) {
                    let q = WedgePoint::right(t);
                    acc += wt * b.eval_p(m, 1.0, t) * kernel_wedge(&b, n, &pt, &q);
                }
                let (x, y) = pt.xy();
                let want = b.eval_p(m, x, y);
                assert!(
                    (acc - want).abs() < 1e-10 * want.abs().max(1.0),
                    "P m={m}: {acc} vs {want}"
                );
            }
        }
    }
}
