//! Orthogonal structure on the wedge: the union of the segments
//! {(x, 1): x in [0,1]} and {(1, y): y in [0,1]} meeting at the corner (1,1).
//!
//! Functions on the wedge are a pair of segment restrictions agreeing at the
//! corner; polynomials are considered modulo the ideal generated by
//! (1-x)(1-y), which vanishes identically on the contour.

mod basis;
mod expansion;
mod kernel;
mod separated;

pub use basis::{
    cross_ipd_pq, integral_i, EqualWeightBasis, JacobiWedgeBasis, WedgeBasisEval,
};
pub use expansion::{
    convergence_report_equal, convergence_report_jacobi, expand_equal, expand_jacobi,
    partial_sum_wedge_decomposed, ConvergenceRow, SecondFamily, WedgeExpansion,
};
pub use kernel::{kernel_wedge, kernel_wedge_checked};
pub use separated::SeparatedPoly;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::univariate::{JacobiParams, QuadratureRule, WeightSpec};

/// Which segment of the wedge a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Segment {
    /// {(t, 1): t in [0,1]}
    Top,
    /// {(1, t): t in [0,1]}
    Right,
}

impl Segment {
    pub fn name(&self) -> &'static str {
        match self {
            Segment::Top => "top",
            Segment::Right => "right",
        }
    }
}

/// A point on the wedge, tagged by segment and parameter.
#[derive(Debug, Clone, Copy)]
pub struct WedgePoint<F> {
    pub segment: Segment,
    pub t: F,
}

impl<F: Scalar> WedgePoint<F> {
    pub fn top(t: F) -> Self {
        Self {
            segment: Segment::Top,
            t,
        }
    }

    pub fn right(t: F) -> Self {
        Self {
            segment: Segment::Right,
            t,
        }
    }

    /// The corner (1,1), reachable from either segment.
    pub fn corner() -> Self {
        Self::top(F::one())
    }

    pub fn is_corner(&self) -> bool {
        self.t == F::one()
    }

    /// Planar coordinates of the point.
    pub fn xy(&self) -> (F, F) {
        match self.segment {
            Segment::Top => (self.t, F::one()),
            Segment::Right => (F::one(), self.t),
        }
    }
}

impl<F: Scalar> PartialEq for WedgePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.is_corner() && other.is_corner() {
            return true;
        }
        self.segment == other.segment && self.t == other.t
    }
}

/// The weighted inner product on the wedge: a weight per segment and a
/// positive factor sigma on the right-segment integral.
#[derive(Debug, Clone)]
pub struct WedgeWeights<F> {
    pub top: WeightSpec<F>,
    pub right: WeightSpec<F>,
    pub sigma: F,
    /// Whether unit-mass normalization constants are applied to the weights.
    pub normalized: bool,
}

impl<F: Scalar> WedgeWeights<F> {
    /// Jacobi weights x^α(1-x)^γ (top) and y^β(1-y)^γ (right), carrying
    /// their unit-mass constants, with factor sigma on the right integral.
    pub fn jacobi(alpha: F, beta: F, gamma: F, sigma: F) -> Result<Self> {
        if sigma <= F::zero() {
            return Err(Error::InvalidParam(format!("sigma must be > 0, got {sigma}")));
        }
        Ok(Self {
            top: WeightSpec::jacobi(JacobiParams::new(alpha, gamma)?),
            right: WeightSpec::jacobi(JacobiParams::new(beta, gamma)?),
            sigma,
            normalized: true,
        })
    }

    /// The same weight on both segments, sigma = 1.
    pub fn equal(w: WeightSpec<F>) -> Self {
        Self {
            top: w.clone(),
            right: w,
            sigma: F::one(),
            normalized: true,
        }
    }

    /// Quadrature rules per segment, sigma folded into the right weights.
    pub fn rules(&self, order: usize) -> Result<(QuadratureRule<F>, QuadratureRule<F>)> {
        let top = self.top.rule(order)?;
        let right = self.right.rule(order)?.scaled(self.sigma);
        Ok((top, right))
    }

    /// Total mass <1,1>.
    pub fn mass(&self) -> F {
        self.top.mass() + self.sigma * self.right.mass()
    }
}

type SegmentFn<F> = Arc<dyn Fn(F) -> F + Send + Sync>;

/// A function on the wedge, stored as its two segment restrictions.
#[derive(Clone)]
pub struct WedgeFunction<F> {
    top: SegmentFn<F>,
    right: SegmentFn<F>,
}

impl<F: Scalar> WedgeFunction<F> {
    /// Build from restrictions f(t,1) and f(1,t); they must agree at the
    /// corner within 1e-8 (relative to the corner magnitude).
    pub fn new(
        top: impl Fn(F) -> F + Send + Sync + 'static,
        right: impl Fn(F) -> F + Send + Sync + 'static,
    ) -> Result<Self> {
        let ft = top(F::one());
        let fr = right(F::one());
        let scale = ft.abs().max(F::one());
        if (ft - fr).abs() > F::of(1e-8) * scale {
            return Err(Error::CornerMismatch {
                top: ft.to_f64().unwrap_or(f64::NAN),
                right: fr.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            top: Arc::new(top),
            right: Arc::new(right),
        })
    }

    /// Build from a function of the planar coordinates.
    pub fn from_xy(f: impl Fn(F, F) -> F + Send + Sync + 'static + Clone) -> Result<Self> {
        let g = f.clone();
        Self::new(move |t| f(t, F::one()), move |t| g(F::one(), t))
    }

    pub fn constant(c: F) -> Self {
        Self {
            top: Arc::new(move |_| c),
            right: Arc::new(move |_| c),
        }
    }

    pub fn eval(&self, pt: &WedgePoint<F>) -> F {
        match pt.segment {
            Segment::Top => (self.top)(pt.t),
            Segment::Right => (self.right)(pt.t),
        }
    }

    /// Restriction to the top segment, f_1(x) = f(x,1).
    pub fn on_top(&self, t: F) -> F {
        (self.top)(t)
    }

    /// Restriction to the right segment, f_2(y) = f(1,y).
    pub fn on_right(&self, t: F) -> F {
        (self.right)(t)
    }

    /// Corner value, read from the top representation.
    pub fn corner(&self) -> F {
        (self.top)(F::one())
    }

    /// Even part f_e(x) = (f(x,1) + f(1,x)) / 2.
    pub fn f_even(&self, x: F) -> F {
        ((self.top)(x) + (self.right)(x)) / F::of(2.0)
    }

    /// Odd difference quotient f_o(x) = (f(x,1) - f(1,x)) / (2(1-x));
    /// undefined at x = 1, which quadrature nodes avoid.
    pub fn f_odd(&self, x: F) -> F {
        ((self.top)(x) - (self.right)(x)) / (F::of(2.0) * (F::one() - x))
    }

    /// Difference quotient g_1(x) = (f(x,1) - f(1,1)) / (1-x).
    pub fn g1(&self, x: F) -> F {
        ((self.top)(x) - self.corner()) / (F::one() - x)
    }

    /// Difference quotient g_2(y) = (f(1,y) - f(1,1)) / (1-y).
    pub fn g2(&self, y: F) -> F {
        ((self.right)(y) - self.corner()) / (F::one() - y)
    }
}

/// Two-segment weighted inner product <f,g> by Gauss quadrature.
pub fn inner_product_wedge<F: Scalar>(
    f: &WedgeFunction<F>,
    g: &WedgeFunction<F>,
    w: &WedgeWeights<F>,
    order: usize,
) -> Result<F> {
    let (top, right) = w.rules(order)?;
    let mut acc = F::zero();
    for (i, (&x, &wt)) in top.nodes.iter().zip(&top.weights).enumerate() {
        let v = f.on_top(x) * g.on_top(x);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                segment: "top",
                node: i,
                t: x.to_f64().unwrap_or(f64::NAN),
            });
        }
        acc += wt * v;
    }
    for (i, (&y, &wt)) in right.nodes.iter().zip(&right.weights).enumerate() {
        let v = f.on_right(y) * g.on_right(y);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                segment: "right",
                node: i,
                t: y.to_f64().unwrap_or(f64::NAN),
            });
        }
        acc += wt * v;
    }
    Ok(acc)
}
