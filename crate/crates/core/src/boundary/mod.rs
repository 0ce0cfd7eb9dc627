//! Orthogonal polynomials on the boundary of [-1,1]^2.
//!
//! The weights are ϖ_{α,γ}(x) = |x|^{2α+1} (1-x^2)^γ on horizontal sides and
//! ϖ_{β,γ} on vertical sides. Elements Y_{n,i} are assembled from four wedge
//! families (one per parity class) through the substitution u = x^2, and the
//! boundary expansion of a function reduces to four wedge expansions of its
//! parity components.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{jacobi_weight_normalizer, Scalar};
use crate::univariate::{gauss_jacobi_raw, JacobiParams, QuadratureRule};
use crate::wedge::{JacobiWedgeBasis, SeparatedPoly, WedgeExpansion, WedgeFunction, WedgePoint};

/// Sides of the square boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub const ALL: [Side; 4] = [Side::Top, Side::Bottom, Side::Left, Side::Right];
}

/// A point on the boundary: side tag plus parameter in [-1,1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint<F> {
    pub side: Side,
    pub t: F,
}

impl<F: Scalar> BoundaryPoint<F> {
    pub fn xy(&self) -> (F, F) {
        let one = F::one();
        match self.side {
            Side::Top => (self.t, one),
            Side::Bottom => (self.t, -one),
            Side::Left => (-one, self.t),
            Side::Right => (one, self.t),
        }
    }
}

/// Exponent triple for the boundary weights, plus whether the unit-mass
/// constants c_{α,γ}, c_{β,γ} multiply the side integrals.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryWeights<F> {
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub normalized: bool,
}

impl<F: Scalar> BoundaryWeights<F> {
    pub fn new(alpha: F, beta: F, gamma: F) -> Result<Self> {
        let neg_one = -F::one();
        if alpha <= neg_one || beta <= neg_one || gamma <= neg_one {
            return Err(Error::InvalidParam(
                "boundary exponents must exceed -1".into(),
            ));
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            normalized: true,
        })
    }

    /// Plain side integrals without the unit-mass constants; with
    /// α = β = -1/2 and γ = 0 this is arc length.
    pub fn unnormalized(alpha: F, beta: F, gamma: F) -> Result<Self> {
        Ok(Self {
            normalized: false,
            ..Self::new(alpha, beta, gamma)?
        })
    }
}

/// The sigma value tying the (δ1, δ2) parity class to the boundary weights:
/// σ_{δ1,δ2} = c_{β,γ} c_{α+δ1,γ} / (c_{α,γ} c_{β+δ2,γ}).
pub fn sigma_choice<F: Scalar>(d1: u8, d2: u8, w: &BoundaryWeights<F>) -> F {
    let one = F::one();
    let two = F::of(2.0);
    let mut sigma = F::one();
    if d1 == 1 {
        sigma = sigma * (w.gamma + w.alpha + two) / (w.alpha + one);
    }
    if d2 == 1 {
        sigma = sigma * (w.beta + one) / (w.gamma + w.beta + two);
    }
    sigma
}

/// The Y_{n,i} system: four wedge families, one per parity class.
#[derive(Debug, Clone)]
pub struct BoundaryBasis<F> {
    pub weights: BoundaryWeights<F>,
    /// indexed by δ1 + 2 δ2
    fam: [JacobiWedgeBasis<F>; 4],
}

/// Number of basis elements of degree n: 1, 2, 3, then 4 from degree 3 on.
pub fn dimension_at(n: usize) -> usize {
    (n + 1).min(4)
}

impl<F: Scalar> BoundaryBasis<F> {
    pub fn new(weights: BoundaryWeights<F>) -> Result<Self> {
        let mk = |d1: u8, d2: u8| -> Result<JacobiWedgeBasis<F>> {
            JacobiWedgeBasis::new(
                weights.alpha + F::of_usize(d1 as usize),
                weights.beta + F::of_usize(d2 as usize),
                weights.gamma,
                sigma_choice(d1, d2, &weights),
            )
        };
        Ok(Self {
            weights,
            fam: [mk(0, 0)?, mk(1, 0)?, mk(0, 1)?, mk(1, 1)?],
        })
    }

    pub fn family(&self, d1: u8, d2: u8) -> &JacobiWedgeBasis<F> {
        &self.fam[(d1 + 2 * d2) as usize]
    }

    pub fn valid_index(n: usize, i: usize) -> bool {
        i >= 1 && i <= dimension_at(n)
    }

    /// Evaluate Y_{n,i} at boundary coordinates.
    pub fn eval_y(&self, n: usize, i: usize, x: F, y: F) -> Result<F> {
        if !Self::valid_index(n, i) {
            return Err(Error::InvalidIndex(format!(
                "Y index (n={n}, i={i}) out of range; degree {n} has {} elements",
                dimension_at(n)
            )));
        }
        let (u, v) = (x * x, y * y);
        let val = match (n, i) {
            (0, _) => F::one(),
            (1, 1) => x,
            (1, _) => y,
            (2, 1) => self.family(0, 0).eval_p(1, u, v),
            (2, 2) => x * y,
            (2, _) => self.family(0, 0).eval_second(1, u, v),
            _ => {
                let m = n / 2;
                if n % 2 == 0 {
                    match i {
                        1 => self.family(0, 0).eval_p(m, u, v),
                        2 => self.family(0, 0).eval_second(m, u, v),
                        3 => x * y * self.family(1, 1).eval_p(m - 1, u, v),
                        _ => x * y * self.family(1, 1).eval_second(m - 1, u, v),
                    }
                } else {
                    match i {
                        1 => x * self.family(1, 0).eval_p(m, u, v),
                        2 => x * self.family(1, 0).eval_second(m, u, v),
                        3 => y * self.family(0, 1).eval_p(m, u, v),
                        _ => y * self.family(0, 1).eval_second(m, u, v),
                    }
                }
            }
        };
        Ok(val)
    }

    /// Separated representation: Y = x^{δ1} y^{δ2} * (u(x^2) + v(y^2)),
    /// which makes ∂x^2 ∂y^2 Y = 0 exact term by term.
    pub fn separated_y(&self, n: usize, i: usize) -> Result<(u8, u8, SeparatedPoly<F>)> {
        if !Self::valid_index(n, i) {
            return Err(Error::InvalidIndex(format!("(n={n}, i={i})")));
        }
        let unit = SeparatedPoly {
            ux: vec![F::one()],
            vy: vec![F::zero()],
        };
        let sep_p = |d1: u8, d2: u8, m: usize| SeparatedPoly::from_p_jacobi(self.family(d1, d2), m);
        let sep_second = |d1: u8, d2: u8, m: usize| {
            let fam = self.family(d1, d2);
            if fam.symmetric() {
                SeparatedPoly::from_q_sym_jacobi(fam, m)
            } else {
                SeparatedPoly::from_r_jacobi(fam, m)
            }
        };
        let out = match (n, i) {
            (0, _) => (0, 0, unit),
            (1, 1) => (1, 0, unit),
            (1, _) => (0, 1, unit),
            (2, 1) => (0, 0, sep_p(0, 0, 1)),
            (2, 2) => (1, 1, unit),
            (2, _) => (0, 0, sep_second(0, 0, 1)),
            _ => {
                let m = n / 2;
                if n % 2 == 0 {
                    match i {
                        1 => (0, 0, sep_p(0, 0, m)),
                        2 => (0, 0, sep_second(0, 0, m)),
                        3 => (1, 1, sep_p(1, 1, m - 1)),
                        _ => (1, 1, sep_second(1, 1, m - 1)),
                    }
                } else {
                    match i {
                        1 => (1, 0, sep_p(1, 0, m)),
                        2 => (1, 0, sep_second(1, 0, m)),
                        3 => (0, 1, sep_p(0, 1, m)),
                        _ => (0, 1, sep_second(0, 1, m)),
                    }
                }
            }
        };
        Ok(out)
    }
}

type XyFn<F> = Arc<dyn Fn(F, F) -> F + Send + Sync>;

/// A function on the boundary, stored as a function of planar coordinates.
#[derive(Clone)]
pub struct BoundaryFunction<F> {
    f: XyFn<F>,
}

impl<F: Scalar> BoundaryFunction<F> {
    pub fn from_xy(f: impl Fn(F, F) -> F + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f) }
    }

    pub fn eval(&self, x: F, y: F) -> F {
        (self.f)(x, y)
    }

    pub fn eval_at(&self, pt: &BoundaryPoint<F>) -> F {
        let (x, y) = pt.xy();
        self.eval(x, y)
    }
}

/// Side quadrature: nodes ±sqrt(u_i) from a Gauss--Jacobi rule on [0,1],
/// which integrates F against |t|^{2α+1}(1-t^2)^γ exactly for polynomial F.
fn side_rule<F: Scalar>(alpha: F, gamma: F, order: usize) -> Result<QuadratureRule<F>> {
    let base = gauss_jacobi_raw(order, &JacobiParams::new(alpha, gamma)?)?;
    let half = F::of(0.5);
    let mut nodes = Vec::with_capacity(2 * base.len());
    let mut weights = Vec::with_capacity(2 * base.len());
    for (&u, &w) in base.nodes.iter().zip(&base.weights) {
        let r = u.sqrt();
        nodes.push(-r);
        weights.push(half * w);
        nodes.push(r);
        weights.push(half * w);
    }
    Ok(QuadratureRule { nodes, weights })
}

/// The four-side weighted inner product.
pub fn inner_product_boundary<F: Scalar>(
    f: &BoundaryFunction<F>,
    g: &BoundaryFunction<F>,
    w: &BoundaryWeights<F>,
    order: usize,
) -> Result<F> {
    let horizontal = side_rule(w.alpha, w.gamma, order)?;
    let vertical = side_rule(w.beta, w.gamma, order)?;
    let (ch, cv) = if w.normalized {
        (
            jacobi_weight_normalizer(w.alpha, w.gamma),
            jacobi_weight_normalizer(w.beta, w.gamma),
        )
    } else {
        (F::one(), F::one())
    };
    let mut acc = F::zero();
    for side in Side::ALL {
        let (rule, c) = match side {
            Side::Top | Side::Bottom => (&horizontal, ch),
            Side::Left | Side::Right => (&vertical, cv),
        };
        for (idx, (&t, &wt)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
            let (x, y) = BoundaryPoint { side, t }.xy();
            let v = f.eval(x, y) * g.eval(x, y);
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    segment: side.name(),
                    node: idx,
                    t: t.to_f64().unwrap_or(f64::NAN),
                });
            }
            acc += c * wt * v;
        }
    }
    Ok(acc)
}

/// Parity components of a boundary function and the reduced G functions.
#[derive(Clone)]
pub struct ParityComponents<F> {
    f: BoundaryFunction<F>,
}

/// Split f into its four parity components.
pub fn parity_split<F: Scalar>(f: &BoundaryFunction<F>) -> ParityComponents<F> {
    ParityComponents { f: f.clone() }
}

impl<F: Scalar> ParityComponents<F> {
    fn quarter(&self, x: F, y: F, sx: F, sy: F) -> F {
        let q = F::of(0.25);
        q * (self.f.eval(x, y)
            + sx * self.f.eval(-x, y)
            + sy * self.f.eval(x, -y)
            + sx * sy * self.f.eval(-x, -y))
    }

    /// even in x, even in y
    pub fn f_ee(&self, x: F, y: F) -> F {
        self.quarter(x, y, F::one(), F::one())
    }

    /// even in x, odd in y
    pub fn f_eo(&self, x: F, y: F) -> F {
        self.quarter(x, y, F::one(), -F::one())
    }

    /// odd in x, even in y
    pub fn f_oe(&self, x: F, y: F) -> F {
        self.quarter(x, y, -F::one(), F::one())
    }

    /// odd in x, odd in y
    pub fn f_oo(&self, x: F, y: F) -> F {
        self.quarter(x, y, -F::one(), -F::one())
    }

    /// G_{δ1,δ2}(x,y) = x^{-δ1} y^{-δ2} F_{parity}; even in both variables.
    /// Undefined where a divided coordinate vanishes, which quadrature nodes
    /// avoid by construction.
    pub fn g(&self, d1: u8, d2: u8, x: F, y: F) -> F {
        match (d1, d2) {
            (0, 0) => self.f_ee(x, y),
            (0, 1) => self.f_eo(x, y) / y,
            (1, 0) => self.f_oe(x, y) / x,
            (1, 1) => self.f_oo(x, y) / (x * y),
            _ => panic!("parity indices are 0 or 1"),
        }
    }

    /// f = G_00 + y G_01 + x G_10 + xy G_11, exact wherever the G's exist.
    pub fn reconstruct(&self, x: F, y: F) -> F {
        self.g(0, 0, x, y)
            + y * self.g(0, 1, x, y)
            + x * self.g(1, 0, x, y)
            + x * y * self.g(1, 1, x, y)
    }

    /// Wedge restriction of G_{δ1,δ2} ∘ ψ, where ψ(u,v) = (sqrt u, sqrt v).
    pub fn wedge_component(&self, d1: u8, d2: u8) -> Result<WedgeFunction<F>> {
        let me_top = self.clone();
        let me_right = self.clone();
        WedgeFunction::new(
            move |u: F| me_top.g(d1, d2, u.sqrt(), F::one()),
            move |v: F| me_right.g(d1, d2, F::one(), v.sqrt()),
        )
    }
}

/// Direct boundary expansion: coefficients against every Y_{k,i}, k <= n_max.
#[derive(Debug, Clone)]
pub struct BoundaryExpansion<F> {
    pub n_max: usize,
    /// coeffs[k][i-1]
    pub coeffs: Vec<Vec<F>>,
    pub norms: Vec<Vec<F>>,
}

pub fn expand_boundary<F: Scalar>(
    basis: &BoundaryBasis<F>,
    f: &BoundaryFunction<F>,
    n_max: usize,
    order: usize,
) -> Result<BoundaryExpansion<F>> {
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut norms = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row_c = Vec::new();
        let mut row_n = Vec::new();
        for i in 1..=dimension_at(n) {
            let b = basis.clone();
            let yf = BoundaryFunction::from_xy(move |x, y| b.eval_y(n, i, x, y).unwrap());
            let num = inner_product_boundary(f, &yf, &basis.weights, order)?;
            let den = inner_product_boundary(&yf, &yf, &basis.weights, order)?;
            row_c.push(num / den);
            row_n.push(den);
        }
        coeffs.push(row_c);
        norms.push(row_n);
    }
    Ok(BoundaryExpansion {
        n_max,
        coeffs,
        norms,
    })
}

impl<F: Scalar> BoundaryExpansion<F> {
    /// Truncated expansion value at degree n.
    pub fn eval(&self, basis: &BoundaryBasis<F>, n: usize, x: F, y: F) -> Result<F> {
        let mut acc = F::zero();
        for k in 0..=n.min(self.n_max) {
            for i in 1..=dimension_at(k) {
                acc += self.coeffs[k][i - 1] * basis.eval_y(k, i, x, y)?;
            }
        }
        Ok(acc)
    }
}

/// Partial sum assembled from four wedge partial sums of the parity
/// components, following the even/odd order bookkeeping.
pub fn partial_sum_boundary<F: Scalar>(
    basis: &BoundaryBasis<F>,
    f: &BoundaryFunction<F>,
    n: usize,
    x: F,
    y: F,
    order: usize,
) -> Result<F> {
    let parts = parity_split(f);
    let m = n / 2;
    // wedge truncation order per parity class; None encodes an empty sum
    let orders: [Option<usize>; 4] = if n % 2 == 0 {
        [
            Some(m),
            m.checked_sub(1),
            m.checked_sub(1),
            m.checked_sub(1),
        ]
    } else {
        [Some(m), Some(m), Some(m), m.checked_sub(1)]
    };
    // class order: (δ1,δ2) = (0,0), (0,1), (1,0), (1,1)
    let class: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let prefactor = |d1: u8, d2: u8| -> F {
        let mut p = F::one();
        if d1 == 1 {
            p = p * x;
        }
        if d2 == 1 {
            p = p * y;
        }
        p
    };
    let (u, v) = (x * x, y * y);
    let wedge_pt = if y.abs() == F::one() {
        WedgePoint::top(u)
    } else {
        WedgePoint::right(v)
    };
    let mut acc = F::zero();
    for (idx, &(d1, d2)) in class.iter().enumerate() {
        let Some(trunc) = orders[idx] else { continue };
        let g = parts.wedge_component(d1, d2)?;
        let fam = basis.family(d1, d2);
        let exp: WedgeExpansion<F> = crate::wedge::expand_jacobi(fam, &g, trunc, order)?;
        acc += prefactor(d1, d2) * exp.eval_at(fam, trunc, &wedge_pt);
    }
    Ok(acc)
}
