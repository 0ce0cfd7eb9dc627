//! Complete orthogonal system on [-1,1]^2 for weights of the form
//! W(x,y) = w(max{|x|,|y|}).
//!
//! In the radial-boundary coordinates (x,y) = (s ξ, s η), s = max{|x|,|y|},
//! the double integral factors into a radial integral against s w(s) and an
//! arc integral over the square boundary. Basis elements combine a radial
//! orthogonal polynomial against t^{2(n-k)+1} w(t) with a boundary element
//! Y_{n-k,i} for the arc-length weights (α = β = -1/2, γ = 0); they are
//! polynomials in (s, ξ, η) but not in (x, y).

use std::sync::Arc;

use crate::boundary::{dimension_at, BoundaryBasis, BoundaryWeights, Side};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::univariate::{gauss_jacobi_raw, JacobiParams, OrthoPoly1D, QuadratureRule, WeightSpec};

/// Radial-boundary coordinates of a point of the square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareRadialCoords<F> {
    pub s: F,
    pub xi: F,
    pub eta: F,
}

/// s = max{|x|,|y|}, (ξ, η) = (x, y)/s; the origin has no direction.
pub fn to_radial<F: Scalar>(x: F, y: F) -> Result<SquareRadialCoords<F>> {
    let s = x.abs().max(y.abs());
    if s == F::zero() {
        return Err(Error::InvalidParam(
            "the origin has no radial decomposition".into(),
        ));
    }
    Ok(SquareRadialCoords {
        s,
        xi: x / s,
        eta: y / s,
    })
}

/// Index triple of an interior basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct InteriorIndex {
    pub n: usize,
    pub k: usize,
    pub i: usize,
}

/// The Q^n_{k,i} system for a radial weight profile w on [0,1].
pub struct InteriorBasis<F> {
    weight: WeightSpec<F>,
    angular: BoundaryBasis<F>,
    /// radial families per angular degree j = n-k, against t^{2j+1} w(t)
    radial: Vec<OrthoPoly1D<F>>,
    n_max: usize,
}

impl<F: Scalar> InteriorBasis<F> {
    pub fn new(weight: WeightSpec<F>, n_max: usize) -> Result<Self> {
        let half = F::of(0.5);
        let angular = BoundaryBasis::new(BoundaryWeights::unnormalized(-half, -half, F::zero())?)?;
        let order = 2 * (n_max + 8);
        let mut radial = Vec::with_capacity(n_max + 1);
        for j in 0..=n_max {
            let base = gauss_jacobi_raw(
                order,
                &JacobiParams::new(F::of_usize(2 * j + 1), F::zero())?,
            )?;
            let w = weight.clone();
            let rule = base.with_weight(move |t| w.eval(t));
            let w2 = weight.clone();
            let spec = WeightSpec::general(move |t: F| {
                t.powi((2 * j + 1) as i32) * w2.eval(t)
            });
            radial.push(OrthoPoly1D::stieltjes(spec, n_max, rule)?);
        }
        Ok(Self {
            weight,
            angular,
            radial,
            n_max,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn weight(&self) -> &WeightSpec<F> {
        &self.weight
    }

    /// Radial family for angular degree j, orthogonal against t^{2j+1} w(t).
    pub fn radial_family(&self, j: usize) -> &OrthoPoly1D<F> {
        &self.radial[j]
    }

    pub fn angular_basis(&self) -> &BoundaryBasis<F> {
        &self.angular
    }

    pub fn valid_index(idx: &InteriorIndex) -> bool {
        idx.k <= idx.n && idx.i >= 1 && idx.i <= dimension_at(idx.n - idx.k)
    }

    /// All index triples with n <= n_max, in (n, k, i) order.
    pub fn indices(&self, n_max: usize) -> Vec<InteriorIndex> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            for k in 0..=n {
                for i in 1..=dimension_at(n - k) {
                    out.push(InteriorIndex { n, k, i });
                }
            }
        }
        out
    }

    /// Q^n_{k,i}(x,y) = P_{k,2(n-k)}(s) s^{n-k} Y_{n-k,i}(x/s, y/s).
    pub fn eval_q(&self, idx: &InteriorIndex, x: F, y: F) -> Result<F> {
        if !Self::valid_index(idx) {
            return Err(Error::InvalidIndex(format!(
                "interior index (n={}, k={}, i={}) invalid",
                idx.n, idx.k, idx.i
            )));
        }
        if idx.n > self.n_max {
            return Err(Error::InvalidIndex(format!(
                "degree {} beyond construction order {}",
                idx.n, self.n_max
            )));
        }
        let j = idx.n - idx.k;
        let c = to_radial(x, y)?;
        let radial = self.radial[j].eval(idx.k, c.s);
        let angular = self.angular.eval_y(j, idx.i, c.xi, c.eta)?;
        Ok(radial * c.s.powi(j as i32) * angular)
    }

    /// Tensor norm <Q,Q>_W = (radial norm) x (arc norm of Y over dσ).
    pub fn norm_q(&self, idx: &InteriorIndex, angular_order: usize) -> Result<F> {
        let j = idx.n - idx.k;
        let radial = self.radial[j].norm(idx.k);
        let ang = self.angular_norm(j, idx.i, angular_order)?;
        Ok(radial * ang)
    }

    fn angular_norm(&self, m: usize, i: usize, order: usize) -> Result<F> {
        let b = self.angular.clone();
        let yf = crate::boundary::BoundaryFunction::from_xy(move |x, y| {
            b.eval_y(m, i, x, y).unwrap()
        });
        crate::boundary::inner_product_boundary(&yf, &yf, &self.angular.weights, order)
    }

    /// Expansion coefficients of f against every element with n <= n_max.
    pub fn expand(
        &self,
        f: &SquareFunction<F>,
        n_max: usize,
        radial_order: usize,
        angular_order: usize,
    ) -> Result<Vec<(InteriorIndex, F)>> {
        let mut out = Vec::new();
        for idx in self.indices(n_max) {
            let num = self.inner_product_with_basis(f, &idx, radial_order, angular_order)?;
            let den = self.norm_q(&idx, angular_order)?;
            out.push((idx, num / den));
        }
        Ok(out)
    }

    fn inner_product_with_basis(
        &self,
        f: &SquareFunction<F>,
        idx: &InteriorIndex,
        radial_order: usize,
        angular_order: usize,
    ) -> Result<F> {
        let me = self;
        inner_product_square_with(
            &|x, y| f.eval(x, y),
            &|x, y| me.eval_q(idx, x, y).unwrap(),
            &self.weight,
            radial_order,
            angular_order,
        )
    }

    /// Full Gram matrix of all elements with n <= n_max.
    pub fn gram(
        &self,
        n_max: usize,
        radial_order: usize,
        angular_order: usize,
    ) -> Result<(Vec<InteriorIndex>, Vec<Vec<F>>)> {
        let idx = self.indices(n_max);
        let (rad, sides) = tensor_rules(&self.weight, radial_order, angular_order)?;
        // evaluate every element on the tensor grid once
        let mut values: Vec<Vec<F>> = Vec::with_capacity(idx.len());
        let mut measures = Vec::new();
        let mut points = Vec::new();
        for (&s, &rw) in rad.nodes.iter().zip(&rad.weights) {
            for (rule, side) in &sides {
                for (&t, &aw) in rule.nodes.iter().zip(&rule.weights) {
                    let (xi, eta) = crate::boundary::BoundaryPoint { side: *side, t }.xy();
                    points.push((s * xi, s * eta));
                    measures.push(rw * aw);
                }
            }
        }
        for id in &idx {
            let row: Vec<F> = points
                .iter()
                .map(|&(x, y)| self.eval_q(id, x, y).unwrap())
                .collect();
            values.push(row);
        }
        let mut gram = vec![vec![F::zero(); idx.len()]; idx.len()];
        for a in 0..idx.len() {
            for b in a..idx.len() {
                let mut acc = F::zero();
                for ((va, vb), &mu) in values[a].iter().zip(&values[b]).zip(&measures) {
                    acc += mu * *va * *vb;
                }
                gram[a][b] = acc;
                gram[b][a] = acc;
            }
        }
        Ok((idx, gram))
    }
}

type XyFn<F> = Arc<dyn Fn(F, F) -> F + Send + Sync>;

/// A function on the square.
#[derive(Clone)]
pub struct SquareFunction<F> {
    f: XyFn<F>,
}

impl<F: Scalar> SquareFunction<F> {
    pub fn from_xy(f: impl Fn(F, F) -> F + Send + Sync + 'static) -> Self {
        Self { f: Arc::new(f) }
    }

    pub fn eval(&self, x: F, y: F) -> F {
        (self.f)(x, y)
    }
}

fn tensor_rules<F: Scalar>(
    w: &WeightSpec<F>,
    radial_order: usize,
    angular_order: usize,
) -> Result<(QuadratureRule<F>, Vec<(QuadratureRule<F>, Side)>)> {
    // radial rule against s w(s) ds on [0,1]
    let base = gauss_jacobi_raw(radial_order, &JacobiParams::new(F::one(), F::zero())?)?;
    let wc = w.clone();
    let rad = base.with_weight(move |s| wc.eval(s));
    // plain Legendre per boundary side, mapped to [-1,1]
    let leg01 = gauss_jacobi_raw(angular_order, &JacobiParams::new(F::zero(), F::zero())?)?;
    let two = F::of(2.0);
    let leg = QuadratureRule {
        nodes: leg01.nodes.iter().map(|&u| two * u - F::one()).collect(),
        weights: leg01.weights.iter().map(|&v| two * v).collect(),
    };
    let sides = Side::ALL.iter().map(|&s| (leg.clone(), s)).collect();
    Ok((rad, sides))
}

/// Inner product against W(x,y) = w(max{|x|,|y|}) by the tensor
/// (radial x arc) quadrature of the factorized integral.
pub fn inner_product_square_with<F: Scalar>(
    f: &dyn Fn(F, F) -> F,
    g: &dyn Fn(F, F) -> F,
    w: &WeightSpec<F>,
    radial_order: usize,
    angular_order: usize,
) -> Result<F> {
    let (rad, sides) = tensor_rules(w, radial_order, angular_order)?;
    let mut acc = F::zero();
    for (&s, &rw) in rad.nodes.iter().zip(&rad.weights) {
        let mut ring = F::zero();
        for (rule, side) in &sides {
            for (&t, &aw) in rule.nodes.iter().zip(&rule.weights) {
                let (xi, eta) = crate::boundary::BoundaryPoint { side: *side, t }.xy();
                let v = f(s * xi, s * eta) * g(s * xi, s * eta);
                if !v.is_finite() {
                    return Err(Error::NonFinite {
                        segment: side.name(),
                        node: 0,
                        t: t.to_f64().unwrap_or(f64::NAN),
                    });
                }
                ring += aw * v;
            }
        }
        acc += rw * ring;
    }
    Ok(acc)
}

pub fn inner_product_square<F: Scalar>(
    f: &SquareFunction<F>,
    g: &SquareFunction<F>,
    w: &WeightSpec<F>,
    radial_order: usize,
    angular_order: usize,
) -> Result<F> {
    inner_product_square_with(&|x, y| f.eval(x, y), &|x, y| g.eval(x, y), w, radial_order, angular_order)
}

/// Independent 2-D oracle: integrate h(x,y) w(max{|x|,|y|}) over the square
/// by splitting into the 8 triangles on which the max is a smooth coordinate.
pub fn integrate_square_direct<F: Scalar>(
    h: &dyn Fn(F, F) -> F,
    w: &WeightSpec<F>,
    order: usize,
) -> Result<F> {
    let leg = gauss_jacobi_raw(order, &JacobiParams::new(F::zero(), F::zero())?)?;
    let signs = [F::one(), -F::one()];
    let mut acc = F::zero();
    for &sx in &signs {
        for &sy in &signs {
            // region |y| < |x|: outer x in (0,1), inner y in (0,x)
            for (&xo, &wo) in leg.nodes.iter().zip(&leg.weights) {
                let wx = w.eval(xo);
                let mut inner = F::zero();
                for (&yi, &wi) in leg.nodes.iter().zip(&leg.weights) {
                    inner += wi * h(sx * xo, sy * yi * xo);
                }
                acc += wo * wx * inner * xo;
                // region |x| < |y| by symmetry of the splitting
                let wy = w.eval(xo);
                let mut inner2 = F::zero();
                for (&xi, &wi) in leg.nodes.iter().zip(&leg.weights) {
                    inner2 += wi * h(sx * xi * xo, sy * xo);
                }
                acc += wo * wy * inner2 * xo;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_weight() -> WeightSpec<f64> {
        WeightSpec::jacobi_raw(JacobiParams::new(0.0, 0.0).unwrap())
    }

    fn linear_weight() -> WeightSpec<f64> {
        WeightSpec::jacobi_raw(JacobiParams::new(1.0, 0.0).unwrap())
    }

    #[test]
    fn radial_coordinates() {
        let c = to_radial(0.5f64, 0.25).unwrap();
        assert_eq!((c.s, c.xi, c.eta), (0.5, 1.0, 0.5));
        let c = to_radial(-0.3f64, 0.3).unwrap();
        assert!((c.s - 0.3).abs() < 1e-16);
        assert_eq!((c.xi, c.eta), (-1.0, 1.0));
        let c = to_radial(0.2f64, -0.8).unwrap();
        assert_eq!((c.s, c.xi, c.eta), (0.8, 0.25, -1.0));
        assert!(to_radial(0.0f64, 0.0).is_err());
        // round trip
        let (x, y) = (0.37f64, -0.92);
        let c = to_radial(x, y).unwrap();
        assert_eq!((c.s * c.xi, c.s * c.eta), (x, y));
    }

    #[test]
    fn factorized_integral_identities() {
        let w = unit_weight();
        let one = SquareFunction::from_xy(|_, _| 1.0);
        let area = inner_product_square(&one, &one, &w, 16, 16).unwrap();
        assert!((area - 4.0).abs() < 1e-12);

        let fx = SquareFunction::from_xy(|x: f64, _| x);
        let tensor = inner_product_square(&fx, &fx, &w, 16, 16).unwrap();
        assert!((tensor - 4.0 / 3.0).abs() < 1e-12);
        let direct = integrate_square_direct(&|x, _y| x * x, &w, 24).unwrap();
        assert!((tensor - direct).abs() < 1e-12);
    }

    #[test]
    fn tensor_matches_direct_oracle_smooth() {
        let w = linear_weight();
        let h = |x: f64, y: f64| (x + 0.3 * y).exp() * (1.0 + x * y);
        let tensor =
            inner_product_square_with(&h, &|_, _| 1.0, &w, 40, 40).unwrap();
        let direct = integrate_square_direct(&h, &w, 60).unwrap();
        assert!(
            (tensor - direct).abs() < 1e-9 * direct.abs().max(1.0),
            "{tensor} vs {direct}"
        );
    }

    #[test]
    fn low_order_elements() {
        let basis = InteriorBasis::new(unit_weight(), 4).unwrap();
        let q0 = InteriorIndex { n: 0, k: 0, i: 1 };
        let q1 = InteriorIndex { n: 1, k: 0, i: 1 };
        for &(x, y) in &[(0.3f64, 0.2), (-0.7, 0.1), (0.4, -0.9)] {
            assert!((basis.eval_q(&q0, x, y).unwrap() - 1.0).abs() < 1e-14);
            // radial P_0 = 1 and s * Y_{1,1}(ξ,η) = s ξ = x
            assert!((basis.eval_q(&q1, x, y).unwrap() - x).abs() < 1e-13);
        }
        // k = n: pure radial polynomial of the plain radial weight s w(s)
        let q22 = InteriorIndex { n: 2, k: 2, i: 1 };
        let s = 0.63f64;
        let got = basis.eval_q(&q22, s, s * 0.4).unwrap();
        let want = basis.radial_family(0).eval(2, s);
        assert!((got - want).abs() < 1e-13);
    }

    #[test]
    fn invalid_indices_rejected() {
        let basis = InteriorBasis::new(unit_weight(), 3).unwrap();
        assert!(basis
            .eval_q(&InteriorIndex { n: 2, k: 3, i: 1 }, 0.3, 0.1)
            .is_err());
        assert!(basis
            .eval_q(&InteriorIndex { n: 3, k: 0, i: 5 }, 0.3, 0.1)
            .is_err());
        // n - k = 1 admits two angular elements only
        assert!(basis
            .eval_q(&InteriorIndex { n: 2, k: 1, i: 3 }, 0.3, 0.1)
            .is_err());
    }

    #[test]
    fn gram_diagonal_for_two_weights() {
        for w in [unit_weight(), linear_weight()] {
            let basis = InteriorBasis::new(w, 3).unwrap();
            let (idx, gram) = basis.gram(3, 24, 24).unwrap();
            for a in 0..idx.len() {
                for b in 0..idx.len() {
                    if a == b {
                        assert!(gram[a][a] > 0.0);
                    } else {
                        let rel = gram[a][b] / (gram[a][a] * gram[b][b]).sqrt();
                        assert!(
                            rel.abs() < 1e-9,
                            "{:?} x {:?}: rel {rel}",
                            idx[a],
                            idx[b]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cross_degree_orthogonality_example() {
        let basis = InteriorBasis::new(unit_weight(), 4).unwrap();
        let a = InteriorIndex { n: 2, k: 1, i: 1 };
        let b = InteriorIndex { n: 3, k: 1, i: 1 };
        let ip = inner_product_square_with(
            &|x, y| basis.eval_q(&a, x, y).unwrap(),
            &|x, y| basis.eval_q(&b, x, y).unwrap(),
            basis.weight(),
            24,
            24,
        )
        .unwrap();
        assert!(ip.abs() < 1e-10, "{ip}");
    }

    #[test]
    fn diagonal_factorizes_radial_times_angular() {
        let basis = InteriorBasis::new(linear_weight(), 3).unwrap();
        let (idx, gram) = basis.gram(3, 30, 30).unwrap();
        for (pos, id) in idx.iter().enumerate() {
            let want = basis.norm_q(id, 30).unwrap();
            let got = gram[pos][pos];
            assert!(
                (got - want).abs() < 1e-10 * want,
                "{id:?}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn desk_scale_completeness() {
        let basis = InteriorBasis::new(unit_weight(), 6).unwrap();
        // functions s^{m+r} Y_{m,i}(ξ,η) with total degree <= 6 lie in the span
        let cases = [(0usize, 0usize, 1usize), (1, 2, 2), (2, 1, 3), (3, 2, 1)];
        for &(m, r, i) in &cases {
            if i > dimension_at(m) {
                continue;
            }
            let ang = basis.angular_basis().clone();
            let f = SquareFunction::from_xy(move |x: f64, y: f64| {
                let c = to_radial(x, y).unwrap();
                c.s.powi((m + r) as i32) * ang.eval_y(m, i, c.xi, c.eta).unwrap()
            });
            let coeffs = basis.expand(&f, 6, 30, 30).unwrap();
            for &(x, y) in &[(0.41f64, 0.13), (-0.2, 0.77), (0.6, -0.6)] {
                let mut acc = 0.0;
                for (id, c) in &coeffs {
                    acc += c * basis.eval_q(id, x, y).unwrap();
                }
                let want = f.eval(x, y);
                assert!(
                    (acc - want).abs() < 1e-9 * want.abs().max(1.0),
                    "(m,r,i)=({m},{r},{i}) at ({x},{y}): {acc} vs {want}"
                );
            }
        }
    }
}
