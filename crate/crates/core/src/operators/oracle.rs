//! Quadrature oracle for the multiplication rows: project (1-x) times a
//! basis element onto the basis directly. This path is the authoritative
//! source of operator entries; the closed forms are a fast path validated
//! against it.

use crate::error::Result;
use crate::operators::closed::{Family, OperatorRow};
use crate::scalar::Scalar;
use crate::univariate::{JacobiParams, WeightSpec};
use crate::wedge::JacobiWedgeBasis;

fn basis_eval<F: Scalar>(b: &JacobiWedgeBasis<F>, fam: Family, n: usize, x: F, y: F) -> F {
    match fam {
        Family::P => b.eval_p(n, x, y),
        Family::Q => b.eval_q_sym(n, x, y),
    }
}

fn basis_norm<F: Scalar>(
    b: &JacobiWedgeBasis<F>,
    rule: &crate::univariate::QuadratureRule<F>,
    fam: Family,
    n: usize,
) -> F {
    // quadrature norm over both segments; by the segment symmetries both
    // contribute the same amount, so integrate the top one twice
    let two = F::of(2.0);
    two * rule.integrate(|t| {
        let v = basis_eval(b, fam, n, t, F::one());
        v * v
    })
}

/// Projection coefficients of (1-x) * (element n of `fam`) onto degrees
/// m = n-1, n, n+1. The right-segment integral vanishes since 1-x = 0 there.
pub fn one_minus_x_oracle<F: Scalar>(
    alpha: F,
    gamma: F,
    n: usize,
    fam: Family,
    order: usize,
) -> Result<OperatorRow<F>> {
    let basis = JacobiWedgeBasis::new(alpha, alpha, gamma, F::one())?;
    let rule = WeightSpec::jacobi(JacobiParams::new(alpha, gamma)?).rule(order)?;
    let one = F::one();
    let mut row = OperatorRow {
        lower: [F::zero(), F::zero()],
        diag: [F::zero(), F::zero()],
        upper: [F::zero(), F::zero()],
    };
    let set = |slot: &mut F, tf: Family, m: usize| {
        let num = rule.integrate(|t| {
            (one - t) * basis_eval(&basis, fam, n, t, one) * basis_eval(&basis, tf, m, t, one)
        });
        let den = basis_norm(&basis, &rule, tf, m);
        *slot = num / den;
    };
    if n >= 1 {
        set(&mut row.lower[0], Family::P, n - 1);
        if n >= 2 {
            set(&mut row.lower[1], Family::Q, n - 1);
        }
    }
    set(&mut row.diag[0], Family::P, n);
    if n >= 1 {
        set(&mut row.diag[1], Family::Q, n);
    }
    set(&mut row.upper[0], Family::P, n + 1);
    set(&mut row.upper[1], Family::Q, n + 1);
    Ok(row)
}

/// Projections of (1-x) * (element n) onto degrees outside the three
/// neighbouring blocks; all must vanish (block-tridiagonality witness).
pub fn distant_projection_max<F: Scalar>(
    alpha: F,
    gamma: F,
    n: usize,
    fam: Family,
    n_probe: usize,
    order: usize,
) -> Result<F> {
    let basis = JacobiWedgeBasis::new(alpha, alpha, gamma, F::one())?;
    let rule = WeightSpec::jacobi(JacobiParams::new(alpha, gamma)?).rule(order)?;
    let one = F::one();
    let mut worst = F::zero();
    for m in 0..=n_probe {
        if m + 1 >= n && m <= n + 1 {
            continue;
        }
        for tf in [Family::P, Family::Q] {
            if m == 0 && tf == Family::Q {
                continue;
            }
            let num = rule.integrate(|t| {
                (one - t) * basis_eval(&basis, fam, n, t, one) * basis_eval(&basis, tf, m, t, one)
            });
            let den = basis_norm(&basis, &rule, tf, m);
            worst = worst.max((num / den).abs());
        }
    }
    Ok(worst)
}
