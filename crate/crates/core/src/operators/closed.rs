//! Closed-form recurrence rows for multiplication by (1-x) in the wedge
//! basis [P_0; P_1,Q_1; P_2,Q_2; ...] at beta = alpha, sigma = 1, with the
//! prefactor-free antisymmetric Q normalization.
//!
//! The coefficients are rational functions of (alpha, gamma, n), so the rows
//! are generic over any field scalar; instantiating with `BigRational`
//! yields exact entries for rational parameters.

use num_traits::{FromPrimitive, Num};
use std::ops::Neg;

/// Field scalar the closed forms are written against.
pub trait FieldScalar: Clone + Num + Neg<Output = Self> + FromPrimitive {}
impl<T> FieldScalar for T where T: Clone + Num + Neg<Output = Self> + FromPrimitive {}

/// The two families at each degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Family {
    P,
    Q,
}

pub const FAMILIES: [Family; 2] = [Family::P, Family::Q];

/// Expansion of (1-x) * (element of degree n) over the neighbouring degrees:
/// coefficient order within each block is [P, Q]. Slots that do not exist
/// (Q_0, or the whole lower block at n = 0) hold zero.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorRow<T> {
    pub lower: [T; 2],
    pub diag: [T; 2],
    pub upper: [T; 2],
}

impl<T: FieldScalar> OperatorRow<T> {
    fn zero() -> Self {
        Self {
            lower: [T::zero(), T::zero()],
            diag: [T::zero(), T::zero()],
            upper: [T::zero(), T::zero()],
        }
    }
}

fn int<T: FieldScalar>(v: i64) -> T {
    T::from_i64(v).expect("small integer embeds in field scalar")
}

/// Closed-form row of (1-x) * P_n or (1-x) * Q_n.
pub fn one_minus_x_closed<T: FieldScalar>(alpha: T, gamma: T, n: usize, fam: Family) -> OperatorRow<T> {
    let a = alpha;
    let g = gamma;
    let one: T = T::one();
    let two: T = int(2);
    let s = a.clone() + g.clone(); // alpha + gamma
    let mut row = OperatorRow::zero();
    match (fam, n) {
        (Family::P, 0) => {
            // (1-x) P_0 = 1/2 Q_1 - P_1 / (2(2+γ+α)) + (1+γ) P_0 / (2(2+γ+α))
            let d = two.clone() * (two.clone() + s.clone());
            row.upper[1] = one.clone() / two.clone();
            row.upper[0] = -(one.clone() / d.clone());
            row.diag[0] = (one.clone() + g.clone()) / d;
        }
        (Family::Q, 0) => panic!("Q_0 does not exist"),
        (Family::P, 1) => {
            let s2 = two.clone() + s.clone();
            let s3 = int::<T>(3) + s.clone();
            let s4 = int::<T>(4) + s.clone();
            row.upper[1] = s2.clone() / (two.clone() * s4.clone());
            row.upper[0] = -(s2.clone() / (s3.clone() * s4.clone()));
            row.diag[1] = -((one.clone() + a.clone()) / s4.clone());
            row.diag[0] = (int::<T>(4)
                + int::<T>(3) * a.clone()
                + g.clone() * (int::<T>(3) + g.clone() + a.clone()))
                / (two.clone() * s2.clone() * s4.clone());
            row.lower[0] = -((one.clone() + g.clone()) * (one.clone() + a.clone())
                / (two.clone() * s2 * s3));
        }
        (Family::Q, 1) => {
            let s2 = two.clone() + s.clone();
            let s3 = int::<T>(3) + s.clone();
            let s4 = int::<T>(4) + s.clone();
            row.upper[1] = -(one.clone() / (two.clone() * s4.clone()));
            row.upper[0] = one.clone() / (s3.clone() * s4.clone());
            row.diag[1] = (int::<T>(3) + g.clone()) / (two.clone() * s4.clone());
            row.diag[0] = -((two.clone() + g.clone()) / (s2.clone() * s4));
            row.lower[0] =
                (one.clone() + g.clone()) * (two.clone() + g.clone()) / (two.clone() * s2 * s3);
        }
        (Family::P, n) => {
            let nf: T = int(n as i64);
            let s1n = one.clone() + s.clone() + nf.clone(); // 1+γ+α+n
            let s2n = nf.clone() + s.clone() + two.clone(); // n+γ+α+2
            let t0 = s.clone() + two.clone() * nf.clone(); // γ+α+2n
            let t1 = one.clone() + t0.clone(); // 1+γ+α+2n
            let t2 = two.clone() + t0.clone(); // 2+γ+α+2n
            row.upper[1] = s1n.clone() * s2n.clone() / (two.clone() * t1.clone() * t2.clone());
            row.upper[0] =
                -(s1n.clone() * (nf.clone() + one.clone()) / (two.clone() * t1.clone() * t2.clone()));
            // the t1 factor in the printed numerator cancels one in the denominator
            row.diag[1] = -((a.clone() + nf.clone()) * s1n.clone() / (t2.clone() * t0.clone()));
            row.diag[0] = ((one.clone() + g.clone()) * s.clone()
                + two.clone() * (one.clone() + s.clone()) * nf.clone()
                + two.clone() * nf.clone() * nf.clone())
                / (two.clone() * t2 * t0.clone());
            row.lower[1] = (nf.clone() + a.clone()) * (nf.clone() + a.clone() - one.clone())
                / (two.clone() * t1.clone() * t0.clone());
            row.lower[0] =
                -((nf.clone() + a.clone()) * (nf.clone() + g.clone()) / (two.clone() * t1 * t0));
        }
        (Family::Q, n) => {
            let nf: T = int(n as i64);
            let t0 = s.clone() + two.clone() * nf.clone(); // γ+α+2n
            let t1 = one.clone() + t0.clone(); // 2n+γ+α+1
            let t2 = two.clone() + t0.clone(); // 2+γ+α+2n
            let gn = one.clone() + g.clone() + nf.clone(); // 1+γ+n
            row.upper[1] = -(nf.clone() * (two.clone() + s.clone() + nf.clone())
                / (two.clone() * t2.clone() * t1.clone()));
            row.upper[0] =
                nf.clone() * (one.clone() + nf.clone()) / (two.clone() * t2.clone() * t1.clone());
            row.diag[1] = ((one.clone() + g.clone()) * (two.clone() + s.clone())
                + two.clone() * (one.clone() + s.clone()) * nf.clone()
                + two.clone() * nf.clone() * nf.clone())
                / (two.clone() * t0.clone() * t2.clone());
            row.diag[0] = -(nf.clone() * gn.clone() / (t0.clone() * t2));
            row.lower[1] =
                -(gn.clone() * (a.clone() + nf.clone() - one.clone()) / (two.clone() * t0.clone() * t1.clone()));
            row.lower[0] = gn.clone() * (g.clone() + nf.clone()) / (two.clone() * t0 * t1);
        }
    }
    row
}
