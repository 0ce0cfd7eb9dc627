//! Cauchy/Stieltjes transforms of the weighted wedge basis,
//! S[f w](z) = ∫_Ω f(x,y) w / (z - (x+iy)) ds, evaluated through the
//! block-tridiagonal recurrence the transforms share with the basis:
//! unstable forward recurrence (kept for demonstration), a block Olver
//! boundary-value solve off the contour, and a three-solution Olver--Miller
//! scheme on or near it.

mod base;
mod solve;

pub use base::{stieltjes_base, stieltjes_oracle, total_mass};
pub use solve::{forward_recurrence, olver_miller_solve, olver_solve, solution_residual, solve, BandedLU};

use num_complex::Complex64;

use crate::error::Result;
use crate::operators::{build_jacobi_operators, BlockTriDiag};

/// Solver selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Mode {
    Forward,
    Olver,
    OlverMiller,
    Auto,
}

/// A transform evaluation request; beta = alpha and sigma = 1 throughout.
#[derive(Debug, Clone, Copy)]
pub struct StieltjesQuery {
    pub alpha: f64,
    pub gamma: f64,
    pub z: Complex64,
    pub k_max: usize,
    pub mode: Mode,
}

/// Transform values per degree: slot [0] is the P component, slot [1] the
/// Q component (unused at degree 0).
#[derive(Debug, Clone)]
pub struct StieltjesSolution {
    pub values: Vec<[Complex64; 2]>,
    pub mode_used: Mode,
    pub n_used: usize,
}

/// One tail solution of the homogeneous interior equations.
#[derive(Debug, Clone)]
pub struct TailSolution {
    /// q[0] = (q_0, 0); q[k] the 2-vector at degree k.
    pub q: Vec<[Complex64; 2]>,
}

/// Complexified operator blocks A^z = A^x + i A^y etc.
#[derive(Debug, Clone)]
pub struct ComplexBlocks {
    pub n_max: usize,
    pub a: Vec<[[Complex64; 2]; 2]>,
    pub b: Vec<[[Complex64; 2]; 2]>,
    pub c: Vec<[[Complex64; 2]; 2]>,
}

fn combine(x: &[[f64; 2]; 2], y: &[[f64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = Complex64::new(x[i][j], y[i][j]);
        }
    }
    out
}

impl ComplexBlocks {
    pub fn from_operators(jx: &BlockTriDiag<f64>, jy: &BlockTriDiag<f64>) -> Self {
        let n_max = jx.n_max;
        Self {
            n_max,
            a: (0..=n_max).map(|n| combine(&jx.a[n], &jy.a[n])).collect(),
            b: (0..n_max).map(|n| combine(&jx.b[n], &jy.b[n])).collect(),
            c: (0..=n_max).map(|n| combine(&jx.c[n], &jy.c[n])).collect(),
        }
    }

    pub fn build(alpha: f64, gamma: f64, n_max: usize) -> Result<Self> {
        let (jx, jy) = build_jacobi_operators(alpha, gamma, n_max)?;
        Ok(Self::from_operators(&jx, &jy))
    }
}

/// Distance from z to the wedge contour.
pub fn dist_to_wedge(z: Complex64) -> f64 {
    fn dist_seg(z: Complex64, a: Complex64, b: Complex64) -> f64 {
        let ab = b - a;
        let t = ((z - a) * ab.conj()).re / ab.norm_sqr();
        let t = t.clamp(0.0, 1.0);
        (z - (a + ab * t)).norm()
    }
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    dist_seg(z, i, one + i).min(dist_seg(z, one, one + i))
}

/// Maximal relative residual of the interior recurrence equations
/// C_k S_{k-1} + (A_k - z) S_k + B_k S_{k+1} = 0 over 1 <= k < len-1.
pub fn recurrence_residual(blocks: &ComplexBlocks, z: Complex64, vals: &[[Complex64; 2]]) -> f64 {
    let mut worst = 0.0f64;
    for k in 1..vals.len().saturating_sub(1) {
        let mut r = [Complex64::new(0.0, 0.0); 2];
        for i in 0..2 {
            if k == 1 {
                r[i] += blocks.c[1][i][0] * vals[0][0];
            } else {
                for j in 0..2 {
                    r[i] += blocks.c[k][i][j] * vals[k - 1][j];
                }
            }
            for j in 0..2 {
                r[i] += blocks.a[k][i][j] * vals[k][j];
                r[i] += blocks.b[k][i][j] * vals[k + 1][j];
            }
            r[i] -= z * vals[k][i];
        }
        let scale = (vals[k][0].norm() + vals[k][1].norm()).max(1e-300);
        worst = worst.max((r[0].norm() + r[1].norm()) / scale);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_distance() {
        let z = Complex64::new(0.5, 2.0);
        assert!((dist_to_wedge(z) - 1.0).abs() < 1e-14);
        let z = Complex64::new(2.0, 1.0);
        assert!((dist_to_wedge(z) - 1.0).abs() < 1e-14);
        let z = Complex64::new(0.3, 1.0);
        assert!(dist_to_wedge(z) < 1e-15);
        let z = Complex64::new(1.0, 0.5);
        assert!(dist_to_wedge(z) < 1e-15);
    }
}
