//! Block-tridiagonal Jacobi operators for the wedge basis at beta = alpha:
//! the matrices of multiplication by x and by y in the degree-graded basis
//! [P_0; P_1,Q_1; P_2,Q_2; ...].

mod build;
mod closed;
mod oracle;

pub use build::{
    build_jacobi_operators, build_jacobi_operators_exact, validate_closed_forms, Provenance,
    RowDeviation, ValidationReport,
};
pub use closed::{one_minus_x_closed, Family, FieldScalar, OperatorRow, FAMILIES};
pub use oracle::{distant_projection_max, one_minus_x_oracle};

use crate::scalar::Scalar;
use crate::univariate::{eval_jacobi_shifted, JacobiParams};
use crate::wedge::JacobiWedgeBasis;

/// Number of basis elements at a degree: 1 at degree 0, 2 afterwards.
pub fn block_size(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        2
    }
}

/// Coefficients against the graded basis, stored flat:
/// [P_0; P_1, Q_1; P_2, Q_2; ...], length 2 n_max + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector<T> {
    pub n_max: usize,
    pub data: Vec<T>,
}

impl<T: Clone + num_traits::Zero> CoeffVector<T> {
    pub fn zeros(n_max: usize) -> Self {
        Self {
            n_max,
            data: vec![T::zero(); 2 * n_max + 1],
        }
    }

    pub fn index(n: usize, fam: Family) -> usize {
        match (n, fam) {
            (0, Family::P) => 0,
            (0, Family::Q) => panic!("Q_0 does not exist"),
            (n, Family::P) => 2 * n - 1,
            (n, Family::Q) => 2 * n,
        }
    }

    pub fn get(&self, n: usize, fam: Family) -> T {
        self.data[Self::index(n, fam)].clone()
    }

    pub fn set(&mut self, n: usize, fam: Family, v: T) {
        self.data[Self::index(n, fam)] = v;
    }
}

/// Block-tridiagonal operator: x ℙ_n = C_n ℙ_{n-1} + A_n ℙ_n + B_n ℙ_{n+1},
/// where ℙ_n stacks the degree-n elements. Rows index the source element,
/// columns the target element; unused slots of the degree-0 blocks are zero.
#[derive(Debug, Clone)]
pub struct BlockTriDiag<T> {
    pub n_max: usize,
    /// a[n], n = 0..=n_max
    pub a: Vec<[[T; 2]; 2]>,
    /// b[n]: degree n -> n+1, n = 0..n_max
    pub b: Vec<[[T; 2]; 2]>,
    /// c[n]: degree n -> n-1, n = 1..=n_max (c[0] is zero padding)
    pub c: Vec<[[T; 2]; 2]>,
    pub provenance: Provenance,
}

impl<T: FieldScalar> BlockTriDiag<T> {
    /// Apply the multiplication operator to a coefficient vector: if f has
    /// coefficients v, returns the coefficients of (coordinate * f),
    /// truncated at the operator's n_max. Exact when deg f < n_max.
    pub fn apply(&self, v: &CoeffVector<T>) -> CoeffVector<T> {
        assert!(v.n_max <= self.n_max, "coefficient vector too long");
        let mut out = CoeffVector::zeros(self.n_max);
        let get = |n: usize, j: usize| -> T {
            if n > v.n_max || (n == 0 && j == 1) {
                T::zero()
            } else {
                v.data[if n == 0 { 0 } else { 2 * n - 1 + j }].clone()
            }
        };
        for m in 0..=self.n_max {
            for jm in 0..block_size(m) {
                let mut acc = T::zero();
                // within-degree: A_m^T
                for i in 0..block_size(m) {
                    acc = acc + self.a[m][i][jm].clone() * get(m, i);
                }
                // from degree m+1 down: C_{m+1}^T
                if m + 1 <= self.n_max {
                    for i in 0..block_size(m + 1) {
                        acc = acc + self.c[m + 1][i][jm].clone() * get(m + 1, i);
                    }
                }
                // from degree m-1 up: B_{m-1}^T
                if m >= 1 {
                    for i in 0..block_size(m - 1) {
                        acc = acc + self.b[m - 1][i][jm].clone() * get(m - 1, i);
                    }
                }
                let idx = if m == 0 { 0 } else { 2 * m - 1 + jm };
                out.data[idx] = acc;
            }
        }
        out
    }
}

/// Evaluate the linear combination
/// (n+γ+α+2) Q_{n+1} - (n+1) P_{n+1} - (n+γ) Q_n + (n+α+1) P_n
/// at a point, with Q_0 = 0; beta = alpha and the antisymmetric Q
/// normalization are assumed.
pub fn vanish_combination<F: Scalar>(alpha: F, gamma: F, n: usize, x: F, y: F) -> F {
    let basis = JacobiWedgeBasis::new(alpha, alpha, gamma, F::one()).expect("valid params");
    let one = F::one();
    let two = F::of(2.0);
    let nf = F::of_usize(n);
    let qn = if n >= 1 {
        basis.eval_q_sym(n, x, y)
    } else {
        F::zero()
    };
    (nf + gamma + alpha + two) * basis.eval_q_sym(n + 1, x, y)
        - (nf + one) * basis.eval_p(n + 1, x, y)
        - (nf + gamma) * qn
        + (nf + alpha + one) * basis.eval_p(n, x, y)
}

/// The combination's target value 2 (1-x) (2n+γ+α+2) P_n^{(γ+1,α)}(2x-1);
/// on the wedge this vanishes along x = 1.
pub fn vanish_rhs<F: Scalar>(alpha: F, gamma: F, n: usize, x: F) -> F {
    let one = F::one();
    let two = F::of(2.0);
    let nf = F::of_usize(n);
    let p = JacobiParams {
        alpha,
        gamma: gamma + one,
    };
    two * (one - x) * (two * nf + gamma + alpha + two) * eval_jacobi_shifted(n, &p, x)
}
