//! Assembly and validation of the Jacobi operators J_x, J_y.
//!
//! The closed-form rows are validated against the quadrature oracle before
//! use; on failure the builder falls back to oracle rows and flags the
//! provenance. J_y is the conjugation of J_x by the sign flip on the Q
//! components, which encodes the swap symmetry of the basis.

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::error::Result;
use crate::operators::closed::{one_minus_x_closed, Family, FieldScalar, OperatorRow};
use crate::operators::oracle::one_minus_x_oracle;
use crate::operators::{block_size, BlockTriDiag};

/// How the operator entries were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Provenance {
    ClosedForm,
    Oracle,
}

/// Deviation of one closed-form row from the oracle.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RowDeviation {
    pub n: usize,
    pub family: Family,
    pub max_dev: f64,
}

/// Per-row comparison of closed forms against the quadrature oracle.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ValidationReport {
    pub alpha: f64,
    pub gamma: f64,
    pub threshold: f64,
    pub rows: Vec<RowDeviation>,
    pub pass: bool,
}

/// Compare the closed-form rows with the oracle for n <= n_cap.
pub fn validate_closed_forms(alpha: f64, gamma: f64, n_cap: usize) -> Result<ValidationReport> {
    let threshold = 1e-8;
    let mut rows = Vec::new();
    let order = n_cap + 12;
    for n in 0..=n_cap {
        for fam in [Family::P, Family::Q] {
            if n == 0 && fam == Family::Q {
                continue;
            }
            let closed = one_minus_x_closed(alpha, gamma, n, fam);
            let oracle = one_minus_x_oracle(alpha, gamma, n, fam, order)?;
            let max_dev = closed
                .lower
                .iter()
                .chain(&closed.diag)
                .chain(&closed.upper)
                .zip(oracle.lower.iter().chain(&oracle.diag).chain(&oracle.upper))
                .map(|(c, o)| (c - o).abs())
                .fold(0.0f64, f64::max);
            rows.push(RowDeviation {
                n,
                family: fam,
                max_dev,
            });
        }
    }
    let pass = rows.iter().all(|r| r.max_dev < threshold);
    Ok(ValidationReport {
        alpha,
        gamma,
        threshold,
        rows,
        pass,
    })
}

fn assemble<T: FieldScalar>(
    rows: &dyn Fn(usize, Family) -> OperatorRow<T>,
    n_max: usize,
    provenance: Provenance,
) -> (BlockTriDiag<T>, BlockTriDiag<T>) {
    let zero_block = || [[T::zero(), T::zero()], [T::zero(), T::zero()]];
    let mut a = vec![zero_block(); n_max + 1];
    let mut b = vec![zero_block(); n_max];
    let mut c = vec![zero_block(); n_max + 1];
    for n in 0..=n_max {
        for (i, fam) in [Family::P, Family::Q].into_iter().enumerate() {
            if n == 0 && fam == Family::Q {
                continue;
            }
            // x b_n = b_n - (1-x) b_n
            let row = rows(n, fam);
            for j in 0..2 {
                a[n][i][j] = T::zero() - row.diag[j].clone();
                if n >= 1 {
                    c[n][i][j] = T::zero() - row.lower[j].clone();
                }
                if n < n_max {
                    b[n][i][j] = T::zero() - row.upper[j].clone();
                }
            }
            a[n][i][i] = T::one() + a[n][i][i].clone();
        }
    }
    let jx = BlockTriDiag {
        n_max,
        a,
        b,
        c,
        provenance,
    };
    // J_y = D J_x D with D the sign flip on Q components
    let sign = |k: usize| if k == 1 { -T::one() } else { T::one() };
    let conj = |m: &[[T; 2]; 2], rows_deg: usize, cols_deg: usize| -> [[T; 2]; 2] {
        let mut out = zero_block();
        for i in 0..block_size(rows_deg) {
            for j in 0..block_size(cols_deg) {
                out[i][j] = sign(i) * sign(j) * m[i][j].clone();
            }
        }
        out
    };
    let jy = BlockTriDiag {
        n_max,
        a: (0..=n_max).map(|n| conj(&jx.a[n], n, n)).collect(),
        b: (0..n_max).map(|n| conj(&jx.b[n], n, n + 1)).collect(),
        c: (0..=n_max)
            .map(|n| {
                if n == 0 {
                    zero_block()
                } else {
                    conj(&jx.c[n], n, n - 1)
                }
            })
            .collect(),
        provenance,
    };
    (jx, jy)
}

/// Build (J_x, J_y) to truncation n_max. Closed forms are validated on the
/// leading rows first; a failed validation switches every row to the
/// oracle path and marks the result accordingly.
pub fn build_jacobi_operators(
    alpha: f64,
    gamma: f64,
    n_max: usize,
) -> Result<(BlockTriDiag<f64>, BlockTriDiag<f64>)> {
    let report = validate_closed_forms(alpha, gamma, n_max.min(12))?;
    if report.pass {
        Ok(assemble(
            &|n, fam| one_minus_x_closed(alpha, gamma, n, fam),
            n_max,
            Provenance::ClosedForm,
        ))
    } else {
        let order = n_max + 12;
        let mut cache = Vec::new();
        for n in 0..=n_max {
            let p = one_minus_x_oracle(alpha, gamma, n, Family::P, order)?;
            let q = if n == 0 {
                OperatorRow {
                    lower: [0.0; 2],
                    diag: [0.0; 2],
                    upper: [0.0; 2],
                }
            } else {
                one_minus_x_oracle(alpha, gamma, n, Family::Q, order)?
            };
            cache.push((p, q));
        }
        Ok(assemble(
            &move |n, fam| match fam {
                Family::P => cache[n].0.clone(),
                Family::Q => cache[n].1.clone(),
            },
            n_max,
            Provenance::Oracle,
        ))
    }
}

/// Exact-rational operators for rational parameters; caller should have the
/// closed forms validated at the corresponding floats first.
pub fn build_jacobi_operators_exact(
    alpha: Ratio<BigInt>,
    gamma: Ratio<BigInt>,
    n_max: usize,
) -> (
    BlockTriDiag<Ratio<BigInt>>,
    BlockTriDiag<Ratio<BigInt>>,
) {
    assemble(
        &move |n, fam| one_minus_x_closed(alpha.clone(), gamma.clone(), n, fam),
        n_max,
        Provenance::ClosedForm,
    )
}
