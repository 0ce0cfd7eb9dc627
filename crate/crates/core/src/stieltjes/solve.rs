//! Recurrence solvers: forward recurrence (unstable, kept for comparison),
//! the block Olver boundary-value solve with adaptive tail length, and the
//! three-solution Olver--Miller scheme for points on or near the contour.
//!
//! The boundary-value systems are block tridiagonal with 2x2 blocks; they
//! are factored as banded matrices (bandwidth 3) with partial pivoting.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::stieltjes::{
    dist_to_wedge, recurrence_residual, stieltjes_base, ComplexBlocks, Mode, StieltjesQuery,
    StieltjesSolution,
};

type C = Complex64;

const ZERO: C = Complex64::new(0.0, 0.0);

/// Banded LU with partial pivoting, compact row storage: `a[i][j]` holds
/// the matrix entry (i, i - m1 + j).
#[derive(Debug, Clone)]
pub struct BandedLU {
    n: usize,
    m1: usize,
    m2: usize,
    a: Vec<Vec<C>>,
    al: Vec<Vec<C>>,
    indx: Vec<usize>,
}

impl BandedLU {
    /// Factor a compact banded matrix in place.
    pub fn factor(mut a: Vec<Vec<C>>, m1: usize, m2: usize) -> Result<Self> {
        let n = a.len();
        let mm = m1 + m2 + 1;
        // shift the leading rows left so column 0 is the active pivot column
        let mut l = m1;
        for i in 0..m1.min(n) {
            for j in (m1 - i)..mm {
                a[i][j - l] = a[i][j];
            }
            l -= 1;
            for j in (mm - l - 1)..mm {
                a[i][j] = ZERO;
            }
        }
        let mut al = vec![vec![ZERO; m1]; n];
        let mut indx = vec![0usize; n];
        for k in 0..n {
            let last = (k + m1).min(n - 1);
            let mut ipiv = k;
            let mut best = a[k][0].norm();
            for (j, row) in a.iter().enumerate().take(last + 1).skip(k + 1) {
                if row[0].norm() > best {
                    best = row[0].norm();
                    ipiv = j;
                }
            }
            indx[k] = ipiv;
            if best == 0.0 {
                return Err(Error::SingularBlock { n: k });
            }
            if ipiv != k {
                a.swap(k, ipiv);
            }
            for i in (k + 1)..=last {
                let factor = a[i][0] / a[k][0];
                al[k][i - k - 1] = factor;
                for j in 1..mm {
                    a[i][j - 1] = a[i][j] - factor * a[k][j];
                }
                a[i][mm - 1] = ZERO;
            }
        }
        Ok(Self {
            n,
            m1,
            m2,
            a,
            al,
            indx,
        })
    }

    /// Solve with a factored matrix; the right-hand side is overwritten.
    pub fn solve(&self, b: &mut [C]) {
        let mm = self.m1 + self.m2 + 1;
        let n = self.n;
        for k in 0..n {
            let last = (k + self.m1).min(n - 1);
            let ip = self.indx[k];
            if ip != k {
                b.swap(k, ip);
            }
            for i in (k + 1)..=last {
                let f = self.al[k][i - k - 1];
                b[i] = b[i] - f * b[k];
            }
        }
        let mut l = 1usize;
        for i in (0..n).rev() {
            let mut acc = b[i];
            for k in 1..l {
                acc -= self.a[i][k] * b[i + k];
            }
            b[i] = acc / self.a[i][0];
            if l < mm {
                l += 1;
            }
        }
    }
}

const M1: usize = 3;
const M2: usize = 3;

/// Assemble and factor the boundary-value system
///   q_0 = 1,  C_k q_{k-1} + (A_k - z) q_k + B_k q_{k+1} = 0 (1 <= k < n),
///   q_n = tail,
/// then solve it for each requested tail vector.
fn solve_bvp(
    blocks: &ComplexBlocks,
    z: C,
    n: usize,
    tails: &[[C; 2]],
) -> Result<Vec<Vec<[C; 2]>>> {
    assert!(n >= 1 && n <= blocks.n_max);
    let size = 2 * n + 1;
    let mm = M1 + M2 + 1;
    let mut a = vec![vec![ZERO; mm]; size];
    let mut put = |r: usize, c: usize, v: C| {
        let off = M1 as isize + c as isize - r as isize;
        debug_assert!((0..mm as isize).contains(&off), "out of band");
        a[r][off as usize] = v;
    };
    put(0, 0, C::new(1.0, 0.0));
    for k in 1..n {
        for i in 0..2 {
            let r = 2 * k - 1 + i;
            if k == 1 {
                put(r, 0, blocks.c[1][i][0]);
            } else {
                for j in 0..2 {
                    put(r, 2 * (k - 1) - 1 + j, blocks.c[k][i][j]);
                }
            }
            for j in 0..2 {
                let diag = if i == j { z } else { ZERO };
                put(r, 2 * k - 1 + j, blocks.a[k][i][j] - diag);
                put(r, 2 * k + 1 + j, blocks.b[k][i][j]);
            }
        }
    }
    put(2 * n - 1, 2 * n - 1, C::new(1.0, 0.0));
    put(2 * n, 2 * n, C::new(1.0, 0.0));
    let lu = BandedLU::factor(a, M1, M2)?;
    let mut out = Vec::with_capacity(tails.len());
    for tail in tails {
        let mut rhs = vec![ZERO; size];
        rhs[0] = C::new(1.0, 0.0);
        rhs[2 * n - 1] = tail[0];
        rhs[2 * n] = tail[1];
        lu.solve(&mut rhs);
        let mut q = Vec::with_capacity(n + 1);
        q.push([rhs[0], ZERO]);
        for k in 1..=n {
            q.push([rhs[2 * k - 1], rhs[2 * k]]);
        }
        out.push(q);
    }
    Ok(out)
}

fn mat2_vec(m: &[[C; 2]; 2], v: &[C; 2]) -> [C; 2] {
    [
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]
}

/// Forward recurrence from the base values; exact per step but numerically
/// unstable, retained to demonstrate the instability.
pub fn forward_recurrence(q: &StieltjesQuery) -> Result<StieltjesSolution> {
    let (s0, s1p, s1q) = stieltjes_base(q.alpha, q.gamma, q.z, false)?;
    let blocks = ComplexBlocks::build(q.alpha, q.gamma, q.k_max + 1)?;
    let mut vals: Vec<[C; 2]> = Vec::with_capacity(q.k_max + 1);
    vals.push([s0, ZERO]);
    if q.k_max >= 1 {
        vals.push([s1p, s1q]);
    }
    for k in 1..q.k_max {
        // B_k q_{k+1} = (z - A_k) q_k - C_k q_{k-1}
        let mut rhs = mat2_vec(&blocks.a[k], &vals[k]);
        rhs = [q.z * vals[k][0] - rhs[0], q.z * vals[k][1] - rhs[1]];
        if k == 1 {
            rhs[0] -= blocks.c[1][0][0] * vals[0][0];
            rhs[1] -= blocks.c[1][1][0] * vals[0][0];
        } else {
            let cv = mat2_vec(&blocks.c[k], &vals[k - 1]);
            rhs = [rhs[0] - cv[0], rhs[1] - cv[1]];
        }
        let b = &blocks.b[k];
        let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
        let scale = b[0][0].norm() + b[0][1].norm() + b[1][0].norm() + b[1][1].norm();
        if det.norm() <= 1e-14 * scale * scale {
            return Err(Error::SingularBlock { n: k });
        }
        vals.push([
            (b[1][1] * rhs[0] - b[0][1] * rhs[1]) / det,
            (b[0][0] * rhs[1] - b[1][0] * rhs[0]) / det,
        ]);
    }
    Ok(StieltjesSolution {
        values: vals,
        mode_used: Mode::Forward,
        n_used: q.k_max,
    })
}

/// Block Olver algorithm: boundary-value solve with zero tail, tail length
/// doubled until the retained entries stabilize, scaled by S[P_0 w](z).
pub fn olver_solve(q: &StieltjesQuery) -> Result<StieltjesSolution> {
    let (s0, _, _) = stieltjes_base(q.alpha, q.gamma, q.z, false)?;
    let rtol = 1e-12;
    let n_cap = 4000usize;
    let mut n = (q.k_max + 8).max(16);
    let mut prev: Option<Vec<[C; 2]>> = None;
    loop {
        let blocks = ComplexBlocks::build(q.alpha, q.gamma, n)?;
        let sols = solve_bvp(&blocks, q.z, n, &[[ZERO, ZERO]])?;
        let vals: Vec<[C; 2]> = sols[0][..=q.k_max.min(n)]
            .iter()
            .map(|v| [s0 * v[0], s0 * v[1]])
            .collect();
        if let Some(p) = &prev {
            let mut change = 0.0f64;
            let mut scale = 1e-300f64;
            for (a, b) in vals.iter().zip(p.iter()) {
                change = change.max((a[0] - b[0]).norm() + (a[1] - b[1]).norm());
                scale = scale.max(a[0].norm() + a[1].norm());
            }
            if change <= rtol * scale {
                return Ok(StieltjesSolution {
                    values: vals,
                    mode_used: Mode::Olver,
                    n_used: n,
                });
            }
            if n >= n_cap {
                return Err(Error::NoConvergence {
                    n_cap,
                    tail: change / scale,
                });
            }
        }
        prev = Some(vals);
        n = (2 * n).min(n_cap);
    }
}

/// Olver--Miller scheme: three tail solutions (zero tail and the two unit
/// tails) matched to the k = 0, 1 base values.
///
/// All three solutions carry q_0 = 1, so the match is solved in the
/// equivalent difference form S = a q + b (q^1 - q) + c (q^2 - q): the first
/// condition pins a = S[P_0 w](z) and the remaining 2x2 system involves only
/// the unit-tail differences. Far from the contour those differences are
/// negligible at k = 1 and the right-hand side is consistently tiny, in
/// which case b = c = 0 recovers the plain boundary-value solution.
pub fn olver_miller_solve(q: &StieltjesQuery) -> Result<StieltjesSolution> {
    let (s0, s1p, s1q) = stieltjes_base(q.alpha, q.gamma, q.z, true)?;
    let n = (2 * (q.k_max + 1)).max(24);
    let blocks = ComplexBlocks::build(q.alpha, q.gamma, n)?;
    let one = C::new(1.0, 0.0);
    let tails = [[ZERO, ZERO], [one, ZERO], [ZERO, one]];
    let sols = solve_bvp(&blocks, q.z, n, &tails)?;
    let w = |j: usize, k: usize, comp: usize| sols[j][k][comp] - sols[0][k][comp];
    let ww = [[w(1, 1, 0), w(2, 1, 0)], [w(1, 1, 1), w(2, 1, 1)]];
    let rhs = [s1p - s0 * sols[0][1][0], s1q - s0 * sols[0][1][1]];
    let det = ww[0][0] * ww[1][1] - ww[0][1] * ww[1][0];
    let norm_w = ww[0][0].norm() + ww[0][1].norm() + ww[1][0].norm() + ww[1][1].norm();
    let rhs_norm = rhs[0].norm() + rhs[1].norm();
    let scale = s0.norm() + s1p.norm() + s1q.norm();
    let (b, c) = if det.norm() > 1e-28 * norm_w * norm_w {
        let cond = {
            let inv_norm = (ww[1][1].norm()
                + ww[0][1].norm()
                + ww[1][0].norm()
                + ww[0][0].norm())
                / det.norm();
            norm_w * inv_norm
        };
        if cond > 1e12 && rhs_norm > 1e-10 * scale {
            return Err(Error::IllConditioned { cond });
        }
        (
            (ww[1][1] * rhs[0] - ww[0][1] * rhs[1]) / det,
            (ww[0][0] * rhs[1] - ww[1][0] * rhs[0]) / det,
        )
    } else if rhs_norm <= 1e-10 * scale {
        // decayed tails with a consistent match: the zero-tail solution
        // already carries everything
        (ZERO, ZERO)
    } else {
        return Err(Error::IllConditioned { cond: f64::INFINITY });
    };
    let k_top = q.k_max.min(n);
    let mut vals = Vec::with_capacity(k_top + 1);
    for k in 0..=k_top {
        let mut v = [ZERO, ZERO];
        for comp in 0..2 {
            v[comp] = s0 * sols[0][k][comp] + b * w(1, k, comp) + c * w(2, k, comp);
        }
        vals.push(v);
    }
    Ok(StieltjesSolution {
        values: vals,
        mode_used: Mode::OlverMiller,
        n_used: n,
    })
}

/// Mode dispatch; Auto uses Olver away from the contour and Olver--Miller
/// within distance 0.1 of it.
pub fn solve(q: &StieltjesQuery) -> Result<StieltjesSolution> {
    match q.mode {
        Mode::Forward => forward_recurrence(q),
        Mode::Olver => olver_solve(q),
        Mode::OlverMiller => olver_miller_solve(q),
        Mode::Auto => {
            if dist_to_wedge(q.z) > 0.1 {
                olver_solve(q)
            } else {
                olver_miller_solve(q)
            }
        }
    }
}

/// Relative residual of a solution in the interior recurrence equations.
pub fn solution_residual(q: &StieltjesQuery, sol: &StieltjesSolution) -> Result<f64> {
    let blocks = ComplexBlocks::build(q.alpha, q.gamma, sol.values.len())?;
    Ok(recurrence_residual(&blocks, q.z, &sol.values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stieltjes::stieltjes_oracle;

    fn dense_solve(mut m: Vec<Vec<C>>, mut b: Vec<C>) -> Vec<C> {
        let n = b.len();
        for k in 0..n {
            let mut piv = k;
            for r in k + 1..n {
                if m[r][k].norm() > m[piv][k].norm() {
                    piv = r;
                }
            }
            m.swap(k, piv);
            b.swap(k, piv);
            for r in k + 1..n {
                let f = m[r][k] / m[k][k];
                for c in k..n {
                    let v = m[k][c];
                    m[r][c] -= f * v;
                }
                let bk = b[k];
                b[r] -= f * bk;
            }
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            for c in i + 1..n {
                acc -= m[i][c] * b[c];
            }
            b[i] = acc / m[i][i];
        }
        b
    }

    #[test]
    fn banded_lu_matches_dense_solve() {
        let n = 37usize;
        let (m1, m2) = (3usize, 3usize);
        // deterministic pseudo-random band matrix
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
        };
        let mut dense = vec![vec![ZERO; n]; n];
        let mut compact = vec![vec![ZERO; m1 + m2 + 1]; n];
        for i in 0..n {
            for j in 0..n {
                if (i as isize - j as isize).abs() <= m1 as isize {
                    let v = C::new(rnd(), rnd());
                    let v = if i == j { v + C::new(3.0, 0.0) } else { v };
                    dense[i][j] = v;
                    compact[i][(m1 as isize + j as isize - i as isize) as usize] = v;
                }
            }
        }
        let rhs: Vec<C> = (0..n).map(|_| C::new(rnd(), rnd())).collect();
        let want = dense_solve(dense, rhs.clone());
        let lu = BandedLU::factor(compact, m1, m2).unwrap();
        let mut got = rhs;
        lu.solve(&mut got);
        for k in 0..n {
            assert!((got[k] - want[k]).norm() < 1e-10, "entry {k}");
        }
    }

    #[test]
    fn olver_matches_oracle_off_contour() {
        let q = StieltjesQuery {
            alpha: 0.0,
            gamma: 0.0,
            z: C::new(2.0, 0.0),
            k_max: 12,
            mode: Mode::Olver,
        };
        let sol = olver_solve(&q).unwrap();
        for k in 0..=q.k_max {
            let (p, qq) = stieltjes_oracle(0.0, 0.0, q.z, k).unwrap();
            let scale = p.norm().max(qq.norm()).max(1e-14);
            assert!(
                (sol.values[k][0] - p).norm() < 1e-8 * scale.max(1.0),
                "P k={k}: {} vs {p}",
                sol.values[k][0]
            );
            if k >= 1 {
                assert!(
                    (sol.values[k][1] - qq).norm() < 1e-8 * scale.max(1.0),
                    "Q k={k}: {} vs {qq}",
                    sol.values[k][1]
                );
            }
        }
    }

    #[test]
    fn olver_converges_quickly_far_away() {
        let q = StieltjesQuery {
            alpha: 0.0,
            gamma: 0.0,
            z: C::new(10.0, 0.0),
            k_max: 8,
            mode: Mode::Olver,
        };
        let sol = olver_solve(&q).unwrap();
        // the tail decays fast out here: two short solves suffice
        assert!(sol.n_used <= 64, "n_used = {}", sol.n_used);
    }

    #[test]
    fn forward_agrees_with_olver_in_far_field() {
        let z = C::new(3.0, 3.0);
        let q = StieltjesQuery {
            alpha: 0.0,
            gamma: 0.0,
            z,
            k_max: 10,
            mode: Mode::Forward,
        };
        let fwd = forward_recurrence(&q).unwrap();
        let olv = olver_solve(&q).unwrap();
        for k in 0..=6usize {
            let d = (fwd.values[k][0] - olv.values[k][0]).norm()
                + (fwd.values[k][1] - olv.values[k][1]).norm();
            assert!(d < 1e-8, "k={k}: {d}");
        }
        // round-off amplification already shows a few degrees later
        let d10 = (fwd.values[10][0] - olv.values[10][0]).norm();
        assert!(d10 > 1e-10, "expected visible drift, got {d10}");
    }

    #[test]
    fn forward_recurrence_has_zero_step_residual() {
        let q = StieltjesQuery {
            alpha: 0.3,
            gamma: 0.3,
            z: C::new(1.8, 1.1),
            k_max: 15,
            mode: Mode::Forward,
        };
        let sol = forward_recurrence(&q).unwrap();
        let r = solution_residual(&q, &sol).unwrap();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn olver_miller_matches_oracle_near_contour() {
        let z = C::new(0.5, 1.0 + 1e-3);
        let q = StieltjesQuery {
            alpha: 0.0,
            gamma: 0.0,
            z,
            k_max: 15,
            mode: Mode::OlverMiller,
        };
        let sol = olver_miller_solve(&q).unwrap();
        for k in 0..=q.k_max {
            let (p, qq) = stieltjes_oracle(0.0, 0.0, z, k).unwrap();
            let scale = (p.norm() + qq.norm()).max(1e-10);
            let d = (sol.values[k][0] - p).norm() + (sol.values[k][1] - qq).norm();
            assert!(d < 1e-7 * scale.max(1.0), "k={k}: {d} (scale {scale})");
        }
        let r = solution_residual(&q, &sol).unwrap();
        assert!(r < 1e-9, "residual {r}");
    }

    #[test]
    fn olver_miller_reduces_to_olver_far_away() {
        let z = C::new(4.0, -2.0);
        let q = StieltjesQuery {
            alpha: 0.0,
            gamma: 0.0,
            z,
            k_max: 10,
            mode: Mode::Auto,
        };
        let om = olver_miller_solve(&q).unwrap();
        let ol = olver_solve(&q).unwrap();
        for k in 0..=10usize {
            let d = (om.values[k][0] - ol.values[k][0]).norm()
                + (om.values[k][1] - ol.values[k][1]).norm();
            assert!(d < 1e-9, "k={k}: {d}");
        }
        // auto mode picks the plain boundary-value solve out here
        let auto = solve(&q).unwrap();
        assert_eq!(auto.mode_used, Mode::Olver);
    }
}
