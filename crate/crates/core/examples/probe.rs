use num_complex::Complex64 as C;
use wedge_ortho::stieltjes::*;

fn main() {
    let (al, ga) = (0.0, 0.0);
    let k_max = 20usize;
    let zs = [
        C::new(0.5, 1.0 + 1e-3), C::new(0.5, 1.0 - 1e-3), C::new(1.0 + 1e-3, 0.5),
        C::new(0.2, 1.0 + 0.05), C::new(1.05, 1.05), C::new(0.9, 0.97),
        C::new(0.0, 1.0), C::new(1.0, 0.0), C::new(0.99, 1.01),
    ];
    for margin in [1usize, 2, 4] {
        println!("--- margin {margin} (n = k_max + margin)");
        for &z in &zs {
            let blocks = ComplexBlocks::build(al, ga, k_max + margin).unwrap();
            let (s0, s1p, s1q) = stieltjes_base(al, ga, z, true).unwrap();
            let n = k_max + margin;
            let sols = debug_solve_bvp(&blocks, z, n);
            let w = |j: usize, k: usize, c2: usize| sols[j][k][c2] - sols[0][k][c2];
            let ww = [[w(1,1,0), w(2,1,0)], [w(1,1,1), w(2,1,1)]];
            let rhs = [s1p - s0*sols[0][1][0], s1q - s0*sols[0][1][1]];
            let det = ww[0][0]*ww[1][1] - ww[0][1]*ww[1][0];
            let b = (ww[1][1]*rhs[0] - ww[0][1]*rhs[1]) / det;
            let c = (ww[0][0]*rhs[1] - ww[1][0]*rhs[0]) / det;
            let mut worst: f64 = 0.0;
            let mut seq_scale: f64 = 1e-300;
            for k in 0..=k_max {
                let (p, qq) = stieltjes_oracle(al, ga, z, k).unwrap();
                seq_scale = seq_scale.max(p.norm()+qq.norm());
            }
            for k in 0..=k_max {
                let (p, qq) = stieltjes_oracle(al, ga, z, k).unwrap();
                let vp = s0*sols[0][k][0] + b*w(1,k,0) + c*w(2,k,0);
                let vq = s0*sols[0][k][1] + b*w(1,k,1) + c*w(2,k,1);
                worst = worst.max(((vp-p).norm()+(vq-qq).norm())/seq_scale);
            }
            println!("  z=({:6.3},{:6.3}) dist={:8.1e} worst_rel={:9.2e}", z.re, z.im, dist_to_wedge(z), worst);
        }
    }
}

fn debug_solve_bvp(blocks: &ComplexBlocks, z: C, n: usize) -> Vec<Vec<[C;2]>> {
    let zero = C::new(0.0,0.0); let one = C::new(1.0,0.0);
    let size = 2*n+1;
    let tails = [[zero,zero],[one,zero],[zero,one]];
    let mut out = Vec::new();
    for tail in tails {
        let mut m = vec![vec![zero; size]; size];
        let mut rhs = vec![zero; size];
        m[0][0] = one; rhs[0] = one;
        for k in 1..n {
            for i in 0..2 {
                let r = 2*k-1+i;
                if k == 1 { m[r][0] = blocks.c[1][i][0]; }
                else { for j in 0..2 { m[r][2*(k-1)-1+j] = blocks.c[k][i][j]; } }
                for j in 0..2 {
                    m[r][2*k-1+j] = blocks.a[k][i][j] - if i==j { z } else { zero };
                    m[r][2*k+1+j] = blocks.b[k][i][j];
                }
            }
        }
        m[2*n-1][2*n-1] = one; rhs[2*n-1] = tail[0];
        m[2*n][2*n] = one; rhs[2*n] = tail[1];
        for k in 0..size {
            let mut piv = k;
            for r in k+1..size { if m[r][k].norm() > m[piv][k].norm() { piv = r; } }
            m.swap(k, piv); rhs.swap(k, piv);
            for r in k+1..size {
                let f = m[r][k]/m[k][k];
                for cc in k..size { let v = m[k][cc]; m[r][cc] -= f*v; }
                let v = rhs[k]; rhs[r] -= f*v;
            }
        }
        for i in (0..size).rev() {
            let mut acc = rhs[i];
            for cc in i+1..size { acc -= m[i][cc]*rhs[cc]; }
            rhs[i] = acc/m[i][i];
        }
        let mut q = vec![[rhs[0], zero]];
        for k in 1..=n { q.push([rhs[2*k-1], rhs[2*k]]); }
        out.push(q);
    }
    out
}
