use super::{add, sub, FpMatrix};
use crate::error::{check_cap, Result};

/// One commuting constraint `f_w · a = b · f_v` with `a: S_v → S_w` and `b: T_v → T_w`.
pub struct Constraint<'a> {
    pub v: usize,
    pub w: usize,
    pub a: &'a FpMatrix,
    pub b: &'a FpMatrix,
}

/// Linear system whose kernel is the space of block families `f_v: S_v → T_v`
/// satisfying every constraint. Unknowns are the blocks vectorized
/// column-major and stacked in vertex order.
pub fn intertwiner_system(p: u32, src: &[usize], tgt: &[usize], constraints: &[Constraint]) -> Result<FpMatrix> {
    let nv = src.len();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + src[v] * tgt[v];
    }
    check_cap(|| "intertwiner unknowns".into(), off[nv])?;
    let n_eq: usize = constraints.iter().map(|c| tgt[c.w] * src[c.v]).sum();
    let mut eq = FpMatrix::zeros(p, n_eq, off[nv]);
    let mut row = 0;
    for c in constraints {
        let (tw, sv, sw, tv) = (tgt[c.w], src[c.v], src[c.w], tgt[c.v]);
        for r in 0..tw {
            for col in 0..sv {
                // sum_k f_w[r,k] a[k,col]
                for k in 0..sw {
                    let x = c.a.get(k, col);
                    if x != 0 {
                        let idx = off[c.w] + k * tw + r;
                        eq.set(row, idx, add(eq.get(row, idx), x, p));
                    }
                }
                // - sum_k b[r,k] f_v[k,col]
                for k in 0..tv {
                    let x = c.b.get(r, k);
                    if x != 0 {
                        let idx = off[c.v] + col * tv + k;
                        eq.set(row, idx, sub(eq.get(row, idx), x, p));
                    }
                }
                row += 1;
            }
        }
    }
    Ok(eq)
}

/// Inverse of the vectorization used by [`intertwiner_system`].
pub fn blocks_from_vector(p: u32, src: &[usize], tgt: &[usize], v: &[u32]) -> Vec<FpMatrix> {
    let mut off = 0;
    src.iter()
        .zip(tgt)
        .map(|(&s, &t)| {
            let m = FpMatrix::from_colmajor(p, t, s, &v[off..off + s * t]);
            off += s * t;
            m
        })
        .collect()
}

pub fn vectorize_blocks(blocks: &[FpMatrix]) -> Vec<u32> {
    blocks.iter().flat_map(|b| b.vectorize_colmajor()).collect()
}
