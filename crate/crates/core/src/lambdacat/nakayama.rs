use std::sync::Arc;

use super::{Arrow, BoundQuiver, Catalog, Entry, Rep, Term};
use crate::error::{check_cap, Error, Result};
use crate::exactla::FpMatrix;

/// Cyclic quiver on `c` vertices with arrows `a_i: i → i+1` and all paths of
/// length `n + 1` as relations.
pub fn nakayama_quiver(c: usize, n: usize, p: u32) -> Result<BoundQuiver> {
    if c == 0 || n == 0 {
        return Err(Error::Precondition("cycle length and radical bound must be at least 1".into()));
    }
    let vertices = (0..c).map(|i| i.to_string()).collect();
    let arrows = (0..c).map(|i| Arrow { id: format!("a{i}"), src: i, tgt: (i + 1) % c }).collect();
    let relations = (0..c)
        .map(|s| vec![Term { coef: 1, path: (0..=n).map(|k| (s + k) % c).collect() }])
        .collect();
    BoundQuiver::new(p, vertices, arrows, relations)
}

/// The uniserial `[i]_j`: socle at `j`, Loewy length `i`.
pub fn uniserial(quiver: &Arc<BoundQuiver>, i: usize, j: usize) -> Result<Rep> {
    let c = quiver.n_vertices();
    let p = quiver.p;
    let top = (j + c * i - (i - 1)) % c;
    // basis vector b_k sits at vertex top + k; slot[k] is its index within that vertex
    let vertex_of = |k: usize| (top + k) % c;
    let mut dims = vec![0usize; c];
    let mut slot = vec![0usize; i];
    for k in 0..i {
        slot[k] = dims[vertex_of(k)];
        dims[vertex_of(k)] += 1;
    }
    let mut mats: Vec<FpMatrix> = (0..c).map(|a| FpMatrix::zeros(p, dims[(a + 1) % c], dims[a])).collect();
    for k in 0..i.saturating_sub(1) {
        let a = vertex_of(k);
        mats[a].set(slot[k + 1], slot[k], 1);
    }
    Rep::new(quiver.clone(), dims, mats)
}

pub fn nakayama_catalog(c: usize, n: usize, p: u32) -> Result<Catalog> {
    crate::exactla::check_prime(p)?;
    check_cap(|| format!("A({c},{n}) catalog"), c * (n + 1))?;
    let quiver = Arc::new(nakayama_quiver(c, n, p)?);
    let mut entries = Vec::with_capacity(c * (n + 1));
    for i in 1..=n + 1 {
        for j in 0..c {
            entries.push(Entry {
                name: format!("[{i}]_{j}"),
                rep: uniserial(&quiver, i, j)?,
                projective: i == n + 1,
                injective: i == n + 1,
            });
        }
    }
    Catalog::new(quiver, entries, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_counts_and_dimensions() {
        let cat = nakayama_catalog(1, 1, 101).unwrap();
        assert_eq!(cat.len(), 2);
        let cat = nakayama_catalog(4, 3, 101).unwrap();
        assert_eq!(cat.len(), 16);
        for i in 1..=4 {
            for j in 0..4 {
                assert_eq!(cat.entry_by_name(&format!("[{i}]_{j}")).unwrap().total_dim(), i);
            }
        }
        assert_eq!(cat.projective_entries().len(), 4);
    }

    #[test]
    fn socle_and_top_positions() {
        let cat = nakayama_catalog(3, 2, 101).unwrap();
        let m = cat.entry_by_name("[2]_1").unwrap();
        assert_eq!(m.socle_dims(), vec![0, 1, 0]);
        assert_eq!(m.top_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn nu_permutes_projectives() {
        // [N+1]_j has top j - N, and D Hom(P_v, Λ) has socle v
        for (c, n) in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3)] {
            let cat = nakayama_catalog(c, n, 101).unwrap();
            assert!(cat.is_self_injective().unwrap());
            for j in 0..c {
                let e = cat.index_of(&format!("[{}]_{j}", n + 1)).unwrap();
                let img = cat.nakayama_functor_on_projective(e).unwrap();
                assert_eq!(cat.name(img), format!("[{}]_{}", n + 1, (j + c * n - n) % c));
            }
            let lam = cat.regular();
            assert!(cat.is_iso(&cat.dual_regular().unwrap(), &lam).unwrap());
        }
    }
}
