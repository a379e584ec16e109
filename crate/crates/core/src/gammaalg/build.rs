use std::sync::Arc;

use super::{BasedAlgebra, BasisElement};
use crate::error::{Error, Result};
use crate::exactla::{add, mul, sub, Subspace};
use crate::lambdacat::{hom_space, radical_of_end, Catalog, HomSpace, RepMap};

/// `Γ = End(E)^op` together with its realization by Λ-maps.
pub struct Gamma {
    pub alg: Arc<BasedAlgebra>,
    pub catalog: Arc<Catalog>,
    homs: Vec<HomSpace>,
    ends: Vec<(Vec<u32>, Subspace)>,
    maps: Vec<RepMap>,
}

impl Gamma {
    pub fn m(&self) -> usize {
        self.catalog.len()
    }

    /// Canonical hom space between catalog entries.
    pub fn hom(&self, x: usize, y: usize) -> &HomSpace {
        &self.homs[x * self.m() + y]
    }

    /// The Λ-map realizing basis element `i`.
    pub fn map(&self, i: usize) -> &RepMap {
        &self.maps[i]
    }

    /// Coordinates of `f: X → Y` in the block basis of `(X, Y)`.
    pub fn expand(&self, x: usize, y: usize, f: &RepMap) -> Vec<u32> {
        let h = self.hom(x, y);
        let v = f.vectorize();
        let c = h.space().coords(&v).expect("expand: not a morphism between these entries");
        if x != y {
            return c;
        }
        let p = self.catalog.p();
        let (lambdas, rad) = &self.ends[x];
        let lam = c.iter().zip(lambdas).fold(0u32, |acc, (&a, &l)| add(acc, mul(a, l, p), p));
        let id = self.catalog.entry(x).identity().vectorize();
        let r: Vec<u32> = v.iter().zip(&id).map(|(&a, &b)| sub(a, mul(lam, b, p), p)).collect();
        let mut out = vec![lam];
        out.extend(rad.coords(&r).expect("expand: radical part"));
        out
    }

    /// Element of `Γ` represented by `f: X → Y`.
    pub fn element(&self, x: usize, y: usize, f: &RepMap) -> Vec<u32> {
        let mut v = vec![0u32; self.alg.dim()];
        for (k, c) in self.alg.block(x, y).iter().zip(self.expand(x, y, f)) {
            v[*k] = c;
        }
        v
    }

    /// The Λ-map of an element supported in block `(x, y)`.
    pub fn realize(&self, x: usize, y: usize, v: &[u32]) -> RepMap {
        let mut f = RepMap::zero(self.catalog.entry(x).clone(), self.catalog.entry(y).clone());
        for &k in self.alg.block(x, y) {
            if v[k] != 0 {
                f = f.add(&self.maps[k].scale(v[k]));
            }
        }
        f
    }

    /// `e = Σ id_P` over the projective entries.
    pub fn pi_idempotent(&self) -> Result<Vec<u32>> {
        if !self.catalog.is_self_injective()? {
            return Err(Error::NotSelfInjective);
        }
        let mut e = vec![0u32; self.alg.dim()];
        for i in self.catalog.projective_entries() {
            e[self.alg.idempotent(i)] = 1;
        }
        Ok(e)
    }
}

pub fn build_gamma(catalog: Arc<Catalog>) -> Result<Gamma> {
    if !catalog.claimed_complete() {
        return Err(Error::Precondition("Γ needs a complete catalog".into()));
    }
    let m = catalog.len();
    let p = catalog.p();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).collect();
    let homs: Vec<HomSpace> = crate::par::map(&pairs, |&(x, y)| hom_space(catalog.entry(x), catalog.entry(y)))
        .into_iter()
        .collect::<Result<_>>()?;
    let ends: Vec<(Vec<u32>, Subspace)> = (0..m)
        .map(|x| radical_of_end(catalog.entry(x), catalog.name(x)).map(|(_, l, r)| (l, r)))
        .collect::<Result<_>>()?;
    crate::error::check_cap(|| "Γ".into(), homs.iter().map(|h| h.dim()).sum())?;

    let mut basis = Vec::new();
    let mut maps = Vec::new();
    let mut idempotents = vec![0; m];
    let mut radical = Vec::new();
    for &(x, y) in &pairs {
        let h = &homs[x * m + y];
        let label = |k: usize| format!("{}->{}#{k}", catalog.name(x), catalog.name(y));
        if x == y {
            idempotents[x] = basis.len();
            basis.push(BasisElement { src: x, tgt: y, label: label(0) });
            maps.push(catalog.entry(x).identity());
            radical.push(false);
            let rad = &ends[x].1;
            for k in 0..rad.dim() {
                basis.push(BasisElement { src: x, tgt: y, label: label(k + 1) });
                maps.push(h.from_vector(rad.vector(k)));
                radical.push(true);
            }
        } else {
            for k in 0..h.dim() {
                basis.push(BasisElement { src: x, tgt: y, label: label(k) });
                maps.push(h.basis_map(k));
                radical.push(true);
            }
        }
    }
    let n = basis.len();
    let mut gamma = Gamma {
        alg: Arc::new(BasedAlgebra::new(String::new(), p, vec![], vec![], vec![], vec![], vec![])),
        catalog: catalog.clone(),
        homs,
        ends,
        maps,
    };
    // block offsets for expansion before the algebra exists
    let mut block_start = vec![0usize; m * m + 1];
    for b in &basis {
        block_start[b.src * m + b.tgt + 1] += 1;
    }
    for i in 0..m * m {
        block_start[i + 1] += block_start[i];
    }
    let rows: Vec<usize> = (0..n).collect();
    let products: Vec<Vec<(usize, Vec<(usize, u32)>)>> = crate::par::map(&rows, |&a| {
        let (x, y) = (basis[a].src, basis[a].tgt);
        let mut out = Vec::new();
        for z in 0..m {
            let range = block_start[y * m + z]..block_start[y * m + z + 1];
            for b in range {
                let comp = gamma.maps[a].then(&gamma.maps[b]);
                let c = gamma.expand(x, z, &comp);
                let start = block_start[x * m + z];
                let sparse: Vec<(usize, u32)> =
                    c.into_iter().enumerate().filter(|(_, v)| *v != 0).map(|(k, v)| (start + k, v)).collect();
                out.push((b, sparse));
            }
        }
        out
    });
    let mut multtab = vec![Vec::new(); n * n];
    for (a, row) in products.into_iter().enumerate() {
        for (b, sparse) in row {
            multtab[a * n + b] = sparse;
        }
    }
    let vertices = catalog.entries().iter().map(|e| e.name.clone()).collect();
    gamma.alg = Arc::new(
        BasedAlgebra::new("Gamma".into(), p, vertices, basis, multtab, idempotents, radical).mark_auslander(),
    );
    Ok(gamma)
}
