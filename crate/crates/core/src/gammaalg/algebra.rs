use std::sync::{Arc, OnceLock};

use crate::exactla::{add, mul, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

/// Finite-dimensional algebra given by a basis graded by pairs of vertices
/// and sparse structure constants.
///
/// Elements are labeled by Λ-side morphisms `src → tgt`. The product is
/// diagrammatic: for `a: X → Y` and `b: Y → Z`, `a * b` expands `b ∘ a`, and
/// it vanishes unless the middle vertices agree. A module stores a matrix
/// `M(tgt) → M(src)` per basis element with `action(a * b) = action(a) · action(b)`.
#[derive(Debug)]
pub struct BasedAlgebra {
    id: String,
    p: u32,
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    mult: Vec<Vec<(usize, u32)>>,
    idempotents: Vec<usize>,
    radical: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    pos_in_block: Vec<usize>,
    opposite: OnceLock<Arc<BasedAlgebra>>,
    arrows: OnceLock<Vec<usize>>,
    auslander: bool,
}

impl PartialEq for BasedAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.id == o.id
            && self.p == o.p
            && self.vertices == o.vertices
            && self.basis == o.basis
            && self.mult == o.mult
            && self.idempotents == o.idempotents
            && self.radical == o.radical
    }
}

impl BasedAlgebra {
    /// `mult[a * n + b]` lists the nonzero coefficients of `a * b`.
    pub fn new(
        id: String,
        p: u32,
        vertices: Vec<String>,
        basis: Vec<BasisElement>,
        mult: Vec<Vec<(usize, u32)>>,
        idempotents: Vec<usize>,
        radical: Vec<bool>,
    ) -> Self {
        let nv = vertices.len();
        let n = basis.len();
        assert_eq!(mult.len(), n * n);
        assert_eq!(idempotents.len(), nv);
        let mut blocks = vec![Vec::new(); nv * nv];
        let mut pos_in_block = vec![0; n];
        for (i, b) in basis.iter().enumerate() {
            let blk = &mut blocks[b.src * nv + b.tgt];
            pos_in_block[i] = blk.len();
            blk.push(i);
        }
        BasedAlgebra { id, p, vertices, basis, mult, idempotents, radical, blocks, pos_in_block, opposite: OnceLock::new(), arrows: OnceLock::new(), auslander: false }
    }

    pub fn id(&self) -> &str {
        &self.id
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }
    pub fn element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }
    pub fn is_radical(&self, i: usize) -> bool {
        self.radical[i]
    }
    pub fn radical_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| self.radical[i])
    }
    /// Basis elements labeled `src → tgt`.
    pub fn block(&self, src: usize, tgt: usize) -> &[usize] {
        &self.blocks[src * self.n_vertices() + tgt]
    }
    pub fn pos_in_block(&self, i: usize) -> usize {
        self.pos_in_block[i]
    }

    pub fn basis_mul(&self, a: usize, b: usize) -> &[(usize, u32)] {
        &self.mult[a * self.dim() + b]
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim()];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            let src_ok = self.basis[a].tgt;
            for &b in self.blocks_from(src_ok) {
                let yb = y[b];
                if yb == 0 {
                    continue;
                }
                let s = mul(xa, yb, p);
                for &(c, k) in self.basis_mul(a, b) {
                    out[c] = add(out[c], mul(s, k, p), p);
                }
            }
        }
        out
    }

    /// Basis elements with source `v`.
    fn blocks_from(&self, v: usize) -> impl Iterator<Item = &usize> + '_ {
        let nv = self.n_vertices();
        (0..nv).flat_map(move |t| self.blocks[v * nv + t].iter())
    }

    pub fn unit(&self) -> Vec<u32> {
        let mut u = vec![0u32; self.dim()];
        for &e in &self.idempotents {
            u[e] = 1;
        }
        u
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[i] = 1;
        v
    }

    pub fn opposite(self: &Arc<Self>) -> Arc<BasedAlgebra> {
        self.opposite
            .get_or_init(|| {
                let n = self.dim();
                let id = match self.id.strip_suffix("^op") {
                    Some(s) => s.to_string(),
                    None => format!("{}^op", self.id),
                };
                let basis = self
                    .basis
                    .iter()
                    .map(|b| BasisElement { src: b.tgt, tgt: b.src, label: b.label.clone() })
                    .collect();
                let mut mult = vec![Vec::new(); n * n];
                for a in 0..n {
                    for b in 0..n {
                        mult[a * n + b] = self.mult[b * n + a].clone();
                    }
                }
                let mut op = BasedAlgebra::new(
                    id,
                    self.p,
                    self.vertices.clone(),
                    basis,
                    mult,
                    self.idempotents.clone(),
                    self.radical.clone(),
                );
                op.auslander = self.auslander;
                Arc::new(op)
            })
            .clone()
    }

    /// Marks the algebra as an Auslander algebra (gldim ≤ 2 ≤ domdim).
    pub fn mark_auslander(mut self) -> Self {
        self.auslander = true;
        self
    }

    pub fn is_auslander(&self) -> bool {
        self.auslander
    }

    pub fn same_algebra(&self, o: &BasedAlgebra) -> bool {
        self.id == o.id && self.dim() == o.dim()
    }

    /// Exhaustive associativity check on basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let triples = |a: usize| {
            let mut ok = true;
            for b in 0..n {
                if self.basis[a].tgt != self.basis[b].src {
                    continue;
                }
                for c in 0..n {
                    if self.basis[b].tgt != self.basis[c].src {
                        continue;
                    }
                    let ab = self.mul(&self.basis_vector(a), &self.basis_vector(b));
                    let bc = self.mul(&self.basis_vector(b), &self.basis_vector(c));
                    if self.mul(&ab, &self.basis_vector(c)) != self.mul(&self.basis_vector(a), &bc) {
                        ok = false;
                    }
                }
            }
            ok
        };
        crate::par::map(&(0..n).collect::<Vec<_>>(), |&a| triples(a)).into_iter().all(|x| x)
    }

    /// The unit is a two-sided identity.
    pub fn unit_acts_as_identity(&self) -> bool {
        let u = self.unit();
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.mul(&u, &e) == e && self.mul(&e, &u) == e
        })
    }

    /// `id_src * b * id_tgt = b`, and mismatched idempotents kill `b`.
    pub fn respects_grading(&self) -> bool {
        (0..self.dim()).all(|i| {
            let b = &self.basis[i];
            let e = self.basis_vector(i);
            (0..self.n_vertices()).all(|v| {
                let l = self.mul(&self.basis_vector(self.idempotents[v]), &e);
                let r = self.mul(&e, &self.basis_vector(self.idempotents[v]));
                let want_l = if v == b.src { e.clone() } else { vec![0; self.dim()] };
                let want_r = if v == b.tgt { e.clone() } else { vec![0; self.dim()] };
                l == want_l && r == want_r
            })
        })
    }

    pub fn radical_space(&self) -> Subspace {
        let vecs: Vec<Vec<u32>> = self.radical_elements().map(|i| self.basis_vector(i)).collect();
        Subspace::from_vecs(self.p, self.dim(), &vecs)
    }

    /// Span of all products `x * r` with `x` in `s` and `r` a radical basis element.
    fn times_radical(&self, s: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..s.dim() {
            for r in self.radical_elements() {
                let v = self.mul(s.vector(i), &self.basis_vector(r));
                if v.iter().any(|&x| x != 0) {
                    vecs.push(v);
                }
            }
        }
        Subspace::from_vecs(self.p, self.dim(), &vecs)
    }

    /// Smallest `k` with `rad^k = 0`, if the radical is a nilpotent ideal.
    pub fn radical_nilpotency(&self) -> Option<usize> {
        let rad = self.radical_space();
        // two-sided ideal check
        for i in 0..self.dim() {
            for r in self.radical_elements() {
                let (x, y) = (self.basis_vector(i), self.basis_vector(r));
                if !rad.contains(&self.mul(&x, &y)) || !rad.contains(&self.mul(&y, &x)) {
                    return None;
                }
            }
        }
        let mut power = rad;
        for k in 1..=self.dim() + 1 {
            // power = rad^k
            if power.is_zero() {
                return Some(k);
            }
            power = self.times_radical(&power);
        }
        None
    }

    /// Radical basis elements spanning a complement of `rad²`. Together with
    /// the idempotents they generate the algebra.
    pub fn arrow_elements(&self) -> &[usize] {
        self.arrows.get_or_init(|| {
            let rad2 = self.times_radical(&self.radical_space());
            let mut in_rad2 = vec![false; self.dim()];
            rad2.pivots().iter().for_each(|&c| in_rad2[c] = true);
            self.radical_elements().filter(|&i| !in_rad2[i]).collect()
        })
    }

    /// Arrow counts `dim e_src (rad/rad²) e_tgt` per block, labeled by the
    /// Λ-side direction of the basis elements.
    pub fn gabriel_arrows(&self) -> Vec<(usize, usize, usize)> {
        let rad = self.radical_space();
        let rad2 = self.times_radical(&rad);
        let nv = self.n_vertices();
        let mut in_rad2 = vec![false; self.dim()];
        rad2.pivots().iter().for_each(|&c| in_rad2[c] = true);
        let mut out = Vec::new();
        for s in 0..nv {
            for t in 0..nv {
                let blk = self.block(s, t);
                let r = blk.iter().filter(|&&i| self.radical[i]).count();
                let r2 = blk.iter().filter(|&&i| in_rad2[i]).count();
                if r > r2 {
                    out.push((s, t, r - r2));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `k[x]/x²` as a one-vertex algebra with basis {1, x}.
    fn dual_numbers() -> Arc<BasedAlgebra> {
        let basis = vec![
            BasisElement { src: 0, tgt: 0, label: "1".into() },
            BasisElement { src: 0, tgt: 0, label: "x".into() },
        ];
        let mult = vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![]];
        Arc::new(BasedAlgebra::new("dual".into(), 7, vec!["v".into()], basis, mult, vec![0], vec![false, true]))
    }

    #[test]
    fn small_algebra_checks() {
        let a = dual_numbers();
        assert!(a.is_associative());
        assert!(a.unit_acts_as_identity());
        assert!(a.respects_grading());
        assert_eq!(a.radical_nilpotency(), Some(2));
        assert_eq!(a.gabriel_arrows(), vec![(0, 0, 1)]);
        let op = a.opposite();
        assert_eq!(*op.opposite(), *a);
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.idempotents(), a.idempotents());
    }
}
