use std::sync::Arc;

use crate::error::{check_cap, Error, Result};
use crate::exactla::{FpMatrix, QuotientSpace, Subspace};
use crate::gammaalg::BasedAlgebra;

#[derive(Debug)]
struct ModData {
    alg: Arc<BasedAlgebra>,
    dims: Vec<usize>,
    actions: Vec<FpMatrix>,
}

/// Module over a based algebra, stored as functor data: a space per vertex
/// and, for each basis element `b: X → Y`, a matrix `M(Y) → M(X)`.
#[derive(Clone, Debug)]
pub struct FunMod(Arc<ModData>);

impl PartialEq for FunMod {
    fn eq(&self, o: &Self) -> bool {
        self.0.alg.same_algebra(&o.0.alg) && self.0.dims == o.0.dims && self.0.actions == o.0.actions
    }
}

impl FunMod {
    pub fn new(alg: Arc<BasedAlgebra>, dims: Vec<usize>, actions: Vec<FpMatrix>) -> Result<Self> {
        let m = Self::new_unchecked(alg, dims, actions)?;
        if !m.is_coherent() {
            return Err(Error::Precondition("actions do not respect the structure constants".into()));
        }
        Ok(m)
    }

    /// Shape checks only.
    pub fn new_unchecked(alg: Arc<BasedAlgebra>, dims: Vec<usize>, actions: Vec<FpMatrix>) -> Result<Self> {
        if dims.len() != alg.n_vertices() || actions.len() != alg.dim() {
            return Err(Error::Dimension("module does not match its algebra".into()));
        }
        check_cap(|| "module".into(), dims.iter().sum())?;
        for (b, m) in alg.basis().iter().zip(&actions) {
            if m.rows() != dims[b.src] || m.cols() != dims[b.tgt] {
                return Err(Error::Dimension(format!("action of {} has the wrong shape", b.label)));
            }
        }
        Ok(FunMod(Arc::new(ModData { alg, dims, actions })))
    }

    pub fn zero(alg: Arc<BasedAlgebra>) -> Self {
        let actions = (0..alg.dim()).map(|_| FpMatrix::zeros(alg.p(), 0, 0)).collect();
        let dims = vec![0; alg.n_vertices()];
        FunMod(Arc::new(ModData { alg, dims, actions }))
    }

    pub fn alg(&self) -> &Arc<BasedAlgebra> {
        &self.0.alg
    }
    pub fn p(&self) -> u32 {
        self.0.alg.p()
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn dim_at(&self, x: usize) -> usize {
        self.0.dims[x]
    }
    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn action(&self, b: usize) -> &FpMatrix {
        &self.0.actions[b]
    }
    pub fn actions(&self) -> &[FpMatrix] {
        &self.0.actions
    }

    /// Identities act as identities and `action(a) · action(b) = action(a * b)`.
    pub fn is_coherent(&self) -> bool {
        let alg = self.alg();
        let p = self.p();
        for v in 0..alg.n_vertices() {
            if self.action(alg.idempotent(v)) != &FpMatrix::identity(p, self.dim_at(v)) {
                return false;
            }
        }
        let n = alg.dim();
        let rows: Vec<usize> = (0..n).collect();
        crate::par::map(&rows, |&a| {
            let ea = alg.element(a);
            (0..n).filter(|&b| alg.element(b).src == ea.tgt).all(|b| {
                let lhs = self.action(a).mul(self.action(b));
                let eb = alg.element(b);
                let mut rhs = FpMatrix::zeros(p, self.dim_at(ea.src), self.dim_at(eb.tgt));
                for &(c, k) in alg.basis_mul(a, b) {
                    rhs.add_scaled(self.action(c), k);
                }
                lhs == rhs
            })
        })
        .into_iter()
        .all(|x| x)
    }

    /// Action of an algebra element supported on basis elements `X → Y`.
    pub fn act_element(&self, x: usize, y: usize, e: &[u32]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p(), self.dim_at(x), self.dim_at(y));
        for &b in self.alg().block(x, y) {
            m.add_scaled(self.action(b), e[b]);
        }
        m
    }

    pub fn identity(&self) -> FunMap {
        let blocks = self.dims().iter().map(|&d| FpMatrix::identity(self.p(), d)).collect();
        FunMap { source: self.clone(), target: self.clone(), blocks }
    }

    /// Submodule on vertexwise subspaces closed under the action.
    pub fn submodule(&self, spaces: &[Subspace]) -> (FunMod, FunMap) {
        let alg = self.alg().clone();
        let actions = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let (s, t) = (&spaces[e.tgt], &spaces[e.src]);
                let rows: Vec<Vec<u32>> = (0..s.dim())
                    .map(|i| t.coords(&self.action(b).mul_vec(s.vector(i))).expect("submodule is not closed"))
                    .collect();
                FpMatrix::from_vecs(self.p(), t.dim(), &rows).transpose()
            })
            .collect();
        let dims = spaces.iter().map(|s| s.dim()).collect();
        let sub = FunMod::new_unchecked(alg, dims, actions).expect("submodule shapes");
        let blocks = spaces.iter().map(|s| s.basis().transpose()).collect();
        (sub.clone(), FunMap { source: sub, target: self.clone(), blocks })
    }

    pub fn quotient(&self, spaces: &[Subspace]) -> (FunMod, FunMap) {
        let alg = self.alg().clone();
        let qs: Vec<QuotientSpace> = spaces.iter().map(QuotientSpace::new).collect();
        let actions =
            alg.basis().iter().enumerate().map(|(b, e)| qs[e.src].induced(self.action(b), &qs[e.tgt])).collect();
        let dims = qs.iter().map(|q| q.dim()).collect();
        let quo = FunMod::new_unchecked(alg, dims, actions).expect("quotient shapes");
        let blocks = qs.iter().map(|q| q.projection().clone()).collect();
        (quo.clone(), FunMap { source: self.clone(), target: quo, blocks })
    }

    /// Submodule generated by vertexwise vectors: one sweep over the basis
    /// suffices since the basis spans the algebra.
    pub fn generated(&self, gens: &[Vec<Vec<u32>>]) -> Vec<Subspace> {
        let alg = self.alg();
        let p = self.p();
        let mut vecs: Vec<Vec<Vec<u32>>> = vec![Vec::new(); alg.n_vertices()];
        for (b, e) in alg.basis().iter().enumerate() {
            for g in &gens[e.tgt] {
                vecs[e.src].push(self.action(b).mul_vec(g));
            }
        }
        vecs.iter().enumerate().map(|(x, v)| Subspace::from_vecs(p, self.dim_at(x), v)).collect()
    }

    pub fn generated_by_spaces(&self, spaces: &[Subspace]) -> Vec<Subspace> {
        let gens: Vec<Vec<Vec<u32>>> = spaces.iter().map(|s| s.basis_vecs()).collect();
        self.generated(&gens)
    }

    /// `rad M`: images of the arrow elements.
    pub fn radical_spaces(&self) -> Vec<Subspace> {
        let alg = self.alg();
        let p = self.p();
        let mut out: Vec<Subspace> = (0..alg.n_vertices()).map(|x| Subspace::zero(p, self.dim_at(x))).collect();
        for &b in alg.arrow_elements() {
            let x = alg.element(b).src;
            out[x] = out[x].sum(&self.action(b).image());
        }
        out
    }

    /// `soc M`: common kernels of the arrow elements.
    pub fn socle_spaces(&self) -> Vec<Subspace> {
        let alg = self.alg();
        let p = self.p();
        let mut out: Vec<Subspace> = (0..alg.n_vertices()).map(|x| Subspace::full(p, self.dim_at(x))).collect();
        for &b in alg.arrow_elements() {
            let y = alg.element(b).tgt;
            out[y] = out[y].intersection(&self.action(b).kernel());
        }
        out
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(self.dims()).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(|s| s.dim()).collect()
    }

    pub fn radical(&self) -> (FunMod, FunMap) {
        self.submodule(&self.radical_spaces())
    }

    pub fn socle(&self) -> (FunMod, FunMap) {
        self.submodule(&self.socle_spaces())
    }

    pub fn top(&self) -> (FunMod, FunMap) {
        self.quotient(&self.radical_spaces())
    }

    /// Loewy length: number of radical layers.
    pub fn loewy_length(&self) -> usize {
        let mut m = self.clone();
        let mut l = 0;
        while !m.is_zero() {
            m = m.radical().0;
            l += 1;
        }
        l
    }
}

/// Module homomorphism, one block `M(X) → N(X)` per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct FunMap {
    pub source: FunMod,
    pub target: FunMod,
    pub blocks: Vec<FpMatrix>,
}

impl FunMap {
    pub fn new(source: FunMod, target: FunMod, blocks: Vec<FpMatrix>) -> Result<Self> {
        if blocks.len() != source.dims().len()
            || blocks.iter().enumerate().any(|(x, b)| b.rows() != target.dim_at(x) || b.cols() != source.dim_at(x))
        {
            return Err(Error::Dimension("module map blocks".into()));
        }
        let f = FunMap { source, target, blocks };
        if !f.commutes() {
            return Err(Error::Precondition("blocks do not commute with the action".into()));
        }
        Ok(f)
    }

    pub fn zero(source: FunMod, target: FunMod) -> Self {
        let blocks = (0..source.dims().len())
            .map(|x| FpMatrix::zeros(source.p(), target.dim_at(x), source.dim_at(x)))
            .collect();
        FunMap { source, target, blocks }
    }

    /// `f_X M(b) = N(b) f_Y` for every basis element `b: X → Y`.
    pub fn commutes(&self) -> bool {
        self.source.alg().basis().iter().enumerate().all(|(b, e)| {
            self.blocks[e.src].mul(self.source.action(b)) == self.target.action(b).mul(&self.blocks[e.tgt])
        })
    }

    /// `g ∘ self`
    pub fn then(&self, g: &FunMap) -> FunMap {
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(f, g)| g.mul(f)).collect();
        FunMap { source: self.source.clone(), target: g.target.clone(), blocks }
    }

    pub fn add(&self, o: &FunMap) -> FunMap {
        let blocks = self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect();
        FunMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, s: u32) -> FunMap {
        FunMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }
    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }
    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn inverse(&self) -> Option<FunMap> {
        let blocks: Option<Vec<FpMatrix>> = self.blocks.iter().map(|b| b.inverse()).collect();
        Some(FunMap { source: self.target.clone(), target: self.source.clone(), blocks: blocks? })
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(|b| b.kernel()).collect()
    }
    pub fn image_spaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(|b| b.image()).collect()
    }
    pub fn vectorize(&self) -> Vec<u32> {
        crate::exactla::vectorize_blocks(&self.blocks)
    }

    pub fn total_matrix(&self) -> FpMatrix {
        let refs: Vec<&FpMatrix> = self.blocks.iter().collect();
        let m = FpMatrix::block_diag(self.source.p(), &refs);
        if m.rows() == self.target.total_dim() && m.cols() == self.source.total_dim() {
            m
        } else {
            FpMatrix::zeros(self.source.p(), self.target.total_dim(), self.source.total_dim())
        }
    }
}

/// Map induced by `mid: A → B` on `A / killed_a → B / killed_b`, assuming
/// `mid(killed_a) ⊆ killed_b`.
pub fn quotient_map(mid: &FunMap, killed_a: &[Subspace], killed_b: &[Subspace]) -> FunMap {
    let source = mid.source.quotient(killed_a).0;
    let target = mid.target.quotient(killed_b).0;
    let blocks = mid
        .blocks
        .iter()
        .zip(killed_a.iter().zip(killed_b))
        .map(|(m, (ka, kb))| QuotientSpace::new(kb).induced(m, &QuotientSpace::new(ka)))
        .collect();
    FunMap { source, target, blocks }
}

/// Restriction of `mid: A → B` to submodules `sub_a → sub_b`, assuming
/// `mid(sub_a) ⊆ sub_b`.
pub fn restricted_map(mid: &FunMap, sub_a: &[Subspace], sub_b: &[Subspace]) -> FunMap {
    let source = mid.source.submodule(sub_a).0;
    let target = mid.target.submodule(sub_b).0;
    let p = mid.source.p();
    let blocks = mid
        .blocks
        .iter()
        .zip(sub_a.iter().zip(sub_b))
        .map(|(m, (sa, sb))| {
            let cols: Vec<Vec<u32>> = (0..sa.dim())
                .map(|i| sb.coords(&m.mul_vec(sa.vector(i))).expect("restriction lands in the submodule"))
                .collect();
            FpMatrix::from_vecs(p, sb.dim(), &cols).transpose()
        })
        .collect();
    FunMap { source, target, blocks }
}

pub fn kernel(f: &FunMap) -> (FunMod, FunMap) {
    f.source.submodule(&f.kernel_spaces())
}

pub fn cokernel(f: &FunMap) -> (FunMod, FunMap) {
    f.target.quotient(&f.image_spaces())
}

pub fn image(f: &FunMap) -> (FunMod, FunMap) {
    f.target.submodule(&f.image_spaces())
}

pub struct ModSum {
    pub sum: FunMod,
    pub inclusions: Vec<FunMap>,
    pub projections: Vec<FunMap>,
}

pub fn direct_sum(alg: &Arc<BasedAlgebra>, mods: &[FunMod]) -> ModSum {
    let p = alg.p();
    let nv = alg.n_vertices();
    let dims: Vec<usize> = (0..nv).map(|x| mods.iter().map(|m| m.dim_at(x)).sum()).collect();
    let actions = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            let mut m = FpMatrix::zeros(p, dims[e.src], dims[e.tgt]);
            let (mut r, mut c) = (0, 0);
            for md in mods {
                m.paste(r, c, md.action(b));
                r += md.dim_at(e.src);
                c += md.dim_at(e.tgt);
            }
            m
        })
        .collect();
    let sum = FunMod::new_unchecked(alg.clone(), dims.clone(), actions).expect("direct sum shapes");
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut off = vec![0usize; nv];
    for md in mods {
        let inc: Vec<FpMatrix> = (0..nv)
            .map(|x| {
                let mut b = FpMatrix::zeros(p, dims[x], md.dim_at(x));
                b.paste(off[x], 0, &FpMatrix::identity(p, md.dim_at(x)));
                b
            })
            .collect();
        let proj = inc.iter().map(|b| b.transpose()).collect();
        inclusions.push(FunMap { source: md.clone(), target: sum.clone(), blocks: inc });
        projections.push(FunMap { source: sum.clone(), target: md.clone(), blocks: proj });
        for x in 0..nv {
            off[x] += md.dim_at(x);
        }
    }
    ModSum { sum, inclusions, projections }
}

pub fn map_from_sum(ds: &ModSum, target: &FunMod, components: &[FunMap]) -> FunMap {
    let mut acc = FunMap::zero(ds.sum.clone(), target.clone());
    for (c, pr) in components.iter().zip(&ds.projections) {
        acc = acc.add(&pr.then(c));
    }
    acc
}

pub fn map_into_sum(ds: &ModSum, source: &FunMod, components: &[FunMap]) -> FunMap {
    let mut acc = FunMap::zero(source.clone(), ds.sum.clone());
    for (c, inc) in components.iter().zip(&ds.inclusions) {
        acc = acc.add(&c.then(inc));
    }
    acc
}

/// `P(X) = A e_X`: at vertex `Z` the span of basis elements `Z → X`, with
/// the action given by left multiplication.
pub fn free_projective(alg: &Arc<BasedAlgebra>, x: usize) -> FunMod {
    let p = alg.p();
    let nv = alg.n_vertices();
    let dims: Vec<usize> = (0..nv).map(|z| alg.block(z, x).len()).collect();
    let actions = alg
        .basis()
        .iter()
        .enumerate()
        .map(|(c, e)| {
            // c: U → V acts P(X)(V) → P(X)(U) by a ↦ c * a
            let mut m = FpMatrix::zeros(p, dims[e.src], dims[e.tgt]);
            for (j, &a) in alg.block(e.tgt, x).iter().enumerate() {
                for &(k, coef) in alg.basis_mul(c, a) {
                    m.set(alg.pos_in_block(k), j, coef);
                }
            }
            m
        })
        .collect();
    FunMod::new_unchecked(alg.clone(), dims, actions).expect("projective shapes")
}

/// Position of `id_X` inside `P(X)(X)`.
pub fn projective_top(alg: &BasedAlgebra, x: usize) -> usize {
    alg.pos_in_block(alg.idempotent(x))
}

/// Vector-space dual, a module over the opposite algebra.
pub fn dual(m: &FunMod) -> FunMod {
    let op = m.alg().opposite();
    let actions = m.actions().iter().map(|a| a.transpose()).collect();
    FunMod::new_unchecked(op, m.dims().to_vec(), actions).expect("dual shapes")
}

/// `D f: D N → D M`, built over the opposite algebra from the given duals.
pub fn dual_map(f: &FunMap, dsource: &FunMod, dtarget: &FunMod) -> FunMap {
    FunMap { source: dtarget.clone(), target: dsource.clone(), blocks: f.blocks.iter().map(|b| b.transpose()).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::nakayama_catalog;

    #[test]
    fn free_projectives_are_coherent() {
        let g = build_gamma(Arc::new(nakayama_catalog(2, 1, 101).unwrap())).unwrap();
        for x in 0..g.alg.n_vertices() {
            let px = free_projective(&g.alg, x);
            assert!(px.is_coherent());
            assert_eq!(px.top_dims(), (0..g.alg.n_vertices()).map(|z| (z == x) as usize).collect::<Vec<_>>());
            let d = dual(&px);
            assert!(d.is_coherent());
            assert_eq!(dual(&d), px);
        }
    }

    #[test]
    fn radical_of_projective_over_dual_numbers_gamma() {
        let cat = Arc::new(nakayama_catalog(1, 1, 101).unwrap());
        let g = build_gamma(cat.clone()).unwrap();
        let x = cat.index_of("[2]_0").unwrap();
        let px = free_projective(&g.alg, x);
        assert_eq!(px.radical().0.total_dim(), px.total_dim() - 1);
        let s = px.top().0;
        assert_eq!(s.total_dim(), 1);
        assert_eq!(s.radical().0.total_dim(), 0);
    }
}
