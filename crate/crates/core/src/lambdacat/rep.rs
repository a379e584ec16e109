use std::sync::Arc;

use super::BoundQuiver;
use crate::error::{check_cap, Error, Result};
use crate::exactla::{blocks_from_vector, intertwiner_system, Constraint, FpMatrix, QuotientSpace, Subspace};

#[derive(Debug, PartialEq, Eq)]
struct RepData {
    quiver: Arc<BoundQuiver>,
    dims: Vec<usize>,
    mats: Vec<FpMatrix>,
}

/// Finite-dimensional representation of a bound quiver. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep(Arc<RepData>);

impl Rep {
    /// Validates shapes and relations.
    pub fn new(quiver: Arc<BoundQuiver>, dims: Vec<usize>, mats: Vec<FpMatrix>) -> Result<Self> {
        let r = Self::new_unchecked(quiver, dims, mats)?;
        if let Some(rel) = r.failing_relation() {
            return Err(Error::RelationFailure { entry: format!("{:?}", r.dims()), relation: rel });
        }
        Ok(r)
    }

    /// Shape checks only; for representations that satisfy the relations by construction.
    pub fn new_unchecked(quiver: Arc<BoundQuiver>, dims: Vec<usize>, mats: Vec<FpMatrix>) -> Result<Self> {
        if dims.len() != quiver.n_vertices() || mats.len() != quiver.arrows.len() {
            return Err(Error::Dimension("representation does not match its quiver".into()));
        }
        check_cap(|| "representation".into(), dims.iter().sum())?;
        for (a, m) in quiver.arrows.iter().zip(&mats) {
            if m.rows() != dims[a.tgt] || m.cols() != dims[a.src] || m.p() != quiver.p {
                return Err(Error::Dimension(format!(
                    "arrow {} carries a {}x{} matrix, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    dims[a.tgt],
                    dims[a.src]
                )));
            }
        }
        Ok(Rep(Arc::new(RepData { quiver, dims, mats })))
    }

    pub fn zero(quiver: Arc<BoundQuiver>) -> Self {
        let dims = vec![0; quiver.n_vertices()];
        let mats = quiver.arrows.iter().map(|_| FpMatrix::zeros(quiver.p, 0, 0)).collect();
        Rep(Arc::new(RepData { quiver, dims, mats }))
    }

    pub fn quiver(&self) -> &Arc<BoundQuiver> {
        &self.0.quiver
    }
    pub fn p(&self) -> u32 {
        self.0.quiver.p
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn mat(&self, a: usize) -> &FpMatrix {
        &self.0.mats[a]
    }
    pub fn mats(&self) -> &[FpMatrix] {
        &self.0.mats
    }

    /// Matrix of a path (arrows in traversal order).
    pub fn eval_path(&self, path: &[usize]) -> FpMatrix {
        let mut m = self.mat(path[0]).clone();
        for &a in &path[1..] {
            m = self.mat(a).mul(&m);
        }
        m
    }

    pub fn failing_relation(&self) -> Option<usize> {
        let q = self.quiver();
        q.relations.iter().position(|rel| {
            let (s, t) = (q.arrows[rel[0].path[0]].src, q.arrows[*rel[0].path.last().unwrap()].tgt);
            let mut acc = FpMatrix::zeros(self.p(), self.dim_at(t), self.dim_at(s));
            for term in rel {
                acc.add_scaled(&self.eval_path(&term.path), term.coef);
            }
            !acc.is_zero()
        })
    }

    /// Offsets of the vertex blocks inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims().len() + 1);
        let mut s = 0;
        for &d in self.dims() {
            off.push(s);
            s += d;
        }
        off.push(s);
        off
    }

    /// `rad M`: images of the arrows.
    pub fn radical_spaces(&self) -> Vec<Subspace> {
        let q = self.quiver();
        (0..q.n_vertices())
            .map(|v| {
                q.arrows_into(v)
                    .map(|a| self.mat(a).image())
                    .fold(Subspace::zero(self.p(), self.dim_at(v)), |acc, s| acc.sum(&s))
            })
            .collect()
    }

    /// `soc M`: common kernels of the arrows.
    pub fn socle_spaces(&self) -> Vec<Subspace> {
        let q = self.quiver();
        (0..q.n_vertices())
            .map(|v| {
                q.arrows_from(v)
                    .map(|a| self.mat(a).kernel())
                    .fold(Subspace::full(self.p(), self.dim_at(v)), |acc, s| acc.intersection(&s))
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(self.dims()).map(|(r, d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(|s| s.dim()).collect()
    }

    /// Subrepresentation on vertexwise subspaces closed under the arrows.
    pub fn subrep(&self, spaces: &[Subspace]) -> (Rep, RepMap) {
        let q = self.quiver().clone();
        let mats = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let (s, t) = (&spaces[ar.src], &spaces[ar.tgt]);
                let rows: Vec<Vec<u32>> = (0..s.dim())
                    .map(|i| t.coords(&self.mat(a).mul_vec(s.vector(i))).expect("subrep: not closed under arrows"))
                    .collect();
                FpMatrix::from_vecs(self.p(), t.dim(), &rows).transpose()
            })
            .collect();
        let dims = spaces.iter().map(|s| s.dim()).collect();
        let sub = Rep::new_unchecked(q, dims, mats).expect("subrep shapes");
        let blocks = spaces.iter().map(|s| s.basis().transpose()).collect();
        let inc = RepMap::new_unchecked(sub.clone(), self.clone(), blocks);
        (sub, inc)
    }

    /// Quotient by vertexwise subspaces closed under the arrows.
    pub fn quotient(&self, spaces: &[Subspace]) -> (Rep, RepMap) {
        let q = self.quiver().clone();
        let qs: Vec<QuotientSpace> = spaces.iter().map(QuotientSpace::new).collect();
        let mats = q
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| qs[ar.tgt].induced(self.mat(a), &qs[ar.src]))
            .collect();
        let dims = qs.iter().map(|s| s.dim()).collect();
        let quo = Rep::new_unchecked(q, dims, mats).expect("quotient shapes");
        let blocks = qs.iter().map(|s| s.projection().clone()).collect();
        let proj = RepMap::new_unchecked(self.clone(), quo.clone(), blocks);
        (quo, proj)
    }

    /// Smallest subrepresentation containing the given vertexwise vectors.
    pub fn generated(&self, gens: &[Vec<Vec<u32>>]) -> Vec<Subspace> {
        let q = self.quiver();
        let p = self.p();
        let mut spaces: Vec<Subspace> =
            (0..q.n_vertices()).map(|v| Subspace::from_vecs(p, self.dim_at(v), &gens[v])).collect();
        loop {
            let mut grew = false;
            for (a, ar) in q.arrows.iter().enumerate() {
                let img = spaces[ar.src].image_under(self.mat(a));
                if !spaces[ar.tgt].contains_space(&img) {
                    spaces[ar.tgt] = spaces[ar.tgt].sum(&img);
                    grew = true;
                }
            }
            if !grew {
                return spaces;
            }
        }
    }

    pub fn identity(&self) -> RepMap {
        let blocks = self.dims().iter().map(|&d| FpMatrix::identity(self.p(), d)).collect();
        RepMap::new_unchecked(self.clone(), self.clone(), blocks)
    }

    /// Matrix acting on the total space (block structure by vertex).
    pub fn total_arrow_matrix(&self, a: usize) -> FpMatrix {
        let off = self.offsets();
        let ar = &self.quiver().arrows[a];
        let n = self.total_dim();
        let mut m = FpMatrix::zeros(self.p(), n, n);
        m.paste(off[ar.tgt], off[ar.src], self.mat(a));
        m
    }
}

/// Morphism of representations, one block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    pub blocks: Vec<FpMatrix>,
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, blocks: Vec<FpMatrix>) -> Result<Self> {
        let f = RepMap { source, target, blocks };
        f.check_shapes()?;
        if !f.commutes() {
            return Err(Error::Precondition("blocks do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Rep, target: Rep, blocks: Vec<FpMatrix>) -> Self {
        RepMap { source, target, blocks }
    }

    fn check_shapes(&self) -> Result<()> {
        if self.blocks.len() != self.source.dims().len() {
            return Err(Error::Dimension("block count".into()));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != self.target.dim_at(v) || b.cols() != self.source.dim_at(v) {
                return Err(Error::Dimension(format!("block at vertex {v}")));
            }
        }
        Ok(())
    }

    pub fn zero(source: Rep, target: Rep) -> Self {
        let blocks = (0..source.dims().len())
            .map(|v| FpMatrix::zeros(source.p(), target.dim_at(v), source.dim_at(v)))
            .collect();
        RepMap { source, target, blocks }
    }

    pub fn commutes(&self) -> bool {
        self.source.quiver().arrows.iter().enumerate().all(|(a, ar)| {
            self.blocks[ar.tgt].mul(self.source.mat(a)) == self.target.mat(a).mul(&self.blocks[ar.src])
        })
    }

    /// `g ∘ self`
    pub fn then(&self, g: &RepMap) -> RepMap {
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(f, g)| g.mul(f)).collect();
        RepMap::new_unchecked(self.source.clone(), g.target.clone(), blocks)
    }

    pub fn add(&self, o: &RepMap) -> RepMap {
        let blocks = self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect();
        RepMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, s: u32) -> RepMap {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        RepMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
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
        self.is_mono() && self.is_epi()
    }

    pub fn inverse(&self) -> Option<RepMap> {
        let blocks: Option<Vec<FpMatrix>> = self.blocks.iter().map(|b| b.inverse()).collect();
        Some(RepMap::new_unchecked(self.target.clone(), self.source.clone(), blocks?))
    }

    /// Block-diagonal matrix on total spaces.
    pub fn total_matrix(&self) -> FpMatrix {
        let refs: Vec<&FpMatrix> = self.blocks.iter().collect();
        FpMatrix::block_diag(self.source.p(), &refs)
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(|b| b.kernel()).collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace> {
        self.blocks.iter().map(|b| b.image()).collect()
    }

    /// Column-major vectorization of all blocks, vertex by vertex.
    pub fn vectorize(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.vectorize_colmajor()).collect()
    }
}

pub fn kernel_rep(f: &RepMap) -> (Rep, RepMap) {
    f.source.subrep(&f.kernel_spaces())
}

pub fn cokernel_rep(f: &RepMap) -> (Rep, RepMap) {
    f.target.quotient(&f.image_spaces())
}

pub fn image_rep(f: &RepMap) -> (Rep, RepMap) {
    f.target.subrep(&f.image_spaces())
}

/// Direct sum with its inclusions and projections.
pub struct DirectSum {
    pub sum: Rep,
    pub inclusions: Vec<RepMap>,
    pub projections: Vec<RepMap>,
}

pub fn direct_sum(quiver: &Arc<BoundQuiver>, reps: &[Rep]) -> DirectSum {
    let p = quiver.p;
    let nv = quiver.n_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| reps.iter().map(|r| r.dim_at(v)).sum()).collect();
    let mats = (0..quiver.arrows.len())
        .map(|a| {
            let refs: Vec<&FpMatrix> = reps.iter().map(|r| r.mat(a)).collect();
            let mut m = FpMatrix::block_diag(p, &refs);
            // block_diag of 0x0 blocks loses the shape when every summand is zero there
            if m.rows() != dims[quiver.arrows[a].tgt] || m.cols() != dims[quiver.arrows[a].src] {
                m = FpMatrix::zeros(p, dims[quiver.arrows[a].tgt], dims[quiver.arrows[a].src]);
            }
            m
        })
        .collect();
    let sum = Rep::new_unchecked(quiver.clone(), dims.clone(), mats).expect("direct sum shapes");
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut off = vec![0usize; nv];
    for r in reps {
        let inc: Vec<FpMatrix> = (0..nv)
            .map(|v| {
                let mut b = FpMatrix::zeros(p, dims[v], r.dim_at(v));
                b.paste(off[v], 0, &FpMatrix::identity(p, r.dim_at(v)));
                b
            })
            .collect();
        let proj = inc.iter().map(|b| b.transpose()).collect();
        inclusions.push(RepMap::new_unchecked(r.clone(), sum.clone(), inc));
        projections.push(RepMap::new_unchecked(sum.clone(), r.clone(), proj));
        for v in 0..nv {
            off[v] += r.dim_at(v);
        }
    }
    DirectSum { sum, inclusions, projections }
}

/// Map into a direct sum from its components.
pub fn map_into_sum(ds: &DirectSum, components: &[RepMap]) -> RepMap {
    let src = components[0].source.clone();
    let mut acc = RepMap::zero(src, ds.sum.clone());
    for (c, inc) in components.iter().zip(&ds.inclusions) {
        acc = acc.add(&c.then(inc));
    }
    acc
}

/// Map out of a direct sum from its components.
pub fn map_from_sum(ds: &DirectSum, components: &[RepMap]) -> RepMap {
    let tgt = components[0].target.clone();
    let mut acc = RepMap::zero(ds.sum.clone(), tgt);
    for (c, proj) in components.iter().zip(&ds.projections) {
        acc = acc.add(&proj.then(c));
    }
    acc
}

/// `Hom(X, Y)` with a canonical basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Rep,
    pub target: Rep,
    space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn from_vector(&self, v: &[u32]) -> RepMap {
        let blocks = blocks_from_vector(self.source.p(), self.source.dims(), self.target.dims(), v);
        RepMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn basis_map(&self, i: usize) -> RepMap {
        self.from_vector(self.space.vector(i))
    }

    pub fn basis(&self) -> Vec<RepMap> {
        (0..self.dim()).map(|i| self.basis_map(i)).collect()
    }

    pub fn combine(&self, c: &[u32]) -> RepMap {
        self.from_vector(&self.space.combine(c))
    }

    /// Coordinates of a morphism `X → Y` in the canonical basis.
    pub fn coords(&self, f: &RepMap) -> Option<Vec<u32>> {
        self.space.coords(&f.vectorize())
    }
}

/// Unknowns `f_v` stacked column-major in vertex order; equations
/// `f_w X(a) - Y(a) f_v = 0` for every arrow `a: v → w`.
pub fn commuting_equations(x: &Rep, y: &Rep) -> Result<FpMatrix> {
    let cons: Vec<Constraint> = x
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(a, ar)| Constraint { v: ar.src, w: ar.tgt, a: x.mat(a), b: y.mat(a) })
        .collect();
    intertwiner_system(x.p(), x.dims(), y.dims(), &cons)
}

pub fn hom_space(x: &Rep, y: &Rep) -> Result<HomSpace> {
    if !Arc::ptr_eq(x.quiver(), y.quiver()) && x.quiver() != y.quiver() {
        return Err(Error::Precondition("representations of different quivers".into()));
    }
    let eq = commuting_equations(x, y)?;
    Ok(HomSpace { source: x.clone(), target: y.clone(), space: eq.kernel() })
}

pub fn hom_dim(x: &Rep, y: &Rep) -> Result<usize> {
    let eq = commuting_equations(x, y)?;
    Ok(eq.cols() - eq.rank())
}

/// Deterministic isomorphism test for two representations whose
/// endomorphism rings are local: `X ≅ Y` iff some product of basis maps
/// `Y → X` after `X → Y` is not nilpotent.
pub fn local_iso(x: &Rep, y: &Rep) -> Result<Option<RepMap>> {
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(RepMap::zero(x.clone(), y.clone())));
    }
    let fwd = hom_space(x, y)?;
    let back = hom_space(y, x)?;
    for f in fwd.basis() {
        for g in back.basis() {
            if !f.then(&g).total_matrix().is_nilpotent() {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambdacat::nakayama::nakayama_catalog;

    #[test]
    fn hom_dims_on_k_x_mod_x3() {
        let cat = nakayama_catalog(1, 2, 101).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let x = cat.entry_by_name(&format!("[{i}]_0")).unwrap();
                let y = cat.entry_by_name(&format!("[{j}]_0")).unwrap();
                let h = hom_space(x, y).unwrap();
                assert_eq!(h.dim(), i.min(j));
                assert!(h.basis().iter().all(|f| f.commutes()));
            }
        }
    }

    #[test]
    fn identity_lies_in_end() {
        let cat = nakayama_catalog(2, 2, 101).unwrap();
        for e in cat.entries() {
            let h = hom_space(&e.rep, &e.rep).unwrap();
            assert!(h.coords(&e.rep.identity()).is_some());
        }
    }

    #[test]
    fn kernel_cokernel_of_identity_and_zero() {
        let cat = nakayama_catalog(1, 1, 101).unwrap();
        let lam = cat.entry_by_name("[2]_0").unwrap();
        let (c, _) = cokernel_rep(&lam.identity());
        assert!(c.is_zero());
        let (k, inc) = kernel_rep(&RepMap::zero(lam.clone(), lam.clone()));
        assert_eq!(k.dims(), lam.dims());
        assert!(inc.is_mono());
        let z = Rep::zero(lam.quiver().clone());
        let f = RepMap::zero(z.clone(), lam.clone());
        assert!(f.is_mono());
        let (c, _) = cokernel_rep(&f);
        assert_eq!(c.dims(), lam.dims());
    }
}
