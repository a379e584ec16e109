use std::sync::Arc;

use super::{alpha, alpha_map, epsilon, epsilon_map, MonoPair, T2Morphism};
use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, QuotientSpace, Subspace};
use crate::funmod::{
    cokernel, ext1, fitting_decompose, id_leq, image, iso_test, pd_leq, proj_map, proj_module, quotient_map,
    Certification, FunMap, FunMod,
};
use crate::gammaalg::{build_gamma, quotient_algebra, two_sided_ideal, BasedAlgebra, Gamma, IdealBasis, QuotientAlgebra};
use crate::lambdacat::{Catalog, Rep, RepMap};

/// The recollement of `Γ`-modules along `e = Σ id_P` for a self-injective
/// catalog, together with the stable Auslander algebra `Γ̄ = Γ / ΓeΓ`.
pub struct Recollement {
    pub gamma: Gamma,
    pub ideal: IdealBasis,
    pub bar: QuotientAlgebra,
    /// Γ-vertex of the indecomposable projective at each quiver vertex.
    pv: Vec<usize>,
    /// `ρ_a: P_w → P_v` for each arrow `a: v → w`, as an element of `Γ`.
    rho: Vec<(RepMap, Vec<u32>)>,
}

impl Recollement {
    pub fn new(catalog: Arc<Catalog>) -> Result<Self> {
        Self::from_gamma(build_gamma(catalog)?)
    }

    pub fn from_gamma(gamma: Gamma) -> Result<Self> {
        let e = gamma.pi_idempotent()?;
        let ideal = two_sided_ideal(&gamma.alg, &e);
        let bar = quotient_algebra(&gamma.alg, &ideal, "StableGamma");
        let cat = &gamma.catalog;
        let pv: Vec<usize> = cat.projective_vertices().iter().map(|p| p.entry).collect();
        let rho = cat
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let r = cat.arrow_map(a)?;
                let v = gamma.element(pv[ar.tgt], pv[ar.src], &r);
                Ok((r, v))
            })
            .collect::<Result<_>>()?;
        Ok(Recollement { gamma, ideal, bar, pv, rho })
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.gamma.catalog
    }

    pub fn gamma_alg(&self) -> &Arc<BasedAlgebra> {
        &self.gamma.alg
    }

    pub fn stable(&self) -> &Arc<BasedAlgebra> {
        &self.bar.alg
    }

    pub fn projective_vertices(&self) -> Vec<usize> {
        let mut v = self.pv.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `ΓeM`: the submodule generated by the components at projective vertices.
    pub fn e_generated(&self, m: &FunMod) -> Vec<Subspace> {
        let p = m.p();
        let proj = self.projective_vertices();
        let gens: Vec<Vec<Vec<u32>>> = (0..m.dims().len())
            .map(|x| if proj.contains(&x) { Subspace::full(p, m.dim_at(x)).basis_vecs() } else { vec![] })
            .collect();
        m.generated(&gens)
    }

    /// A `Γ`-module annihilated by `ΓeΓ`, read as a `Γ̄`-module.
    fn to_bar(&self, m: &FunMod) -> FunMod {
        let dims = self.bar.vertex_map.iter().map(|&v| m.dim_at(v)).collect();
        let actions = self.bar.basis_map.iter().map(|&b| m.action(b).clone()).collect();
        FunMod::new_unchecked(self.bar.alg.clone(), dims, actions).expect("stable module shapes")
    }

    fn to_bar_map(&self, f: &FunMap) -> FunMap {
        FunMap {
            source: self.to_bar(&f.source),
            target: self.to_bar(&f.target),
            blocks: self.bar.vertex_map.iter().map(|&v| f.blocks[v].clone()).collect(),
        }
    }

    /// `q = Γ̄ ⊗_Γ −`, i.e. `M / ΓeM`.
    pub fn q(&self, m: &FunMod) -> FunMod {
        self.to_bar(&m.quotient(&self.e_generated(m)).0)
    }

    pub fn q_map(&self, f: &FunMap) -> FunMap {
        let g = quotient_map(f, &self.e_generated(&f.source), &self.e_generated(&f.target));
        self.to_bar_map(&g)
    }

    /// Inflation along `Γ → Γ̄`.
    pub fn iota(&self, m: &FunMod) -> FunMod {
        let alg = self.gamma_alg();
        let p = alg.p();
        let nv = alg.n_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| self.bar.vertex_of(v).map_or(0, |w| m.dim_at(w))).collect();
        let actions = (0..alg.dim())
            .map(|b| {
                let e = alg.element(b);
                let mut a = FpMatrix::zeros(p, dims[e.src], dims[e.tgt]);
                if let (Some(s), Some(t)) = (self.bar.vertex_of(e.src), self.bar.vertex_of(e.tgt)) {
                    let coords = self.bar.project(&alg.basis_vector(b));
                    for &j in self.bar.alg.block(s, t) {
                        a.add_scaled(m.action(j), coords[j]);
                    }
                }
                a
            })
            .collect();
        FunMod::new_unchecked(alg.clone(), dims, actions).expect("inflated module shapes")
    }

    pub fn iota_map(&self, f: &FunMap) -> FunMap {
        let p = f.source.p();
        let (s, t) = (self.iota(&f.source), self.iota(&f.target));
        let blocks = (0..self.gamma_alg().n_vertices())
            .map(|v| match self.bar.vertex_of(v) {
                Some(w) => f.blocks[w].clone(),
                None => FpMatrix::zeros(p, 0, 0),
            })
            .collect();
        FunMap { source: s, target: t, blocks }
    }

    /// `p = (Γ̄, −)_Γ`: the largest submodule killed by `ΓeΓ`, which is the
    /// common kernel of the actions of elements `P → X` with `P` projective.
    pub fn p_spaces(&self, m: &FunMod) -> Vec<Subspace> {
        let alg = m.alg();
        let proj = self.projective_vertices();
        (0..alg.n_vertices())
            .map(|x| {
                let mut s = Subspace::full(m.p(), m.dim_at(x));
                for &pp in &proj {
                    for &b in alg.block(pp, x) {
                        s = s.intersection(&m.action(b).kernel());
                    }
                }
                s
            })
            .collect()
    }

    pub fn p(&self, m: &FunMod) -> FunMod {
        self.to_bar(&m.submodule(&self.p_spaces(m)).0)
    }

    /// `e = (Γe, −)_Γ` as a representation of the quiver of `Λ`.
    pub fn e(&self, m: &FunMod) -> Result<Rep> {
        let q = self.catalog().quiver().clone();
        let dims = self.pv.iter().map(|&x| m.dim_at(x)).collect();
        let mats = q
            .arrows
            .iter()
            .zip(&self.rho)
            .map(|(ar, (_, v))| m.act_element(self.pv[ar.tgt], self.pv[ar.src], v))
            .collect();
        Rep::new(q, dims, mats)
    }

    pub fn e_map(&self, f: &FunMap) -> Result<RepMap> {
        let blocks = self.pv.iter().map(|&x| f.blocks[x].clone()).collect();
        RepMap::new(self.e(&f.source)?, self.e(&f.target)?, blocks)
    }

    /// `r = (eΓ, −)_Λ`, realized as the representable `(E, M)`.
    pub fn r(&self, m: &Rep) -> Result<FunMod> {
        proj_module(&self.gamma, m)
    }

    /// The presentation `D: ⊕_{a: v→w} (E, P_w)^{dim M_v} → ⊕_v (E, P_v)^{dim M_v}`
    /// whose cokernel is `Γe ⊗_Λ M`; `D` is `ρ_a ⊗ 1 − 1 ⊗ M(a)`.
    fn l_presentation(&self, m: &Rep) -> Result<(FunMap, Vec<(usize, usize)>)> {
        let g = &self.gamma;
        let cat = self.catalog();
        let p = cat.p();
        let quiver = cat.quiver();
        let nv = quiver.n_vertices();
        let pmods: Vec<FunMod> = (0..nv).map(|v| proj_module(g, cat.entry(self.pv[v]))).collect::<Result<_>>()?;
        let rhos: Vec<FunMap> = self.rho.iter().map(|(r, _)| proj_map(g, r)).collect::<Result<_>>()?;
        let tgt_summands: Vec<(usize, usize)> = (0..nv).flat_map(|v| (0..m.dim_at(v)).map(move |j| (v, j))).collect();
        let src_summands: Vec<(usize, usize)> =
            quiver.arrows.iter().enumerate().flat_map(|(a, ar)| (0..m.dim_at(ar.src)).map(move |j| (a, j))).collect();
        let tgt_mods: Vec<FunMod> = tgt_summands.iter().map(|&(v, _)| pmods[v].clone()).collect();
        let src_mods: Vec<FunMod> = src_summands.iter().map(|&(a, _)| pmods[quiver.arrows[a].tgt].clone()).collect();
        let t = crate::funmod::direct_sum(&g.alg, &tgt_mods).sum;
        let s = crate::funmod::direct_sum(&g.alg, &src_mods).sum;
        let tpos = |v: usize, j: usize| tgt_summands.iter().position(|&x| x == (v, j)).expect("target summand");
        let n_g = g.alg.n_vertices();
        let blocks = (0..n_g)
            .map(|x| {
                let toff: Vec<usize> = offsets(tgt_mods.iter().map(|md| md.dim_at(x)));
                let soff: Vec<usize> = offsets(src_mods.iter().map(|md| md.dim_at(x)));
                let mut blk = FpMatrix::zeros(p, t.dim_at(x), s.dim_at(x));
                for (si, &(a, j)) in src_summands.iter().enumerate() {
                    let ar = &quiver.arrows[a];
                    blk.paste(toff[tpos(ar.src, j)], soff[si], &rhos[a].blocks[x]);
                    let d = pmods[ar.tgt].dim_at(x);
                    for k in 0..m.dim_at(ar.tgt) {
                        let c = m.mat(a).get(k, j);
                        if c != 0 {
                            let neg = FpMatrix::identity(p, d).scale(crate::exactla::neg(c, p));
                            let r0 = toff[tpos(ar.tgt, k)];
                            let mut cur = blk.submatrix(r0, d, soff[si], d);
                            cur = cur.add(&neg);
                            blk.paste(r0, soff[si], &cur);
                        }
                    }
                }
                blk
            })
            .collect();
        Ok((FunMap { source: s, target: t, blocks }, tgt_summands))
    }

    /// `l = Γe ⊗_Λ −`
    pub fn l(&self, m: &Rep) -> Result<FunMod> {
        Ok(cokernel(&self.l_presentation(m)?.0).0)
    }

    /// `γ_M: l(M) → r(M)`, `g ⊗ x ↦ (the map P_v → M hitting x) ∘ g`.
    pub fn gamma_nat(&self, m: &Rep) -> Result<FunMap> {
        let g = &self.gamma;
        let cat = self.catalog();
        let (d, summands) = self.l_presentation(m)?;
        let r = self.r(m)?;
        let comps: Vec<FunMap> = summands
            .iter()
            .map(|&(v, j)| {
                let mut x = vec![0u32; m.dim_at(v)];
                x[j] = 1;
                proj_map(g, &cat.map_from_projective(v, m, &x)?)
            })
            .collect::<Result<_>>()?;
        let (l, _) = cokernel(&d);
        let p = cat.p();
        let blocks = (0..g.alg.n_vertices())
            .map(|x| {
                let mut full = FpMatrix::zeros(p, r.dim_at(x), 0);
                for c in &comps {
                    full = full.hstack(&c.blocks[x]);
                }
                let q = QuotientSpace::new(&d.blocks[x].image());
                debug_assert!(full.mul(&d.blocks[x]).is_zero());
                full.mul(q.section())
            })
            .collect();
        Ok(FunMap { source: l, target: r, blocks })
    }

    /// `c = im γ`
    pub fn c(&self, m: &Rep) -> Result<FunMod> {
        Ok(image(&self.gamma_nat(m)?).0)
    }

    /// `T = c(E)`
    pub fn tilting_t(&self) -> Result<FunMod> {
        self.c(&self.catalog().generator().sum)
    }

    /// `F = q α η`
    pub fn f_functor(&self, x: &MonoPair) -> Result<FunMod> {
        Ok(self.q(&alpha(&self.gamma, x.object())?))
    }

    /// `G = q α ε`
    pub fn g_functor(&self, x: &MonoPair) -> Result<FunMod> {
        Ok(self.q(&alpha(&self.gamma, &epsilon(x))?))
    }

    pub fn f_map(&self, phi: &T2Morphism) -> Result<FunMap> {
        Ok(self.q_map(&alpha_map(&self.gamma, phi)?))
    }

    pub fn g_map(&self, phi: &T2Morphism) -> Result<FunMap> {
        Ok(self.q_map(&alpha_map(&self.gamma, &epsilon_map(phi)?)?))
    }
}

fn offsets(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for d in it {
        out.push(out.last().unwrap() + d);
    }
    out
}

/// Number of isomorphism classes among the Fitting leaves of `x`.
pub fn summand_classes(x: &FunMod, trials: usize, seed: u64) -> Result<(usize, Certification)> {
    let d = fitting_decompose(x, trials, seed)?;
    let mut reps: Vec<FunMod> = Vec::new();
    for s in d.modules() {
        let mut found = false;
        for r in &reps {
            if iso_test(&s, r, trials, seed)?.decided()? {
                found = true;
                break;
            }
        }
        if !found {
            reps.push(s);
        }
    }
    Ok((reps.len(), d.certification))
}

/// `pd ≤ 1`, rigid, and as many summand classes as the algebra has vertices.
pub fn is_tilting(x: &FunMod, trials: usize, seed: u64) -> Result<bool> {
    if !pd_leq(x, 1)? || ext1(x, x)?.dim != 0 {
        return Ok(false);
    }
    Ok(summand_classes(x, trials, seed)?.0 == x.alg().n_vertices())
}

pub fn is_cotilting(x: &FunMod, trials: usize, seed: u64) -> Result<bool> {
    if !id_leq(x, 1)? || ext1(x, x)?.dim != 0 {
        return Ok(false);
    }
    Ok(summand_classes(x, trials, seed)?.0 == x.alg().n_vertices())
}

pub fn require_selfinjective(cat: &Catalog) -> Result<()> {
    if !cat.is_self_injective()? {
        return Err(Error::NotSelfInjective);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funmod::{free_projective, hom_dim};
    use crate::lambdacat::nakayama_catalog;

    fn rec(c: usize, n: usize) -> Recollement {
        Recollement::new(Arc::new(nakayama_catalog(c, n, 101).unwrap())).unwrap()
    }

    #[test]
    fn stable_algebra_of_dual_numbers_is_the_field() {
        let r = rec(1, 1);
        assert_eq!(r.stable().n_vertices(), 1);
        assert_eq!(r.stable().dim(), 1);
    }

    #[test]
    fn q_kills_projectives_and_sends_representables_to_projectives() {
        let r = rec(2, 2);
        let proj = r.projective_vertices();
        for x in 0..r.gamma_alg().n_vertices() {
            let qx = r.q(&free_projective(r.gamma_alg(), x));
            match r.bar.vertex_of(x) {
                None => assert!(proj.contains(&x) && qx.is_zero()),
                Some(w) => assert_eq!(qx, free_projective(r.stable(), w)),
            }
        }
    }

    #[test]
    fn q_and_p_undo_inflation() {
        let r = rec(2, 2);
        for w in 0..r.stable().n_vertices() {
            let m = free_projective(r.stable(), w);
            let i = r.iota(&m);
            assert!(i.is_coherent());
            assert_eq!(r.q(&i), m);
            assert_eq!(r.p(&i), m);
        }
    }

    #[test]
    fn e_recovers_lambda_modules_from_l_and_r() {
        let r = rec(2, 1);
        let cat = r.catalog().clone();
        for i in 0..cat.len() {
            let m = cat.entry(i);
            assert!(cat.is_iso(&r.e(&r.r(m).unwrap()).unwrap(), m).unwrap());
            assert!(cat.is_iso(&r.e(&r.l(m).unwrap()).unwrap(), m).unwrap());
        }
    }

    #[test]
    fn image_of_gamma_is_maps_factoring_through_projectives() {
        let r = rec(1, 2);
        let cat = r.catalog().clone();
        let proj = r.projective_vertices();
        for i in 0..cat.len() {
            let m = cat.entry(i);
            let rm = r.r(m).unwrap();
            let c = r.c(m).unwrap();
            let stable = r.q(&rm);
            for x in 0..r.gamma_alg().n_vertices() {
                let expect = match r.bar.vertex_of(x) {
                    Some(w) => rm.dim_at(x) - stable.dim_at(w),
                    None => {
                        assert!(proj.contains(&x));
                        rm.dim_at(x)
                    }
                };
                assert_eq!(c.dim_at(x), expect);
            }
        }
    }

    #[test]
    fn the_ideal_is_annihilated_by_q() {
        let r = rec(1, 2);
        let t = r.tilting_t().unwrap();
        let qt = r.q(&t);
        assert!(qt.is_zero());
        for &x in &r.projective_vertices() {
            assert_eq!(hom_dim(&free_projective(r.gamma_alg(), x), &t).unwrap(), t.dim_at(x));
        }
    }
}
