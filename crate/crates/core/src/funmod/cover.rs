use std::sync::Arc;

use super::{cokernel, direct_sum, dual, free_projective, hom, kernel, map_from_sum, projective_top, FunMap, FunMod};
use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, Subspace};
use crate::gammaalg::BasedAlgebra;

/// The map `P(X) → M` sending `id_X` to `x ∈ M(X)`.
pub fn map_from_free(px: &FunMod, x: usize, m: &FunMod, v: &[u32]) -> FunMap {
    let alg = m.alg();
    let p = m.p();
    let blocks = (0..alg.n_vertices())
        .map(|z| {
            let cols: Vec<Vec<u32>> = alg.block(z, x).iter().map(|&a| m.action(a).mul_vec(v)).collect();
            FpMatrix::from_vecs(p, m.dim_at(z), &cols).transpose()
        })
        .collect();
    FunMap { source: px.clone(), target: m.clone(), blocks }
}

/// Free projective summands of a cover and the vertices they sit at.
pub struct Cover {
    pub map: FunMap,
    pub vertices: Vec<usize>,
}

/// The epimorphism `⊕ P(X)^{top_X} ↠ M` from lifts of a top basis.
pub fn projective_cover(m: &FunMod) -> Result<Cover> {
    let alg = m.alg();
    let p = m.p();
    let mut mods = Vec::new();
    let mut gens = Vec::new();
    for (x, rad) in m.radical_spaces().iter().enumerate() {
        let px = free_projective(alg, x);
        for v in Subspace::full(p, m.dim_at(x)).complement_of(rad) {
            gens.push((x, v));
            mods.push(px.clone());
        }
    }
    let ds = direct_sum(alg, &mods);
    let comps: Vec<FunMap> =
        gens.iter().zip(&mods).map(|((x, v), px)| map_from_free(px, *x, m, v)).collect();
    let map = map_from_sum(&ds, m, &comps);
    if !map.is_epi() {
        return Err(Error::Precondition("top lifts do not generate the module".into()));
    }
    let ker = map.kernel_spaces();
    let rad = map.source.radical_spaces();
    if !ker.iter().zip(&rad).all(|(k, r)| r.contains_space(k)) {
        return Err(Error::Precondition("projective cover is not minimal".into()));
    }
    Ok(Cover { map, vertices: gens.into_iter().map(|(x, _)| x).collect() })
}

pub fn syzygy(m: &FunMod) -> Result<(FunMod, FunMap)> {
    Ok(kernel(&projective_cover(m)?.map))
}

pub fn is_projective(m: &FunMod) -> Result<bool> {
    Ok(projective_cover(m)?.map.source.total_dim() == m.total_dim())
}

/// Minimal projective resolution, cut off after `max_len` syzygies.
pub struct Resolution {
    pub terms: Vec<FunMod>,
    /// `differentials[i]: terms[i + 1] → terms[i]`
    pub differentials: Vec<FunMap>,
    pub augmentation: FunMap,
    /// Whether the last syzygy computed was zero.
    pub finite: bool,
}

impl Resolution {
    pub fn length(&self) -> Option<usize> {
        self.finite.then(|| self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0))
    }
}

pub fn projective_resolution(m: &FunMod, max_len: usize) -> Result<Resolution> {
    let c0 = projective_cover(m)?;
    let mut terms = vec![c0.map.source.clone()];
    let mut differentials = Vec::new();
    let (mut k, mut inc) = kernel(&c0.map);
    let mut finite = k.is_zero();
    while !finite && terms.len() <= max_len {
        let c = projective_cover(&k)?;
        terms.push(c.map.source.clone());
        differentials.push(c.map.then(&inc));
        (k, inc) = kernel(&c.map);
        finite = k.is_zero();
    }
    Ok(Resolution { terms, differentials, augmentation: c0.map, finite })
}

/// `pd M ≤ n`, decided by `Ω^{n+1} M = 0` along minimal covers.
pub fn pd_leq(m: &FunMod, n: usize) -> Result<bool> {
    let mut k = m.clone();
    for _ in 0..=n {
        if k.is_zero() {
            return Ok(true);
        }
        k = syzygy(&k)?.0;
    }
    Ok(k.is_zero())
}

/// Projective dimension, or `None` if it exceeds `cap`.
pub fn projective_dimension(m: &FunMod, cap: usize) -> Result<Option<usize>> {
    if m.is_zero() {
        return Ok(Some(0));
    }
    let mut k = m.clone();
    for d in 0..=cap {
        k = syzygy(&k)?.0;
        if k.is_zero() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Module over `alg` whose actions are the transposes of those of `m` (a
/// module over the opposite of `alg`).
pub fn undual(m: &FunMod, alg: &Arc<BasedAlgebra>) -> FunMod {
    let actions = m.actions().iter().map(|a| a.transpose()).collect();
    FunMod::new_unchecked(alg.clone(), m.dims().to_vec(), actions).expect("dual shapes")
}

/// `M ↪ I`, dual to the projective cover of `D M`.
pub fn injective_envelope(m: &FunMod) -> Result<FunMap> {
    let c = projective_cover(&dual(m))?;
    let target = undual(&c.map.source, m.alg());
    let blocks = c.map.blocks.iter().map(|b| b.transpose()).collect();
    Ok(FunMap { source: m.clone(), target, blocks })
}

pub fn cosyzygy(m: &FunMod) -> Result<(FunMod, FunMap)> {
    Ok(cokernel(&injective_envelope(m)?))
}

pub fn is_injective(m: &FunMod) -> Result<bool> {
    is_projective(&dual(m))
}

pub fn id_leq(m: &FunMod, n: usize) -> Result<bool> {
    pd_leq(&dual(m), n)
}

pub fn injective_dimension(m: &FunMod, cap: usize) -> Result<Option<usize>> {
    projective_dimension(&dual(m), cap)
}

/// `P(X) = A e_X` is injective for every vertex.
pub fn is_selfinjective_algebra(alg: &Arc<BasedAlgebra>) -> Result<bool> {
    for x in 0..alg.n_vertices() {
        if !is_injective(&free_projective(alg, x))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(e_X A)`, the injective hull of the simple at `X`.
pub fn free_injective(alg: &Arc<BasedAlgebra>, x: usize) -> FunMod {
    undual(&free_projective(&alg.opposite(), x), alg)
}

/// Evaluation map `M → ⊕ P(X)` over bases of every `Hom(M, P(X))`; a mono
/// exactly when `M` is torsionless.
pub fn projective_embedding(m: &FunMod) -> Result<Option<FunMap>> {
    let alg = m.alg();
    let mut mods = Vec::new();
    let mut comps = Vec::new();
    for x in 0..alg.n_vertices() {
        let px = free_projective(alg, x);
        for f in hom(m, &px)?.basis() {
            mods.push(px.clone());
            comps.push(f);
        }
    }
    let ds = direct_sum(alg, &mods);
    let f = super::map_into_sum(&ds, m, &comps);
    Ok(f.is_mono().then_some(f))
}

fn require_auslander(m: &FunMod) -> Result<()> {
    if !m.alg().is_auslander() {
        return Err(Error::Precondition(format!("{} is not flagged as an Auslander algebra", m.alg().id())));
    }
    Ok(())
}

/// Over an Auslander algebra, torsionless is `pd ≤ 1`.
pub fn is_torsionless(m: &FunMod) -> Result<bool> {
    require_auslander(m)?;
    pd_leq(m, 1)
}

/// Over an Auslander algebra, divisible is `id ≤ 1`.
pub fn is_divisible(m: &FunMod) -> Result<bool> {
    require_auslander(m)?;
    id_leq(m, 1)
}

/// Second route: `M` is a quotient of an injective iff `D M` embeds in a projective.
pub fn injective_quotient(m: &FunMod) -> Result<bool> {
    Ok(projective_embedding(&dual(m))?.is_some())
}

/// Ext¹ from a presentation `π: P ↠ M` by a projective `P`.
pub struct Ext1 {
    pub dim: usize,
    /// Maps `Ω → N` representing a basis of the cokernel of restriction.
    pub cocycles: Vec<FunMap>,
}

pub fn ext1_from(pi: &FunMap, n: &FunMod) -> Result<Ext1> {
    let (k, inc) = kernel(pi);
    let hk = hom(&k, n)?;
    let hp = hom(&pi.source, n)?;
    let restricted: Vec<Vec<u32>> =
        hp.basis().iter().map(|f| hk.coords(&inc.then(f)).expect("restriction is a morphism")).collect();
    let img = Subspace::from_vecs(n.p(), hk.dim(), &restricted);
    let full = Subspace::full(n.p(), hk.dim());
    let cocycles: Vec<FunMap> = full.complement_of(&img).iter().map(|c| hk.combine(c)).collect();
    Ok(Ext1 { dim: cocycles.len(), cocycles })
}

pub fn ext1(m: &FunMod, n: &FunMod) -> Result<Ext1> {
    ext1_from(&projective_cover(m)?.map, n)
}

/// Split off projective summands until none is left; returns the
/// projective-free part and the vertices of the removed summands.
pub fn strip_projectives(m: &FunMod) -> Result<(FunMod, Vec<usize>)> {
    let alg = m.alg().clone();
    let mut cur = m.clone();
    let mut removed = Vec::new();
    'outer: loop {
        for x in 0..alg.n_vertices() {
            if cur.dim_at(x) == 0 {
                continue;
            }
            let px = free_projective(&alg, x);
            let top = projective_top(&alg, x);
            for g in hom(&cur, &px)?.basis() {
                // g composed with the map from P(X) hitting v is invertible iff
                // g_X(v) has a nonzero id_X coordinate
                let row = g.blocks[x].row(top).to_vec();
                if let Some(j) = row.iter().position(|&c| c != 0) {
                    let mut v = vec![0u32; cur.dim_at(x)];
                    v[j] = 1;
                    debug_assert!(map_from_free(&px, x, &cur, &v).then(&g).is_iso());
                    cur = kernel(&g).0;
                    removed.push(x);
                    continue 'outer;
                }
            }
        }
        return Ok((cur, removed));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funmod::{dual, hom_dim};
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::nakayama_catalog;

    fn gamma(c: usize, n: usize) -> crate::gammaalg::Gamma {
        build_gamma(Arc::new(nakayama_catalog(c, n, 101).unwrap())).unwrap()
    }

    #[test]
    fn projectives_have_trivial_syzygy() {
        let g = gamma(1, 2);
        for x in 0..g.alg.n_vertices() {
            let px = free_projective(&g.alg, x);
            assert!(syzygy(&px).unwrap().0.is_zero());
            assert!(pd_leq(&px, 0).unwrap());
            assert!(is_projective(&px).unwrap());
            assert_eq!(ext1(&px, &px.top().0).unwrap().dim, 0);
            assert!(strip_projectives(&px).unwrap().0.is_zero());
        }
    }

    #[test]
    fn simples_have_pd_at_most_two() {
        let g = gamma(1, 2);
        for x in 0..g.alg.n_vertices() {
            let s = free_projective(&g.alg, x).top().0;
            let r = projective_resolution(&s, 4).unwrap();
            assert!(r.finite);
            assert!(r.length().unwrap() <= 2);
            assert_eq!(projective_dimension(&s, 4).unwrap(), r.length());
            for d in &r.differentials {
                assert!(d.commutes());
            }
        }
    }

    #[test]
    fn envelope_is_a_mono_into_an_injective() {
        let g = gamma(2, 1);
        for x in 0..g.alg.n_vertices() {
            let s = free_projective(&g.alg, x).top().0;
            let e = injective_envelope(&s).unwrap();
            assert!(e.is_mono() && e.commutes());
            assert!(is_injective(&e.target).unwrap());
            assert!(cosyzygy(&e.target).unwrap().0.is_zero());
            assert_eq!(dual(&dual(&s)), s);
        }
    }

    #[test]
    fn gamma_of_dual_numbers_is_not_selfinjective() {
        let g = gamma(1, 1);
        assert!(!is_selfinjective_algebra(&g.alg).unwrap());
        let lam = g.catalog.index_of("[2]_0").unwrap();
        let pe = free_projective(&g.alg, lam);
        assert!(is_injective(&pe).unwrap());
        assert!(id_leq(&pe, 0).unwrap());
    }

    #[test]
    fn injective_hull_of_simple_has_simple_socle() {
        let g = gamma(1, 2);
        for x in 0..g.alg.n_vertices() {
            let i = free_injective(&g.alg, x);
            assert!(i.is_coherent());
            let soc: Vec<usize> = i.socle_dims();
            assert_eq!(soc, (0..g.alg.n_vertices()).map(|z| (z == x) as usize).collect::<Vec<_>>());
            assert_eq!(hom_dim(&i.socle().0, &i).unwrap(), 1);
        }
    }
}
