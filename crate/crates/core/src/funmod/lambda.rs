use crate::error::Result;
use crate::exactla::FpMatrix;
use crate::gammaalg::Gamma;
use crate::lambdacat::{hom_space, HomSpace, Rep, RepMap};

use super::{FunMap, FunMod};

/// `(X, M)` in the canonical basis for every entry `X`.
fn homs_into(g: &Gamma, m: &Rep) -> Result<Vec<HomSpace>> {
    crate::par::map(&(0..g.m()).collect::<Vec<_>>(), |&x| hom_space(g.catalog.entry(x), m))
        .into_iter()
        .collect()
}

fn homs_from(g: &Gamma, m: &Rep) -> Result<Vec<HomSpace>> {
    crate::par::map(&(0..g.m()).collect::<Vec<_>>(), |&x| hom_space(m, g.catalog.entry(x)))
        .into_iter()
        .collect()
}

/// The representable `(−, M)_Λ`: projective when restricted to the catalog.
pub fn proj_module(g: &Gamma, m: &Rep) -> Result<FunMod> {
    let homs = homs_into(g, m)?;
    let p = g.catalog.p();
    let actions = g
        .alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            let (src, tgt) = (&homs[e.tgt], &homs[e.src]);
            let cols: Vec<Vec<u32>> =
                src.basis().iter().map(|h| tgt.coords(&g.map(b).then(h)).expect("precomposition")).collect();
            FpMatrix::from_vecs(p, tgt.dim(), &cols).transpose()
        })
        .collect();
    FunMod::new_unchecked(g.alg.clone(), homs.iter().map(|h| h.dim()).collect(), actions)
}

/// `(−, f)_Λ`, with both modules rebuilt by [`proj_module`].
pub fn proj_map(g: &Gamma, f: &RepMap) -> Result<FunMap> {
    let (hs, ht) = (homs_into(g, &f.source)?, homs_into(g, &f.target)?);
    let p = g.catalog.p();
    let blocks = hs
        .iter()
        .zip(&ht)
        .map(|(s, t)| {
            let cols: Vec<Vec<u32>> = s.basis().iter().map(|h| t.coords(&h.then(f)).expect("postcomposition")).collect();
            FpMatrix::from_vecs(p, t.dim(), &cols).transpose()
        })
        .collect();
    Ok(FunMap { source: proj_module(g, &f.source)?, target: proj_module(g, &f.target)?, blocks })
}

/// `D(M, −)_Λ`: injective when restricted to the catalog.
pub fn inj_module(g: &Gamma, m: &Rep) -> Result<FunMod> {
    let homs = homs_from(g, m)?;
    let p = g.catalog.p();
    let actions = g
        .alg
        .basis()
        .iter()
        .enumerate()
        .map(|(b, e)| {
            // postcomposition Hom(M, X) → Hom(M, Y), transposed
            let (src, tgt) = (&homs[e.src], &homs[e.tgt]);
            let cols: Vec<Vec<u32>> =
                src.basis().iter().map(|h| tgt.coords(&h.then(g.map(b))).expect("postcomposition")).collect();
            FpMatrix::from_vecs(p, tgt.dim(), &cols)
        })
        .collect();
    FunMod::new_unchecked(g.alg.clone(), homs.iter().map(|h| h.dim()).collect(), actions)
}

/// `D(f, −)_Λ: D(M, −) → D(N, −)` for `f: M → N`.
pub fn inj_map(g: &Gamma, f: &RepMap) -> Result<FunMap> {
    let (hs, ht) = (homs_from(g, &f.source)?, homs_from(g, &f.target)?);
    let p = g.catalog.p();
    let blocks = hs
        .iter()
        .zip(&ht)
        .map(|(s, t)| {
            // precomposition Hom(N, X) → Hom(M, X), transposed
            let cols: Vec<Vec<u32>> = t.basis().iter().map(|h| s.coords(&f.then(h)).expect("precomposition")).collect();
            FpMatrix::from_vecs(p, s.dim(), &cols)
        })
        .collect();
    Ok(FunMap { source: inj_module(g, &f.source)?, target: inj_module(g, &f.target)?, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funmod::{free_projective, hom_dim, is_injective, is_projective, iso_test};
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::{direct_sum, nakayama_catalog};
    use std::sync::Arc;

    #[test]
    fn representables_are_the_free_projectives() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 2, 101).unwrap())).unwrap();
        for x in 0..g.m() {
            let pm = proj_module(&g, g.catalog.entry(x)).unwrap();
            assert!(pm.is_coherent());
            assert!(pm.dim_at(x) >= 1);
            assert!(is_projective(&pm).unwrap());
            assert!(iso_test(&pm, &free_projective(&g.alg, x), 64, 0).unwrap().is_iso());
            let im = inj_module(&g, g.catalog.entry(x)).unwrap();
            assert!(im.is_coherent());
            assert!(is_injective(&im).unwrap());
            let soc = im.socle_dims();
            assert_eq!(soc, (0..g.m()).map(|z| (z == x) as usize).collect::<Vec<_>>());
        }
        let e3 = g.catalog.entry_by_name("[3]_0").unwrap();
        assert_eq!(proj_module(&g, e3).unwrap().total_dim(), 6);
    }

    #[test]
    fn functorial_on_maps() {
        let g = build_gamma(Arc::new(nakayama_catalog(2, 1, 101).unwrap())).unwrap();
        for x in 0..g.m() {
            for y in 0..g.m() {
                for f in g.hom(x, y).basis() {
                    let pf = proj_map(&g, &f).unwrap();
                    assert!(pf.commutes());
                    let jf = inj_map(&g, &f).unwrap();
                    assert!(jf.commutes());
                }
            }
        }
        let reps: Vec<_> = (0..g.m()).map(|i| g.catalog.entry(i).clone()).collect();
        let e = direct_sum(g.catalog.quiver(), &reps).sum;
        let pe = proj_module(&g, &e).unwrap();
        assert_eq!(pe.total_dim(), g.alg.dim());
        assert_eq!(hom_dim(&pe, &pe).unwrap(), g.alg.dim());
    }
}
