use super::{T2Morphism, T2Object};
use crate::error::Result;
use crate::funmod::{cokernel, hom_dim, proj_map, proj_module, quotient_map, FunMap, FunMod};
use crate::gammaalg::Gamma;

/// The presentation `(E, f): (E, M₁) → (E, M₀)` and its cokernel.
pub struct AlphaData {
    pub presentation: FunMap,
    pub module: FunMod,
    pub projection: FunMap,
}

pub fn alpha_data(g: &Gamma, x: &T2Object) -> Result<AlphaData> {
    let presentation = proj_map(g, &x.f)?;
    let (module, projection) = cokernel(&presentation);
    Ok(AlphaData { presentation, module, projection })
}

/// `α(f) = cok (E, f)`.
pub fn alpha(g: &Gamma, x: &T2Object) -> Result<FunMod> {
    Ok(alpha_data(g, x)?.module)
}

/// `α` on a square: the map of cokernels induced by `(E, g₀)`.
pub fn alpha_map(g: &Gamma, phi: &T2Morphism) -> Result<FunMap> {
    let ps = proj_map(g, &phi.source.f)?;
    let pt = proj_map(g, &phi.target.f)?;
    let mid = proj_map(g, &phi.g0)?;
    Ok(quotient_map(&mid, &ps.image_spaces(), &pt.image_spaces()))
}

/// `f` is onto iff `((E, P), α(f)) = 0` for every projective entry `P`.
pub fn epi_criterion(g: &Gamma, x: &T2Object) -> Result<bool> {
    let a = alpha(g, x)?;
    for pe in g.catalog.projective_entries() {
        if hom_dim(&proj_module(g, g.catalog.entry(pe))?, &a)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::{hom_space, nakayama_catalog};
    use std::sync::Arc;

    #[test]
    fn kernel_objects_and_dual_number_counterexamples() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 1, 101).unwrap())).unwrap();
        let lam = g.catalog.entry_by_name("[2]_0").unwrap().clone();
        let k = g.catalog.entry_by_name("[1]_0").unwrap().clone();
        assert!(alpha(&g, &T2Object::identity(&lam)).unwrap().is_zero());
        assert!(alpha(&g, &T2Object::to_zero(&lam)).unwrap().is_zero());
        assert!(!alpha(&g, &T2Object::from_zero(&lam)).unwrap().is_zero());
        let top = hom_space(&lam, &k).unwrap().basis_map(0);
        assert!(top.is_epi());
        assert!(!alpha(&g, &T2Object::new(top.clone())).unwrap().is_zero());
        assert!(epi_criterion(&g, &T2Object::new(top)).unwrap());
        assert!(!epi_criterion(&g, &T2Object::from_zero(&k)).unwrap());
        assert!(epi_criterion(&g, &T2Object::identity(&k)).unwrap());
    }

    #[test]
    fn alpha_is_functorial_on_identities() {
        let g = build_gamma(Arc::new(nakayama_catalog(2, 1, 101).unwrap())).unwrap();
        let a = g.catalog.entry(0).clone();
        let b = g.catalog.entry(3).clone();
        for f in hom_space(&a, &b).unwrap().basis() {
            let x = T2Object::new(f);
            let id = alpha_map(&g, &T2Morphism::identity(&x)).unwrap();
            assert_eq!(id, alpha(&g, &x).unwrap().identity());
        }
    }
}
