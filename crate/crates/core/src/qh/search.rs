use serde::{Deserialize, Serialize};

use super::{delta_filtration_with, loewy_order, nabla_filtration, standard_modules, SimpleOrder};
use crate::error::{Error, Result};
use crate::functors::{alpha, is_tilting, summand_classes, Recollement, T2Object};
use crate::funmod::json::{funmod_to_json, FunModJson};
use crate::funmod::{direct_sum, end, free_projective, kernel, pd_leq, FunMod};
use crate::gammaalg::Gamma;
use crate::lambdacat::hom_space;
use crate::random::{case_seed, random_torsionless, rng};

/// `α(f)` for every mono basis map `f` between catalog entries: torsionless
/// modules known in closed form.
pub fn canonical_torsionless(g: &Gamma) -> Result<Vec<FunMod>> {
    let cat = &g.catalog;
    let mut out = Vec::new();
    for i in 0..cat.len() {
        for j in 0..cat.len() {
            if i == j {
                continue;
            }
            for f in hom_space(cat.entry(i), cat.entry(j))?.basis() {
                if f.is_mono() {
                    out.push(alpha(g, &T2Object::new(f))?);
                }
            }
        }
    }
    Ok(out)
}

/// Canonical torsionless modules followed by `samples` seeded random ones.
pub fn torsionless_samples(g: &Gamma, samples: usize, seed: u64) -> Result<Vec<FunMod>> {
    let mut out = canonical_torsionless(g)?;
    for i in 0..samples {
        out.push(random_torsionless(&g.alg, 3, &mut rng(case_seed(seed, i)))?);
    }
    Ok(out)
}

/// The first condition that fails for `order`, with a witness module.
#[derive(Clone, Debug, PartialEq)]
pub enum QhFailure {
    StandardPdAboveOne(usize, FunMod),
    RegularNotFiltered(usize, FunMod),
    TorsionlessNotFiltered(FunMod),
    NotSchurian(usize, FunMod),
}

impl QhFailure {
    pub fn condition(&self) -> &'static str {
        match self {
            QhFailure::StandardPdAboveOne(..) => "pd Delta <= 1",
            QhFailure::RegularNotFiltered(..) => "Gamma in F(Delta)",
            QhFailure::TorsionlessNotFiltered(_) => "torsionless modules are Delta-filtered",
            QhFailure::NotSchurian(..) => "standard modules are Schurian",
        }
    }

    pub fn witness(&self) -> &FunMod {
        match self {
            QhFailure::StandardPdAboveOne(_, m)
            | QhFailure::RegularNotFiltered(_, m)
            | QhFailure::TorsionlessNotFiltered(m)
            | QhFailure::NotSchurian(_, m) => m,
        }
    }
}

/// Checks, in order: `pd Δ(ξ) ≤ 1`, `P(ξ) ∈ F(Δ)`, every sample `∈ F(Δ)`, `Δ` Schurian.
pub fn tol_conditions(order: &SimpleOrder, samples: &[FunMod]) -> Result<Option<QhFailure>> {
    let alg = order.alg();
    let ds = standard_modules(order);
    for (x, d) in ds.iter().enumerate() {
        if !pd_leq(d, 1)? {
            return Ok(Some(QhFailure::StandardPdAboveOne(x, d.clone())));
        }
    }
    for x in 0..order.n() {
        let p = free_projective(alg, x);
        if delta_filtration_with(&p, order, &ds).is_none() {
            return Ok(Some(QhFailure::RegularNotFiltered(x, p)));
        }
    }
    for s in samples {
        if delta_filtration_with(s, order, &ds).is_none() {
            return Ok(Some(QhFailure::TorsionlessNotFiltered(s.clone())));
        }
    }
    for (x, d) in ds.iter().enumerate() {
        if end(d)?.dim() != 1 {
            return Ok(Some(QhFailure::NotSchurian(x, d.clone())));
        }
    }
    Ok(None)
}

/// Standard modules are Schurian and the regular module is `Δ`-filtered.
pub fn is_quasi_hereditary(order: &SimpleOrder) -> Result<bool> {
    let ds = standard_modules(order);
    for d in &ds {
        if end(d)?.dim() != 1 {
            return Ok(false);
        }
    }
    Ok((0..order.n()).all(|x| delta_filtration_with(&free_projective(order.alg(), x), order, &ds).is_some()))
}

/// Which form of `F(Δ) = tol` was checked and how it went.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TolReport {
    pub standard_pd_leq_one: bool,
    pub quasi_hereditary: bool,
    pub torsionless_sampled: usize,
    pub torsionless_filtered: bool,
    pub filtered_sampled: usize,
    pub filtered_pd_leq_one: bool,
}

impl TolReport {
    pub fn passed(&self) -> bool {
        self.standard_pd_leq_one
            && self.quasi_hereditary
            && self.torsionless_filtered
            && self.filtered_pd_leq_one
    }
}

/// An extension `0 → b → E → a → 0` from a random map `Ω a → b`.
pub fn random_extension<R: rand::Rng>(a: &FunMod, b: &FunMod, rng: &mut R) -> Result<FunMod> {
    let c = crate::funmod::projective_cover(a)?;
    let (om, inc) = kernel(&c.map);
    let phi = crate::funmod::hom(&om, b)?.random(rng);
    let ds = direct_sum(a.alg(), &[b.clone(), c.map.source.clone()]);
    let p = a.p();
    let d = crate::funmod::map_into_sum(&ds, &om, &[phi, inc.scale(p - 1)]);
    Ok(crate::funmod::cokernel(&d).0)
}

/// Sampled `Δ`-filtered module: an iterated random extension of standard modules.
pub fn random_delta_filtered<R: rand::Rng>(ds: &[FunMod], layers: usize, rng: &mut R) -> Result<FunMod> {
    let mut m = ds[rng.gen_range(0..ds.len())].clone();
    for _ in 1..layers {
        let d = &ds[rng.gen_range(0..ds.len())];
        m = if rng.gen_bool(0.5) { random_extension(d, &m, rng)? } else { random_extension(&m, d, rng)? };
    }
    Ok(m)
}

/// The seeded under-approximation of `F(Δ) = Γ-tol`.
pub fn qh_tol_equivalence(g: &Gamma, order: &SimpleOrder, samples: usize, seed: u64) -> Result<TolReport> {
    let ds = standard_modules(order);
    let mut standard_pd_leq_one = true;
    for d in &ds {
        standard_pd_leq_one &= pd_leq(d, 1)?;
    }
    let quasi_hereditary = is_quasi_hereditary(order)?;
    let tol = torsionless_samples(g, samples, seed)?;
    let torsionless_filtered = tol.iter().all(|m| delta_filtration_with(m, order, &ds).is_some());
    let mut filtered_pd_leq_one = true;
    for i in 0..samples {
        let mut r = rng(case_seed(seed ^ 0x5eed, i));
        let m = random_delta_filtered(&ds, 1 + i % 3, &mut r)?;
        filtered_pd_leq_one &= pd_leq(&m, 1)?;
    }
    Ok(TolReport {
        standard_pd_leq_one,
        quasi_hereditary,
        torsionless_sampled: tol.len(),
        torsionless_filtered,
        filtered_sampled: samples,
        filtered_pd_leq_one,
    })
}

/// `T ∈ F(Δ) ∩ F(∇)`, `T` tilting, and the number of summand classes equals
/// the number of simples; together these give `add T = add C`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharacteristicReport {
    pub delta_filtered: bool,
    pub nabla_filtered: bool,
    pub tilting: bool,
    pub summand_classes: usize,
    pub simples: usize,
}

impl CharacteristicReport {
    pub fn passed(&self) -> bool {
        self.delta_filtered && self.nabla_filtered && self.tilting && self.summand_classes == self.simples
    }
}

pub fn characteristic_tilting_check(rec: &Recollement, trials: usize, seed: u64) -> Result<CharacteristicReport> {
    let order = loewy_order(&rec.gamma);
    let t = rec.tilting_t()?;
    let ds = standard_modules(&order);
    Ok(CharacteristicReport {
        delta_filtered: delta_filtration_with(&t, &order, &ds).is_some(),
        nabla_filtered: nabla_filtration(&t, &order).is_some(),
        tilting: is_tilting(&t, trials, seed)?,
        summand_classes: summand_classes(&t, trials, seed)?.0,
        simples: order.n(),
    })
}

/// One linear order of the exhaustive search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderOutcome {
    /// Vertex labels, smallest first.
    pub order: Vec<String>,
    pub passed: bool,
    pub failed_condition: Option<String>,
    pub witness: Option<FunModJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    pub orders: Vec<OrderOutcome>,
    pub total: usize,
    pub failing: usize,
    pub summary: String,
}

/// Every linear order on the simples of `Γ`, tested against the conditions
/// [`tol_conditions`] with a shared sample of torsionless modules.
pub fn theorem3_negative_search(g: &Gamma, samples: usize, seed: u64) -> Result<SearchReport> {
    let exts = SimpleOrder::discrete(g.alg.clone()).linear_extensions()?;
    let tol = torsionless_samples(g, samples, seed)?;
    let labels = g.alg.vertices().to_vec();
    let results = crate::par::map(&exts, |ranking| -> Result<OrderOutcome> {
        let order = SimpleOrder::linear(g.alg.clone(), ranking)?;
        let fail = tol_conditions(&order, &tol)?;
        Ok(OrderOutcome {
            order: ranking.iter().map(|&v| labels[v].clone()).collect(),
            passed: fail.is_none(),
            failed_condition: fail.as_ref().map(|f| f.condition().to_string()),
            witness: fail.as_ref().map(|f| funmod_to_json(f.witness())),
        })
    });
    let orders = results.into_iter().collect::<Result<Vec<_>>>()?;
    let total = orders.len();
    let failing = orders.iter().filter(|o| !o.passed).count();
    let summary = format!("{failing}/{total} linear orders fail");
    if total == 0 {
        return Err(Error::Precondition("no vertices".into()));
    }
    Ok(SearchReport { orders, total, failing, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::nakayama_catalog;
    use std::sync::Arc;

    #[test]
    fn loewy_order_passes_on_a12() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 2, 101).unwrap())).unwrap();
        let o = loewy_order(&g);
        assert!(is_quasi_hereditary(&o).unwrap());
        let r = qh_tol_equivalence(&g, &o, 10, 0).unwrap();
        assert!(r.passed(), "{r:?}");
        let s = theorem3_negative_search(&g, 5, 0).unwrap();
        assert_eq!(s.total, 6);
        assert!(s.failing < 6);
        let loewy: Vec<String> = o.linear_extensions().unwrap()[0].iter().map(|&v| g.alg.vertices()[v].clone()).collect();
        assert!(s.orders.iter().find(|x| x.order == loewy).unwrap().passed);
    }

    #[test]
    fn reversed_loewy_order_on_a12() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 2, 101).unwrap())).unwrap();
        let o = loewy_order(&g).reversed();
        let fail = tol_conditions(&o, &torsionless_samples(&g, 5, 0).unwrap()).unwrap();
        let ds: Vec<usize> = standard_modules(&o).iter().map(|d| d.total_dim()).collect();
        assert_eq!(ds, vec![1, 2, 6]);
        assert!(!is_quasi_hereditary(&o).unwrap());
        let fail = fail.unwrap();
        assert_eq!(fail.condition(), "pd Delta <= 1");
        assert_eq!(fail.witness().dims(), &[1, 0, 0]);
    }

    #[test]
    fn characteristic_tilting_on_a11() {
        let rec = Recollement::new(Arc::new(nakayama_catalog(1, 1, 101).unwrap())).unwrap();
        let r = characteristic_tilting_check(&rec, 16, 0).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn every_order_on_a_semisimple_algebra_is_quasi_hereditary() {
        let g = build_gamma(Arc::new(crate::lambdacat::a3_sink_catalog())).unwrap();
        let mut arrows = vec![0u32; g.alg.dim()];
        for &a in g.alg.arrow_elements() {
            arrows[a] = 1;
        }
        let rad = crate::gammaalg::two_sided_ideal(&g.alg, &arrows);
        let top = crate::gammaalg::quotient_algebra(&g.alg, &rad, "Top");
        assert_eq!(top.alg.dim(), top.alg.n_vertices());
        let o = SimpleOrder::discrete(top.alg.clone());
        for r in o.linear_extensions().unwrap().iter().step_by(97) {
            assert!(is_quasi_hereditary(&SimpleOrder::linear(top.alg.clone(), r).unwrap()).unwrap());
        }
        assert!(is_quasi_hereditary(&o).unwrap());
    }
}
