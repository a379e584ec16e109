use super::standard::trace_at;
use super::{costandard_module, standard_module, SimpleOrder};
use crate::funmod::{dual, FunMod};

/// One layer `M_i / M_{i-1} ≅ Δ(label)^multiplicity` of a filtration.
#[derive(Clone, Debug)]
pub struct Layer {
    pub label: usize,
    pub multiplicity: usize,
    pub subquotient: FunMod,
}

/// A standard (or costandard) filtration, bottom layer first.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub module: FunMod,
    pub layers: Vec<Layer>,
}

impl Filtration {
    /// `n_ξ`, indexed by vertex.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = vec![0; self.module.dims().len()];
        for l in &self.layers {
            out[l.label] += l.multiplicity;
        }
        out
    }
}

/// The standard modules of every vertex.
pub fn standard_modules(order: &SimpleOrder) -> Vec<FunMod> {
    (0..order.n()).map(|x| standard_module(order, x)).collect()
}

pub fn costandard_modules(order: &SimpleOrder) -> Vec<FunMod> {
    (0..order.n()).map(|x| costandard_module(order, x)).collect()
}

/// Peels off traces of `P(ξ)` for `ξ` running down a linear extension. The
/// trace `U` of `P(ξ)` is a quotient of `P(ξ)^k`, `k = dim top U(ξ)`; when `U` has
/// no composition factor outside `{ρ ≤ ξ}` it is a quotient of `Δ(ξ)^k`, so it
/// equals `Δ(ξ)^k` exactly when the dimensions match.
pub fn delta_filtration_with(m: &FunMod, order: &SimpleOrder, deltas: &[FunMod]) -> Option<Filtration> {
    let mut cur = m.clone();
    let mut layers = Vec::new();
    for xi in order.descending() {
        if cur.dim_at(xi) == 0 {
            continue;
        }
        let t = trace_at(&cur, |x| x == xi);
        let (u, _) = cur.submodule(&t);
        let k = u.top_dims()[xi];
        let allowed = (0..u.dims().len()).all(|r| u.dim_at(r) == 0 || order.le(r, xi));
        if !allowed || u.total_dim() != k * deltas[xi].total_dim() {
            return None;
        }
        cur = cur.quotient(&t).0;
        layers.push(Layer { label: xi, multiplicity: k, subquotient: u });
    }
    if !cur.is_zero() {
        return None;
    }
    Some(Filtration { module: m.clone(), layers })
}

pub fn delta_filtration(m: &FunMod, order: &SimpleOrder) -> Option<Filtration> {
    delta_filtration_with(m, order, &standard_modules(order))
}

/// A `∇`-filtration of `M` is a `Δ`-filtration of `D M` over the opposite
/// algebra; layers are reported as duals, top layer first.
pub fn nabla_filtration(m: &FunMod, order: &SimpleOrder) -> Option<Filtration> {
    let dm = dual(m);
    let op = SimpleOrder::new(dm.alg().clone(), &pairs(order)).expect("same relation");
    let f = delta_filtration(&dm, &op)?;
    let layers = f
        .layers
        .into_iter()
        .map(|l| Layer { label: l.label, multiplicity: l.multiplicity, subquotient: crate::funmod::undual(&l.subquotient, m.alg()) })
        .collect();
    Some(Filtration { module: m.clone(), layers })
}

fn pairs(o: &SimpleOrder) -> Vec<(usize, usize)> {
    let n = o.n();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| o.lt(a, b)).collect()
}
