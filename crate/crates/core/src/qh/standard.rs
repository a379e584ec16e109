use super::SimpleOrder;
use crate::exactla::Subspace;
use crate::funmod::{free_projective, undual, FunMod};

/// Submodule generated by the full spaces at the chosen vertices.
pub(crate) fn trace_at(m: &FunMod, keep: impl Fn(usize) -> bool) -> Vec<Subspace> {
    let gens: Vec<Vec<Vec<u32>>> = (0..m.dims().len())
        .map(|x| if keep(x) { Subspace::full(m.p(), m.dim_at(x)).basis_vecs() } else { vec![] })
        .collect();
    m.generated(&gens)
}

/// `Δ(ξ)`: `P(ξ)` modulo the trace of every `P(ρ)` with `ρ ≰ ξ`.
pub fn standard_module(order: &SimpleOrder, xi: usize) -> FunMod {
    let p = free_projective(order.alg(), xi);
    let t = trace_at(&p, |r| !order.le(r, xi));
    p.quotient(&t).0
}

/// `∇(ξ)`, as the dual of the standard module of the opposite algebra.
pub fn costandard_module(order: &SimpleOrder, xi: usize) -> FunMod {
    let alg = order.alg();
    let op = alg.opposite();
    let p = free_projective(&op, xi);
    let t = trace_at(&p, |r| !order.le(r, xi));
    undual(&p.quotient(&t).0, alg)
}
