use std::sync::Arc;

use super::{BasedAlgebra, BasisElement};
use crate::exactla::{QuotientSpace, Subspace};

/// Two-sided ideal of a based algebra.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub span: Subspace,
}

impl IdealBasis {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_two_sided(&self, alg: &BasedAlgebra) -> bool {
        (0..self.span.dim()).all(|i| {
            let v = self.span.vector(i);
            (0..alg.dim()).all(|b| {
                let e = alg.basis_vector(b);
                self.span.contains(&alg.mul(v, &e)) && self.span.contains(&alg.mul(&e, v))
            })
        })
    }
}

/// Span of `a e b` over basis elements, saturated under multiplication.
pub fn two_sided_ideal(alg: &BasedAlgebra, e: &[u32]) -> IdealBasis {
    let n = alg.dim();
    let p = alg.p();
    let left: Vec<Vec<u32>> = (0..n).map(|a| alg.mul(&alg.basis_vector(a), e)).collect();
    let left = Subspace::from_vecs(p, n, &left);
    let mut vecs = Vec::new();
    for i in 0..left.dim() {
        for b in 0..n {
            vecs.push(alg.mul(left.vector(i), &alg.basis_vector(b)));
        }
    }
    let mut span = Subspace::from_vecs(p, n, &vecs);
    loop {
        let mut more = Vec::new();
        for i in 0..span.dim() {
            for b in 0..n {
                let eb = alg.basis_vector(b);
                for v in [alg.mul(span.vector(i), &eb), alg.mul(&eb, span.vector(i))] {
                    if !span.contains(&v) {
                        more.push(v);
                    }
                }
            }
        }
        if more.is_empty() {
            return IdealBasis { span };
        }
        more.extend(span.basis_vecs());
        span = Subspace::from_vecs(p, n, &more);
    }
}

/// `A / I` with the bookkeeping needed to move between the two.
pub struct QuotientAlgebra {
    pub alg: Arc<BasedAlgebra>,
    /// Vertex of the quotient ↦ vertex of the original algebra.
    pub vertex_map: Vec<usize>,
    /// Basis element of the quotient ↦ basis element of the original algebra.
    pub basis_map: Vec<usize>,
    pub space: QuotientSpace,
}

impl QuotientAlgebra {
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        self.space.project(v)
    }

    pub fn lift(&self, v: &[u32]) -> Vec<u32> {
        self.space.lift(v)
    }

    /// Quotient vertex of an original vertex, if it survives.
    pub fn vertex_of(&self, v: usize) -> Option<usize> {
        self.vertex_map.iter().position(|&w| w == v)
    }
}

/// Representatives are the basis elements at the non-pivot columns of the
/// ideal, so surviving elements keep their labels.
pub fn quotient_algebra(alg: &BasedAlgebra, ideal: &IdealBasis, id: &str) -> QuotientAlgebra {
    let space = QuotientSpace::new(&ideal.span);
    let basis_map = space.free_columns().to_vec();
    let n = alg.dim();
    let vertex_map: Vec<usize> =
        (0..alg.n_vertices()).filter(|&v| basis_map.contains(&alg.idempotent(v))).collect();
    let vidx = |v: usize| vertex_map.iter().position(|&w| w == v).expect("element at a killed vertex survives");
    let basis: Vec<BasisElement> = basis_map
        .iter()
        .map(|&i| {
            let b = alg.element(i);
            BasisElement { src: vidx(b.src), tgt: vidx(b.tgt), label: b.label.clone() }
        })
        .collect();
    let q = basis.len();
    let mut mult = vec![Vec::new(); q * q];
    for (j1, &a) in basis_map.iter().enumerate() {
        for (j2, &b) in basis_map.iter().enumerate() {
            let prod = alg.basis_mul(a, b);
            if prod.is_empty() {
                continue;
            }
            let mut dense = vec![0u32; n];
            for &(c, k) in prod {
                dense[c] = k;
            }
            mult[j1 * q + j2] =
                space.project(&dense).into_iter().enumerate().filter(|(_, v)| *v != 0).collect();
        }
    }
    let idempotents: Vec<usize> = vertex_map
        .iter()
        .map(|&v| basis_map.iter().position(|&i| i == alg.idempotent(v)).unwrap())
        .collect();
    let radical = basis_map.iter().map(|&i| alg.is_radical(i)).collect();
    let vertices = vertex_map.iter().map(|&v| alg.vertices()[v].clone()).collect();
    let qa = BasedAlgebra::new(id.into(), alg.p(), vertices, basis, mult, idempotents, radical);
    QuotientAlgebra { alg: Arc::new(qa), vertex_map, basis_map, space }
}
