use rand::Rng;

use super::{FunMap, FunMod};
use crate::error::{Error, Result};
use crate::exactla::{blocks_from_vector, intertwiner_system, Constraint, FpMatrix, Subspace};

/// `Hom(M, N)` with a canonical basis.
#[derive(Clone, Debug)]
pub struct ModHom {
    pub source: FunMod,
    pub target: FunMod,
    space: Subspace,
}

impl ModHom {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn from_vector(&self, v: &[u32]) -> FunMap {
        let blocks = blocks_from_vector(self.source.p(), self.source.dims(), self.target.dims(), v);
        FunMap { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn basis_map(&self, i: usize) -> FunMap {
        self.from_vector(self.space.vector(i))
    }

    pub fn basis(&self) -> Vec<FunMap> {
        (0..self.dim()).map(|i| self.basis_map(i)).collect()
    }

    pub fn combine(&self, c: &[u32]) -> FunMap {
        self.from_vector(&self.space.combine(c))
    }

    pub fn coords(&self, f: &FunMap) -> Option<Vec<u32>> {
        self.space.coords(&f.vectorize())
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> FunMap {
        let p = self.source.p();
        let c: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.combine(&c)
    }
}

fn same_algebra(m: &FunMod, n: &FunMod) -> Result<()> {
    if !m.alg().same_algebra(n.alg()) {
        return Err(Error::Precondition(format!("modules over {} and {}", m.alg().id(), n.alg().id())));
    }
    Ok(())
}

fn system(m: &FunMod, n: &FunMod, elems: &[usize]) -> Result<FpMatrix> {
    let alg = m.alg();
    let cons: Vec<Constraint> = elems
        .iter()
        .map(|&b| {
            let e = alg.element(b);
            Constraint { v: e.tgt, w: e.src, a: m.action(b), b: n.action(b) }
        })
        .collect();
    intertwiner_system(m.p(), m.dims(), n.dims(), &cons)
}

fn solve(m: &FunMod, n: &FunMod, elems: &[usize]) -> Result<ModHom> {
    same_algebra(m, n)?;
    let eq = system(m, n, elems)?;
    Ok(ModHom { source: m.clone(), target: n.clone(), space: eq.kernel() })
}

/// Commuting equations over the arrow elements only; the idempotents act
/// vertexwise and together these generate the algebra.
pub fn hom(m: &FunMod, n: &FunMod) -> Result<ModHom> {
    solve(m, n, m.alg().arrow_elements())
}

/// Commuting equations over every basis element.
pub fn hom_exhaustive(m: &FunMod, n: &FunMod) -> Result<ModHom> {
    let all: Vec<usize> = (0..m.alg().dim()).collect();
    solve(m, n, &all)
}

pub fn hom_dim(m: &FunMod, n: &FunMod) -> Result<usize> {
    Ok(hom(m, n)?.dim())
}

pub fn end(m: &FunMod) -> Result<ModHom> {
    hom(m, m)
}
