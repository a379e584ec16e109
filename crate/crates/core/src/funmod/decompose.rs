use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{end, hom, hom_dim, FunMap, FunMod};
use crate::error::{Error, Result};
use crate::exactla::{poly_roots, FpMatrix, Subspace};

pub const DEFAULT_TRIALS: usize = 64;

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Isomorphic(FunMap),
    NotIsomorphic(String),
    Undetermined,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    /// `Ok(true|false)` for a decided verdict, `Undetermined` as an error.
    pub fn decided(&self) -> Result<bool> {
        match self {
            IsoVerdict::Isomorphic(_) => Ok(true),
            IsoVerdict::NotIsomorphic(_) => Ok(false),
            IsoVerdict::Undetermined => Err(Error::Undetermined("isomorphism test exhausted its trials".into())),
        }
    }
}

/// Invariant comparison, then random elements of `Hom(M, N)`.
pub fn iso_test(m: &FunMod, n: &FunMod, trials: usize, seed: u64) -> Result<IsoVerdict> {
    if m.dims() != n.dims() {
        return Ok(IsoVerdict::NotIsomorphic("dimension vectors differ".into()));
    }
    if m.top_dims() != n.top_dims() {
        return Ok(IsoVerdict::NotIsomorphic("tops differ".into()));
    }
    if m.socle_dims() != n.socle_dims() {
        return Ok(IsoVerdict::NotIsomorphic("socles differ".into()));
    }
    let h = hom(m, n)?;
    let (em, en) = (hom_dim(m, m)?, hom_dim(n, n)?);
    if h.dim() != em || em != en {
        return Ok(IsoVerdict::NotIsomorphic(format!("hom dimensions {} / {em} / {en}", h.dim())));
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Isomorphic(m.identity()));
    }
    for f in h.basis() {
        if f.is_iso() {
            return Ok(IsoVerdict::Isomorphic(f));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let f = h.random(&mut rng);
        if f.is_iso() {
            return Ok(IsoVerdict::Isomorphic(f));
        }
    }
    Ok(IsoVerdict::Undetermined)
}

/// How the indecomposability of the leaves was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Every leaf has a simple top, a simple socle or a one-dimensional End.
    Exact,
    /// Some leaf was accepted because no sampled endomorphism split it.
    Sampled,
}

impl Certification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certification::Exact => "exact",
            Certification::Sampled => "sampled",
        }
    }
}

pub struct Summand {
    pub module: FunMod,
    pub inclusion: FunMap,
}

pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub certification: Certification,
}

impl Decomposition {
    pub fn modules(&self) -> Vec<FunMod> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.summands.iter().map(|s| s.module.total_dim()).collect();
        d.sort_unstable();
        d
    }
}

enum Split {
    Leaf(Certification),
    Parts(Vec<Subspace>, Vec<Subspace>),
}

fn shifted_power(f: &FunMap, lam: u32, k: usize) -> Vec<FpMatrix> {
    let p = f.source.p();
    f.blocks
        .iter()
        .map(|b| b.sub(&FpMatrix::identity(p, b.rows()).scale(lam)).pow(k))
        .collect()
}

enum Probe {
    SingleEigenvalue,
    NoEigenvalue,
    Split(Vec<Subspace>, Vec<Subspace>),
}

fn probe(f: &FunMap) -> Probe {
    let d = f.source.total_dim();
    let roots = poly_roots(&f.total_matrix().charpoly(), f.source.p());
    let Some(&lam) = roots.first() else {
        return Probe::NoEigenvalue;
    };
    let pw = shifted_power(f, lam, d);
    if pw.iter().all(|b| b.is_zero()) {
        return Probe::SingleEigenvalue;
    }
    Probe::Split(pw.iter().map(|b| b.kernel()).collect(), pw.iter().map(|b| b.image()).collect())
}

fn split_once(m: &FunMod, trials: usize, rng: &mut ChaCha8Rng) -> Result<Split> {
    if m.top_dims().iter().sum::<usize>() == 1 || m.socle_dims().iter().sum::<usize>() == 1 {
        return Ok(Split::Leaf(Certification::Exact));
    }
    let e = end(m)?;
    if e.dim() == 1 {
        return Ok(Split::Leaf(Certification::Exact));
    }
    let mut rootless = false;
    let candidates = e.basis().into_iter().chain((0..trials).map(|_| e.random(rng)));
    for f in candidates {
        match probe(&f) {
            Probe::Split(k, i) => return Ok(Split::Parts(k, i)),
            Probe::NoEigenvalue => rootless = true,
            Probe::SingleEigenvalue => {}
        }
    }
    if rootless {
        return Err(Error::Undetermined("endomorphisms without eigenvalues in the prime field".into()));
    }
    Ok(Split::Leaf(Certification::Sampled))
}

/// Fitting decomposition `M = ker φ^d ⊕ im φ^d`, applied recursively.
pub fn fitting_decompose(m: &FunMod, trials: usize, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut cert = Certification::Exact;
    let mut stack = vec![(m.clone(), m.identity())];
    while let Some((cur, inc)) = stack.pop() {
        if cur.is_zero() {
            continue;
        }
        match split_once(&cur, trials, &mut rng)? {
            Split::Leaf(c) => {
                if c == Certification::Sampled {
                    cert = Certification::Sampled;
                }
                out.push(Summand { module: cur, inclusion: inc });
            }
            Split::Parts(k, i) => {
                // pushed in reverse so the kernel part is emitted first
                for spaces in [i, k] {
                    let (sub, j) = cur.submodule(&spaces);
                    stack.push((sub, j.then(&inc)));
                }
            }
        }
    }
    Ok(Decomposition { summands: out, certification: cert })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funmod::{direct_sum, free_projective};
    use crate::gammaalg::build_gamma;
    use crate::lambdacat::nakayama_catalog;
    use std::sync::Arc;

    #[test]
    fn splits_a_block_diagonal_sum() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 2, 101).unwrap())).unwrap();
        let px = free_projective(&g.alg, 2);
        let s = free_projective(&g.alg, 0).top().0;
        let m = direct_sum(&g.alg, &[px.clone(), px.clone(), s.clone()]).sum;
        for seed in 0..3 {
            let d = fitting_decompose(&m, DEFAULT_TRIALS, seed).unwrap();
            assert_eq!(d.summands.len(), 3);
            assert_eq!(d.dims(), {
                let mut v = vec![px.total_dim(), px.total_dim(), 1];
                v.sort_unstable();
                v
            });
            for sm in &d.summands {
                assert!(sm.inclusion.commutes() && sm.inclusion.is_mono());
            }
        }
        let single = fitting_decompose(&px, DEFAULT_TRIALS, 0).unwrap();
        assert_eq!(single.summands.len(), 1);
        assert_eq!(single.certification, Certification::Exact);
    }

    #[test]
    fn iso_verdicts() {
        let g = build_gamma(Arc::new(nakayama_catalog(1, 2, 101).unwrap())).unwrap();
        let px = free_projective(&g.alg, 1);
        assert!(iso_test(&px, &px, DEFAULT_TRIALS, 0).unwrap().is_iso());
        let s = free_projective(&g.alg, 0).top().0;
        let bigger = direct_sum(&g.alg, &[px.clone(), s]).sum;
        assert!(matches!(iso_test(&px, &bigger, DEFAULT_TRIALS, 0).unwrap(), IsoVerdict::NotIsomorphic(_)));
        let other = free_projective(&g.alg, 2);
        assert!(matches!(iso_test(&px, &other, DEFAULT_TRIALS, 0).unwrap(), IsoVerdict::NotIsomorphic(_)));
    }
}
