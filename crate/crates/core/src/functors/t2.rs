use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, QuotientSpace, Subspace};
use crate::lambdacat::json::{repmap_from_json, repmap_to_json, RepMapJson};
use crate::lambdacat::{cokernel_rep, direct_sum, hom_space, BoundQuiver, Catalog, Rep, RepMap};

/// An object `f: M₁ → M₀` of the morphism category.
#[derive(Clone, Debug, PartialEq)]
pub struct T2Object {
    pub f: RepMap,
}

impl T2Object {
    pub fn new(f: RepMap) -> Self {
        T2Object { f }
    }

    /// `M --id--> M`
    pub fn identity(m: &Rep) -> Self {
        T2Object { f: m.identity() }
    }

    /// `0 → M`
    pub fn from_zero(m: &Rep) -> Self {
        T2Object { f: RepMap::zero(Rep::zero(m.quiver().clone()), m.clone()) }
    }

    /// `M → 0`
    pub fn to_zero(m: &Rep) -> Self {
        T2Object { f: RepMap::zero(m.clone(), Rep::zero(m.quiver().clone())) }
    }

    pub fn top(&self) -> &Rep {
        &self.f.source
    }

    pub fn bottom(&self) -> &Rep {
        &self.f.target
    }

    pub fn quiver(&self) -> &Arc<BoundQuiver> {
        self.f.source.quiver()
    }

    pub fn is_zero(&self) -> bool {
        self.f.source.is_zero() && self.f.target.is_zero()
    }
}

/// An object of the submodule category: a validated monomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct MonoPair(T2Object);

impl MonoPair {
    pub fn new(f: RepMap) -> Result<Self> {
        if !f.is_mono() {
            return Err(Error::NotMono);
        }
        Ok(MonoPair(T2Object { f }))
    }

    pub fn f(&self) -> &RepMap {
        &self.0.f
    }

    pub fn object(&self) -> &T2Object {
        &self.0
    }

    pub fn into_object(self) -> T2Object {
        self.0
    }
}

/// A commuting square `(g₁, g₀): x → y`.
#[derive(Clone, Debug, PartialEq)]
pub struct T2Morphism {
    pub source: T2Object,
    pub target: T2Object,
    pub g1: RepMap,
    pub g0: RepMap,
}

impl T2Morphism {
    pub fn commutes(&self) -> bool {
        self.source.f.then(&self.g0).blocks == self.g1.then(&self.target.f).blocks
    }

    pub fn identity(x: &T2Object) -> Self {
        T2Morphism { source: x.clone(), target: x.clone(), g1: x.top().identity(), g0: x.bottom().identity() }
    }

    pub fn zero(x: &T2Object, y: &T2Object) -> Self {
        T2Morphism {
            source: x.clone(),
            target: y.clone(),
            g1: RepMap::zero(x.top().clone(), y.top().clone()),
            g0: RepMap::zero(x.bottom().clone(), y.bottom().clone()),
        }
    }

    /// `h ∘ self`
    pub fn then(&self, h: &T2Morphism) -> T2Morphism {
        T2Morphism { source: self.source.clone(), target: h.target.clone(), g1: self.g1.then(&h.g1), g0: self.g0.then(&h.g0) }
    }

    pub fn add(&self, o: &T2Morphism) -> T2Morphism {
        T2Morphism { source: self.source.clone(), target: self.target.clone(), g1: self.g1.add(&o.g1), g0: self.g0.add(&o.g0) }
    }

    pub fn scale(&self, s: u32) -> T2Morphism {
        T2Morphism { source: self.source.clone(), target: self.target.clone(), g1: self.g1.scale(s), g0: self.g0.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.g1.is_zero() && self.g0.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.g1.is_iso() && self.g0.is_iso()
    }

    pub fn vectorize(&self) -> Vec<u32> {
        let mut v = self.g1.vectorize();
        v.extend(self.g0.vectorize());
        v
    }
}

/// `Hom(x, y)` in the morphism category, as a list of basis squares.
pub fn t2_hom(x: &T2Object, y: &T2Object) -> Result<Vec<T2Morphism>> {
    let h1 = hom_space(x.top(), y.top())?;
    let h0 = hom_space(x.bottom(), y.bottom())?;
    let p = x.f.source.p();
    let b1 = h1.basis();
    let b0 = h0.basis();
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(b1.len() + b0.len());
    for g in &b1 {
        let v = g.then(&y.f).vectorize();
        cols.push(v.iter().map(|&a| crate::exactla::neg(a, p)).collect());
    }
    for g in &b0 {
        cols.push(x.f.then(g).vectorize());
    }
    let rows: usize = x.top().dims().iter().zip(y.bottom().dims()).map(|(a, b)| a * b).sum();
    let sys = FpMatrix::from_vecs(p, rows, &cols).transpose();
    let ker = if cols.is_empty() { Subspace::zero(p, 0) } else { sys.kernel() };
    let n1 = b1.len();
    Ok((0..ker.dim())
        .map(|i| {
            let c = ker.vector(i);
            T2Morphism {
                source: x.clone(),
                target: y.clone(),
                g1: h1.combine(&c[..n1]),
                g0: h0.combine(&c[n1..]),
            }
        })
        .collect())
}

/// Combination of basis squares.
pub fn t2_combine(x: &T2Object, y: &T2Object, basis: &[T2Morphism], c: &[u32]) -> T2Morphism {
    let mut acc = T2Morphism::zero(x, y);
    for (b, &k) in basis.iter().zip(c) {
        if k != 0 {
            acc = acc.add(&b.scale(k));
        }
    }
    acc
}

/// Isomorphism in the morphism category: multiplicity and hom-dimension
/// invariants, then basis and random squares.
pub fn t2_iso(cat: &Catalog, x: &T2Object, y: &T2Object, trials: usize, seed: u64) -> Result<Option<T2Morphism>> {
    if !cat.is_iso(x.top(), y.top())? || !cat.is_iso(x.bottom(), y.bottom())? {
        return Ok(None);
    }
    let h = t2_hom(x, y)?;
    if h.len() != t2_hom(x, x)?.len() || h.len() != t2_hom(y, y)?.len() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(T2Morphism::zero(x, y)));
    }
    if let Some(f) = h.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    let p = cat.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let c: Vec<u32> = (0..h.len()).map(|_| rand::Rng::gen_range(&mut rng, 0..p)).collect();
        let f = t2_combine(x, y, &h, &c);
        if f.is_iso() {
            return Ok(Some(f));
        }
    }
    Err(Error::Undetermined("morphism-category isomorphism test exhausted its trials".into()))
}

pub fn t2_direct_sum(quiver: &Arc<BoundQuiver>, objs: &[T2Object]) -> T2Object {
    let tops: Vec<Rep> = objs.iter().map(|o| o.top().clone()).collect();
    let bots: Vec<Rep> = objs.iter().map(|o| o.bottom().clone()).collect();
    let st = direct_sum(quiver, &tops);
    let sb = direct_sum(quiver, &bots);
    let mut f = RepMap::zero(st.sum.clone(), sb.sum.clone());
    for (i, o) in objs.iter().enumerate() {
        f = f.add(&st.projections[i].then(&o.f).then(&sb.inclusions[i]));
    }
    T2Object { f }
}

/// Map of cokernels induced by `g0` on `f: A → B` and `f': A' → B'`.
pub fn induced_on_cokernels(f: &RepMap, f2: &RepMap, g0: &RepMap) -> RepMap {
    let (cs, _) = cokernel_rep(f);
    let (ct, _) = cokernel_rep(f2);
    let blocks = f
        .image_spaces()
        .iter()
        .zip(f2.image_spaces())
        .zip(&g0.blocks)
        .map(|((i, i2), g)| QuotientSpace::new(&i2).induced(g, &QuotientSpace::new(i)))
        .collect();
    RepMap::new_unchecked(cs, ct, blocks)
}

/// `ε(f) = (M₀ → cok f)`.
pub fn epsilon(x: &MonoPair) -> T2Object {
    T2Object { f: cokernel_rep(x.f()).1 }
}

/// `ε` on a square between monos: `(g₀, induced map of cokernels)`.
pub fn epsilon_map(phi: &T2Morphism) -> Result<T2Morphism> {
    let (x, y) = (MonoPair::new(phi.source.f.clone())?, MonoPair::new(phi.target.f.clone())?);
    Ok(T2Morphism {
        source: epsilon(&x),
        target: epsilon(&y),
        g1: phi.g0.clone(),
        g0: induced_on_cokernels(x.f(), y.f(), &phi.g0),
    })
}

/// `{"f": RepMap, "mono": bool}`; `mono` records whether the map was validated.
#[derive(Serialize, Deserialize)]
pub struct T2Json {
    pub f: RepMapJson,
    #[serde(default)]
    pub mono: bool,
}

pub fn t2_to_json(x: &T2Object) -> T2Json {
    T2Json { f: repmap_to_json(&x.f), mono: x.f.is_mono() }
}

/// Parses a `T2Json`; when `mono` is claimed it is checked.
pub fn t2_from_json(cat: &Catalog, j: &T2Json) -> Result<T2Object> {
    let f = repmap_from_json(cat, &j.f)?;
    if j.mono && !f.is_mono() {
        return Err(Error::NotMono);
    }
    Ok(T2Object { f })
}
