use std::sync::Arc;

use num_rational::Ratio;

use super::rep::{direct_sum, hom_dim, hom_space, local_iso, map_into_sum, DirectSum, HomSpace};
use super::{BoundQuiver, Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, Subspace};

type Q = Ratio<i128>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub rep: Rep,
    pub projective: bool,
    pub injective: bool,
}

/// Yoneda data for the indecomposable projective at a vertex.
#[derive(Clone, Debug)]
pub struct ProjectiveVertex {
    pub entry: usize,
    /// Top generator in `P_v(v)`.
    pub generator: Vec<u32>,
}

/// A bound quiver algebra together with a list of its indecomposables.
#[derive(Clone, Debug)]
pub struct Catalog {
    quiver: Arc<BoundQuiver>,
    entries: Vec<Entry>,
    claimed_complete: bool,
    gram: Vec<Vec<usize>>,
    gram_inv: Option<Vec<Vec<Q>>>,
    projectives: Vec<ProjectiveVertex>,
    injectives: Vec<usize>,
}

impl PartialEq for Catalog {
    fn eq(&self, o: &Self) -> bool {
        self.quiver == o.quiver && self.entries == o.entries && self.claimed_complete == o.claimed_complete
    }
}

impl Catalog {
    /// Validates entries and, for complete catalogs, certifies the
    /// projective and injective flags.
    pub fn new(quiver: Arc<BoundQuiver>, entries: Vec<Entry>, claimed_complete: bool) -> Result<Self> {
        for e in &entries {
            if let Some(r) = e.rep.failing_relation() {
                return Err(Error::RelationFailure { entry: e.name.clone(), relation: r });
            }
            if e.rep.is_zero() {
                return Err(Error::InvalidCatalog(format!("{} is the zero representation", e.name)));
            }
        }
        for (i, a) in entries.iter().enumerate() {
            radical_of_end(&a.rep, &a.name)?;
            for b in &entries[..i] {
                if a.name == b.name {
                    return Err(Error::Schema(format!("duplicate entry name {}", a.name)));
                }
                if local_iso(&a.rep, &b.rep)?.is_some() {
                    return Err(Error::DuplicateIso(b.name.clone(), a.name.clone()));
                }
            }
        }
        let gram: Vec<Vec<usize>> = entries
            .iter()
            .map(|x| entries.iter().map(|y| hom_dim(&x.rep, &y.rep)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let mut cat = Catalog {
            quiver,
            entries,
            claimed_complete,
            gram_inv: None,
            gram,
            projectives: Vec::new(),
            injectives: Vec::new(),
        };
        if claimed_complete {
            cat.gram_inv = Some(rational_inverse(&cat.gram).ok_or(Error::SingularGram)?);
            cat.certify_flags()?;
        }
        Ok(cat)
    }

    pub fn quiver(&self) -> &Arc<BoundQuiver> {
        &self.quiver
    }
    pub fn p(&self) -> u32 {
        self.quiver.p
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }
    pub fn entry(&self, i: usize) -> &Rep {
        &self.entries[i].rep
    }
    pub fn name(&self, i: usize) -> &str {
        &self.entries[i].name
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }
    pub fn entry_by_name(&self, name: &str) -> Option<&Rep> {
        self.index_of(name).map(|i| self.entry(i))
    }
    pub fn claimed_complete(&self) -> bool {
        self.claimed_complete
    }
    /// `gram[i][j] = dim Hom(X_i, X_j)`
    pub fn gram(&self) -> &[Vec<usize>] {
        &self.gram
    }
    pub fn projective_vertices(&self) -> &[ProjectiveVertex] {
        &self.projectives
    }
    /// Entry index of the injective envelope of the simple at each vertex.
    pub fn injective_vertices(&self) -> &[usize] {
        &self.injectives
    }
    pub fn projective_entries(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i].projective).collect()
    }
    pub fn injective_entries(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i].injective).collect()
    }

    /// `E`, the direct sum of all entries.
    pub fn generator(&self) -> DirectSum {
        let reps: Vec<Rep> = self.entries.iter().map(|e| e.rep.clone()).collect();
        direct_sum(&self.quiver, &reps)
    }

    fn require_complete(&self) -> Result<&Vec<Vec<Q>>> {
        self.gram_inv.as_ref().ok_or_else(|| Error::Precondition("catalog is not claimed complete".into()))
    }

    /// Krull-Schmidt multiplicities of `m`, from the Hom-Gram system.
    pub fn multiplicities(&self, m: &Rep) -> Result<Vec<usize>> {
        let inv = self.require_complete()?;
        let h: Vec<i128> =
            self.entries.iter().map(|x| hom_dim(&x.rep, m).map(|d| d as i128)).collect::<Result<_>>()?;
        inv.iter()
            .enumerate()
            .map(|(j, row)| {
                let n: Q = row.iter().zip(&h).map(|(a, &b)| a * b).sum();
                if !n.is_integer() || n < Q::from_integer(0) {
                    Err(Error::InvalidCatalog(format!(
                        "multiplicity {n} of {} is not a non-negative integer",
                        self.entries[j].name
                    )))
                } else {
                    Ok(n.to_integer() as usize)
                }
            })
            .collect()
    }

    pub fn is_iso(&self, a: &Rep, b: &Rep) -> Result<bool> {
        Ok(a.dims() == b.dims() && self.multiplicities(a)? == self.multiplicities(b)?)
    }

    /// Single entry isomorphic to `m`, if `m` is indecomposable.
    pub fn identify(&self, m: &Rep) -> Result<Option<usize>> {
        let mult = self.multiplicities(m)?;
        if mult.iter().sum::<usize>() != 1 {
            return Ok(None);
        }
        Ok(mult.iter().position(|&k| k == 1))
    }

    fn certify_flags(&mut self) -> Result<()> {
        let nv = self.quiver.n_vertices();
        // Yoneda: dim Hom(P_v, X) = dim X_v for every X
        for v in 0..nv {
            let i = (0..self.len())
                .find(|&i| (0..self.len()).all(|j| self.gram[i][j] == self.entry(j).dim_at(v)))
                .ok_or_else(|| {
                    Error::InvalidCatalog(format!("no entry is the projective at {}", self.quiver.vertices[v]))
                })?;
            let rep = self.entry(i);
            let rad = &rep.radical_spaces()[v];
            let full = Subspace::full(self.p(), rep.dim_at(v));
            let generator = full.complement_of(rad).into_iter().next().expect("projective has a top");
            self.projectives.push(ProjectiveVertex { entry: i, generator });
        }
        let mut inj = Vec::with_capacity(nv);
        for v in 0..nv {
            let nu = self.nu_of_projective_vertex(v)?;
            inj.push(self.identify(&nu)?.ok_or_else(|| {
                Error::InvalidCatalog(format!("D Hom(P_{v}, Λ) is not a catalog entry"))
            })?);
        }
        self.injectives = inj;
        for (i, e) in self.entries.iter().enumerate() {
            let is_p = self.projectives.iter().any(|pv| pv.entry == i);
            let is_i = self.injectives.contains(&i);
            if e.projective != is_p || e.injective != is_i {
                return Err(Error::InvalidCatalog(format!(
                    "flags of {} disagree with the certified projective={is_p}, injective={is_i}",
                    e.name
                )));
            }
        }
        Ok(())
    }

    /// Evaluation at the top generator: `Hom(P_v, M) → M_v`, an isomorphism.
    pub fn yoneda(&self, v: usize, m: &Rep) -> Result<(HomSpace, FpMatrix)> {
        let pv = &self.projectives[v];
        let h = hom_space(self.entry(pv.entry), m)?;
        let cols: Vec<Vec<u32>> = h.basis().iter().map(|f| f.blocks[v].mul_vec(&pv.generator)).collect();
        let ev = FpMatrix::from_vecs(self.p(), m.dim_at(v), &cols).transpose();
        Ok((h, ev))
    }

    /// The map `P_v → M` sending the top generator to `x ∈ M_v`.
    pub fn map_from_projective(&self, v: usize, m: &Rep, x: &[u32]) -> Result<RepMap> {
        let (h, ev) = self.yoneda(v, m)?;
        let c = ev.solve(x)?.ok_or_else(|| Error::InvalidCatalog("Yoneda evaluation is not onto".into()))?;
        Ok(h.combine(&c))
    }

    /// `ρ_a: P_{w'} → P_w` for an arrow `a: w → w'`, sending the top of
    /// `P_{w'}` to `P_w(a)` applied to the top of `P_w`.
    pub fn arrow_map(&self, a: usize) -> Result<RepMap> {
        let ar = &self.quiver.arrows[a];
        let pw = &self.projectives[ar.src];
        let x = self.entry(pw.entry).mat(a).mul_vec(&pw.generator);
        self.map_from_projective(ar.tgt, self.entry(pw.entry), &x)
    }

    /// `D Hom(P_v, Λ)` as a representation.
    pub fn nu_of_projective_vertex(&self, v: usize) -> Result<Rep> {
        let pv = self.entry(self.projectives[v].entry);
        let nv = self.quiver.n_vertices();
        let homs: Vec<HomSpace> =
            (0..nv).map(|w| hom_space(pv, self.entry(self.projectives[w].entry))).collect::<Result<_>>()?;
        let dims: Vec<usize> = homs.iter().map(|h| h.dim()).collect();
        let mut mats = Vec::new();
        for (a, ar) in self.quiver.arrows.iter().enumerate() {
            let rho = self.arrow_map(a)?;
            let (src, tgt) = (&homs[ar.tgt], &homs[ar.src]);
            let cols: Vec<Vec<u32>> =
                src.basis().iter().map(|f| tgt.coords(&f.then(&rho)).expect("postcomposition")).collect();
            // postcomposition matrix has these as columns; the dual map is its transpose
            mats.push(FpMatrix::from_vecs(self.p(), tgt.dim(), &cols));
        }
        Rep::new(self.quiver.clone(), dims, mats)
    }

    /// `ν` on a projective-flagged entry.
    pub fn nakayama_functor_on_projective(&self, entry: usize) -> Result<usize> {
        self.require_complete()?;
        let v = self
            .projectives
            .iter()
            .position(|pv| pv.entry == entry)
            .ok_or_else(|| Error::Precondition(format!("{} is not projective", self.name(entry))))?;
        let nu = self.nu_of_projective_vertex(v)?;
        self.identify(&nu)?.ok_or_else(|| Error::NotFound(format!("ν({})", self.name(entry))))
    }

    pub fn is_self_injective(&self) -> Result<bool> {
        self.require_complete()?;
        Ok(self.entries.iter().all(|e| !e.projective || e.injective))
    }

    /// Minimal projective cover `⊕ P_v^{top_v} ↠ M`.
    pub fn projective_cover(&self, m: &Rep) -> Result<RepMap> {
        self.require_complete()?;
        let mut reps = Vec::new();
        let mut comps = Vec::new();
        for (v, rad) in m.radical_spaces().iter().enumerate() {
            for x in Subspace::full(self.p(), m.dim_at(v)).complement_of(rad) {
                reps.push(self.entry(self.projectives[v].entry).clone());
                comps.push(self.map_from_projective(v, m, &x)?);
            }
        }
        let ds = direct_sum(&self.quiver, &reps);
        if comps.is_empty() {
            return Ok(RepMap::zero(ds.sum, m.clone()));
        }
        Ok(super::rep::map_from_sum(&ds, &comps))
    }

    /// Minimal injective envelope `M ↪ ⊕ I_v^{soc_v}`.
    pub fn injective_envelope(&self, m: &Rep) -> Result<RepMap> {
        self.require_complete()?;
        let p = self.p();
        let mut reps = Vec::new();
        let mut comps = Vec::new();
        for (v, soc) in m.socle_spaces().iter().enumerate() {
            if soc.dim() == 0 {
                continue;
            }
            let iv = self.entry(self.injectives[v]);
            let soc_iv = &iv.socle_spaces()[v];
            debug_assert_eq!(soc_iv.dim(), 1);
            let h = hom_space(m, iv)?;
            let mut chosen: Vec<Vec<u32>> = Vec::new();
            for f in h.basis() {
                let row: Vec<u32> = (0..soc.dim())
                    .map(|k| soc_iv.coords(&f.blocks[v].mul_vec(soc.vector(k))).expect("socle to socle")[0])
                    .collect();
                let mut trial = chosen.clone();
                trial.push(row.clone());
                if FpMatrix::from_vecs(p, soc.dim(), &trial).rank() == trial.len() {
                    chosen = trial;
                    reps.push(iv.clone());
                    comps.push(f);
                }
                if chosen.len() == soc.dim() {
                    break;
                }
            }
            if chosen.len() < soc.dim() {
                return Err(Error::InvalidCatalog("injective envelope: restriction to the socle is not onto".into()));
            }
        }
        let ds = direct_sum(&self.quiver, &reps);
        if comps.is_empty() {
            return Ok(RepMap::zero(m.clone(), ds.sum));
        }
        let f = map_into_sum(&ds, &comps);
        debug_assert!(f.is_mono());
        Ok(f)
    }

    /// `D(Λ_Λ)` as a direct sum of the `ν(P_v)`.
    pub fn dual_regular(&self) -> Result<Rep> {
        let reps: Vec<Rep> =
            (0..self.quiver.n_vertices()).map(|v| self.nu_of_projective_vertex(v)).collect::<Result<_>>()?;
        Ok(direct_sum(&self.quiver, &reps).sum)
    }

    pub fn regular(&self) -> Rep {
        let reps: Vec<Rep> = self.projectives.iter().map(|pv| self.entry(pv.entry).clone()).collect();
        direct_sum(&self.quiver, &reps).sum
    }
}

/// Scalars `λ_k` with `φ_k - λ_k` nilpotent for the canonical basis `φ_k` of
/// `End(X)`, and the radical spanned by the `φ_k - λ_k id` (vectorized).
/// Fails unless `End(X)` is local with residue field `F_p`.
pub fn radical_of_end(x: &Rep, name: &str) -> Result<(HomSpace, Vec<u32>, Subspace)> {
    let p = x.p();
    let d = x.total_dim();
    let end = hom_space(x, x)?;
    let id = x.identity();
    let id_total = FpMatrix::identity(p, d);
    let mut lambdas = Vec::with_capacity(end.dim());
    let mut rad_vecs = Vec::new();
    for f in end.basis() {
        let t = f.total_matrix();
        let lam = if d as u32 % p != 0 {
            let tr = (0..d).fold(0u32, |acc, i| crate::exactla::add(acc, t.get(i, i), p));
            crate::exactla::mul(tr, crate::exactla::inv(d as u32 % p, p), p)
        } else {
            (0..p).find(|&l| t.sub(&id_total.scale(l)).is_nilpotent()).ok_or_else(|| Error::LambdaMethod(name.into()))?
        };
        if !t.sub(&id_total.scale(lam)).is_nilpotent() {
            return Err(Error::LambdaMethod(name.into()));
        }
        lambdas.push(lam);
        rad_vecs.push(f.add(&id.scale(crate::exactla::neg(lam, p))).vectorize());
    }
    let n = end.space().ambient();
    let rad = Subspace::from_vecs(p, n, &rad_vecs);
    if rad.dim() + 1 != end.dim() {
        return Err(Error::LambdaMethod(name.into()));
    }
    // the span must be a nilpotent ideal: closed under products and R^d = 0
    let as_map = |v: &[u32]| end.from_vector(v);
    let rad_maps: Vec<RepMap> = (0..rad.dim()).map(|i| as_map(rad.vector(i))).collect();
    let mut power = rad.clone();
    for _ in 0..=d {
        if power.is_zero() {
            return Ok((end, lambdas, rad));
        }
        let mut next = Vec::new();
        for i in 0..power.dim() {
            let a = as_map(power.vector(i));
            for b in &rad_maps {
                let v = a.then(b).vectorize();
                if !rad.contains(&v) {
                    return Err(Error::LambdaMethod(name.into()));
                }
                next.push(v);
            }
        }
        power = Subspace::from_vecs(p, n, &next);
    }
    Err(Error::LambdaMethod(name.into()))
}

fn rational_inverse(g: &[Vec<usize>]) -> Option<Vec<Vec<Q>>> {
    let n = g.len();
    let mut a: Vec<Vec<Q>> = g
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i128)));
            r
        })
        .collect();
    for c in 0..n {
        let pr = (c..n).find(|&r| a[r][c] != Q::from_integer(0))?;
        a.swap(pr, c);
        let s = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x *= s);
        for r in 0..n {
            if r != c && a[r][c] != Q::from_integer(0) {
                let f = a[r][c];
                let pivot_row = a[c].clone();
                a[r].iter_mut().zip(&pivot_row).for_each(|(x, &y)| *x -= f * y);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambdacat::nakayama::nakayama_catalog;

    #[test]
    fn rational_inverse_of_small_matrix() {
        let inv = rational_inverse(&[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(inv[0], vec![Q::from_integer(1), Q::from_integer(-1)]);
        assert!(rational_inverse(&[vec![1, 1], vec![1, 1]]).is_none());
    }

    #[test]
    fn multiplicities_of_entries_and_generator() {
        let cat = nakayama_catalog(2, 2, 101).unwrap();
        for i in 0..cat.len() {
            let m = cat.multiplicities(cat.entry(i)).unwrap();
            assert_eq!(m, (0..cat.len()).map(|j| (i == j) as usize).collect::<Vec<_>>());
        }
        assert_eq!(cat.multiplicities(&cat.generator().sum).unwrap(), vec![1; cat.len()]);
    }

    #[test]
    fn envelope_and_cover_shapes() {
        let cat = nakayama_catalog(2, 2, 101).unwrap();
        for i in 0..cat.len() {
            let m = cat.entry(i);
            let e = cat.injective_envelope(m).unwrap();
            assert!(e.is_mono() && e.commutes());
            let c = cat.projective_cover(m).unwrap();
            assert!(c.is_epi() && c.commutes());
        }
    }
}
