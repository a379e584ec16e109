//! Seeded samplers for representations, modules and squares.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactla::FpMatrix;
use crate::funmod::{
    cokernel, direct_sum as mod_sum, free_injective, free_projective, hom, image, FunMap, FunMod,
};
use crate::functors::{t2_combine, t2_hom, MonoPair, T2Morphism, T2Object};
use crate::gammaalg::BasedAlgebra;
use crate::lambdacat::{direct_sum, hom_space, image_rep, kernel_rep, Catalog, Rep, RepMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derived seed for case `i` of a suite, so cases can run in any order.
pub fn case_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64 + 1)
}

fn random_invertible<R: Rng>(p: u32, n: usize, rng: &mut R) -> FpMatrix {
    loop {
        let g = FpMatrix::random(p, n, n, rng);
        if g.is_invertible() {
            return g;
        }
    }
}

/// A direct sum of between one and `max_summands` random entries, written in
/// a random basis at every vertex.
pub fn random_rep<R: Rng>(cat: &Catalog, max_summands: usize, rng: &mut R) -> Result<Rep> {
    let k = rng.gen_range(1..=max_summands.max(1));
    let reps: Vec<Rep> = (0..k).map(|_| cat.entry(rng.gen_range(0..cat.len())).clone()).collect();
    let s = direct_sum(cat.quiver(), &reps).sum;
    twist(&s, rng)
}

/// `s` transported along random vertexwise base changes.
pub fn twist<R: Rng>(s: &Rep, rng: &mut R) -> Result<Rep> {
    let p = s.p();
    let q = s.quiver();
    let g: Vec<FpMatrix> = s.dims().iter().map(|&d| random_invertible(p, d, rng)).collect();
    let mats = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, ar)| g[ar.tgt].mul(s.mat(a)).mul(&g[ar.src].inverse().expect("invertible")))
        .collect();
    Rep::new(q.clone(), s.dims().to_vec(), mats)
}

pub fn random_map<R: Rng>(x: &Rep, y: &Rep, rng: &mut R) -> Result<RepMap> {
    let h = hom_space(x, y)?;
    let p = x.p();
    let c: Vec<u32> = (0..h.dim()).map(|_| rng.gen_range(0..p)).collect();
    Ok(h.combine(&c))
}

/// A random map between two random representations.
pub fn random_repmap<R: Rng>(cat: &Catalog, max_summands: usize, rng: &mut R) -> Result<RepMap> {
    let x = random_rep(cat, max_summands, rng)?;
    let y = random_rep(cat, max_summands, rng)?;
    random_map(&x, &y, rng)
}

/// The kernel or the image inclusion of a random map; rejects zero sources
/// up to a few times.
pub fn random_mono<R: Rng>(cat: &Catalog, max_summands: usize, rng: &mut R) -> Result<MonoPair> {
    let mut last = None;
    for _ in 0..8 {
        let f = random_repmap(cat, max_summands, rng)?;
        let inc = if rng.gen_bool(0.5) { kernel_rep(&f).1 } else { image_rep(&f).1 };
        let nonzero = !inc.source.is_zero();
        last = Some(inc);
        if nonzero {
            break;
        }
    }
    MonoPair::new(last.expect("at least one attempt"))
}

pub fn random_t2<R: Rng>(cat: &Catalog, max_summands: usize, rng: &mut R) -> Result<T2Object> {
    Ok(T2Object::new(random_repmap(cat, max_summands, rng)?))
}

pub fn random_square<R: Rng>(x: &T2Object, y: &T2Object, rng: &mut R) -> Result<T2Morphism> {
    let h = t2_hom(x, y)?;
    let p = x.f.source.p();
    let c: Vec<u32> = (0..h.len()).map(|_| rng.gen_range(0..p)).collect();
    Ok(t2_combine(x, y, &h, &c))
}

fn random_vertices<R: Rng>(alg: &BasedAlgebra, max: usize, rng: &mut R) -> Vec<usize> {
    let n = rng.gen_range(1..=max.max(1));
    let all: Vec<usize> = (0..alg.n_vertices()).collect();
    (0..n).map(|_| *all.choose(rng).expect("algebra has vertices")).collect()
}

fn free_sum(alg: &Arc<BasedAlgebra>, xs: &[usize], injective: bool) -> FunMod {
    let mods: Vec<FunMod> =
        xs.iter().map(|&x| if injective { free_injective(alg, x) } else { free_projective(alg, x) }).collect();
    mod_sum(alg, &mods).sum
}

fn random_funmap<R: Rng>(m: &FunMod, n: &FunMod, rng: &mut R) -> Result<FunMap> {
    Ok(hom(m, n)?.random(rng))
}

/// The cokernel of a random map between sums of free projectives.
pub fn random_funmod<R: Rng>(alg: &Arc<BasedAlgebra>, max: usize, rng: &mut R) -> Result<FunMod> {
    let p1 = free_sum(alg, &random_vertices(alg, max, rng), false);
    let p0 = free_sum(alg, &random_vertices(alg, max, rng), false);
    Ok(cokernel(&random_funmap(&p1, &p0, rng)?).0)
}

/// The image of a random map from a random module into free projectives.
pub fn random_torsionless<R: Rng>(alg: &Arc<BasedAlgebra>, max: usize, rng: &mut R) -> Result<FunMod> {
    let m = random_funmod(alg, max, rng)?;
    let p = free_sum(alg, &random_vertices(alg, max, rng), false);
    Ok(image(&random_funmap(&m, &p, rng)?).0)
}

/// The image of a random map from free injectives into a random module.
pub fn random_divisible<R: Rng>(alg: &Arc<BasedAlgebra>, max: usize, rng: &mut R) -> Result<FunMod> {
    let i = free_sum(alg, &random_vertices(alg, max, rng), true);
    let m = random_funmod(alg, max, rng)?;
    Ok(image(&random_funmap(&i, &m, rng)?).0)
}
