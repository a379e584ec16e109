//! Structural invariants on seeded random inputs.

use std::sync::{Arc, LazyLock};

use proptest::prelude::*;
use rand::Rng;

use ausrep_core::exactla::{FpMatrix, QuotientSpace, Subspace};
use ausrep_core::functors::{alpha, epsilon, Recollement};
use ausrep_core::funmod::{
    direct_sum as mod_sum, dual, ext1, ext1_from, fitting_decompose, free_projective, hom_dim as mod_hom_dim,
    is_injective, is_projective, iso_test, map_from_sum, pd_leq, projective_cover, FunMap, FunMod,
};
use ausrep_core::gammaalg::Gamma;
use ausrep_core::lambdacat::{cokernel_rep, direct_sum, hom_dim, kernel_rep, nakayama_catalog, Catalog, Rep};
use ausrep_core::qh::{delta_filtration, loewy_order, random_delta_filtered, standard_modules, SimpleOrder};
use ausrep_core::random::{random_funmod, random_mono, random_rep, random_repmap, rng};

const P: u32 = 101;

fn cases() -> ProptestConfig {
    ProptestConfig::with_cases(32)
}

/// Self-injective Nakayama algebras small enough for many cases.
static RECS: LazyLock<Vec<Recollement>> = LazyLock::new(|| {
    [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]
        .iter()
        .map(|&(c, n)| Recollement::new(Arc::new(nakayama_catalog(c, n, P).unwrap())).unwrap())
        .collect()
});

fn pick(seed: u64) -> &'static Recollement {
    &RECS[(seed % RECS.len() as u64) as usize]
}

fn cat(seed: u64) -> &'static Arc<Catalog> {
    pick(seed).catalog()
}

fn gamma(seed: u64) -> &'static Gamma {
    &pick(seed).gamma
}

fn iso(m: &FunMod, n: &FunMod, seed: u64) -> bool {
    iso_test(m, n, 64, seed).unwrap().decided().unwrap()
}

/// `vec(A X B) = (Bᵀ ⊗ A) vec(X)` with column-major `vec`.
fn kron(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    let p = a.p();
    let mut out = FpMatrix::zeros(p, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, (a.get(i, j) as u64 * b.get(k, l) as u64 % p as u64) as u32);
                }
            }
        }
    }
    out
}

/// Nullity of the stacked equations `Y(a) B_s - B_t X(a) = 0` over column-major block unknowns.
fn hom_dim_by_kronecker(x: &Rep, y: &Rep) -> usize {
    let p = x.p();
    let q = x.quiver();
    let nv = q.n_vertices();
    let mut off = vec![0usize; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + y.dim_at(v) * x.dim_at(v);
    }
    let mut rows = FpMatrix::zeros(p, 0, off[nv]);
    for (a, ar) in q.arrows.iter().enumerate() {
        let (s, t) = (ar.src, ar.tgt);
        let (xa, ya) = (x.mat(a), y.mat(a));
        let h = y.dim_at(t) * x.dim_at(s);
        let mut eq = FpMatrix::zeros(p, h, off[nv]);
        // Y(a) B_s = I · Y(a) · B_s · I
        let left = kron(&FpMatrix::identity(p, x.dim_at(s)), ya);
        // B_t X(a) = I · B_t · X(a)
        let right = kron(&xa.transpose(), &FpMatrix::identity(p, y.dim_at(t))).scale(p - 1);
        let mut blk = FpMatrix::zeros(p, h, off[nv]);
        blk.paste(0, off[s], &left);
        eq.add_scaled(&blk, 1);
        let mut blk = FpMatrix::zeros(p, h, off[nv]);
        blk.paste(0, off[t], &right);
        eq.add_scaled(&blk, 1);
        rows = rows.vstack(&eq);
    }
    off[nv] - rows.rank()
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn rank_nullity_and_canonical_rref(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, n) = (r.gen_range(0..7), r.gen_range(0..7));
        let a = FpMatrix::random(P, m, n, &mut r);
        prop_assert_eq!(a.rank() + a.kernel().dim(), n);
        let once = a.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(once.matrix.data(), twice.matrix.data());
        let g = loop {
            let g = FpMatrix::random(P, m, m, &mut r);
            if g.is_invertible() { break g; }
        };
        let moved = g.mul(&a).rref();
        prop_assert_eq!(moved.matrix.data(), once.matrix.data());
    }

    #[test]
    fn quotient_space_projection_and_section(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..8);
        let k = r.gen_range(0..=n);
        let killed = Subspace::from_matrix_rows(&FpMatrix::random(P, k, n, &mut r));
        let q = QuotientSpace::new(&killed);
        prop_assert_eq!(q.dim() + killed.dim(), n);
        let (ps, id) = (q.projection().mul(q.section()), FpMatrix::identity(P, q.dim()));
        prop_assert_eq!(ps.data(), id.data());
        let ker = q.projection().kernel();
        prop_assert!(ker.contains_space(&killed) && killed.contains_space(&ker));
    }

    #[test]
    fn solve_agrees_with_the_column_space(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (m, n) = (r.gen_range(1..7), r.gen_range(1..7));
        let a = FpMatrix::random(P, m, n.min(m.saturating_sub(1)).max(1), &mut r);
        let b: Vec<u32> = (0..m).map(|_| r.gen_range(0..P)).collect();
        let x = a.solve(&b).unwrap();
        prop_assert_eq!(x.is_some(), a.image().contains(&b));
        if let Some(x) = x {
            prop_assert_eq!(a.mul_vec(&x), b);
        }
    }

    #[test]
    fn random_maps_commute_and_hom_dims_match_kronecker(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = cat(seed);
        let f = random_repmap(c, 2, &mut r).unwrap();
        prop_assert!(f.commutes());
        prop_assert_eq!(hom_dim(&f.source, &f.target).unwrap(), hom_dim_by_kronecker(&f.source, &f.target));
    }

    #[test]
    fn multiplicities_are_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = cat(seed);
        let a = random_rep(c, 2, &mut r).unwrap();
        let b = random_rep(c, 2, &mut r).unwrap();
        let s = direct_sum(c.quiver(), &[a.clone(), b.clone()]).sum;
        let (ma, mb, ms) = (c.multiplicities(&a).unwrap(), c.multiplicities(&b).unwrap(), c.multiplicities(&s).unwrap());
        let sum: Vec<usize> = ma.iter().zip(&mb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(ms, sum);
    }

    #[test]
    fn kernel_and_cokernel_obey_rank_nullity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_repmap(cat(seed), 2, &mut r).unwrap();
        let (k, _) = kernel_rep(&f);
        let (q, _) = cokernel_rep(&f);
        let rank = f.total_matrix().rank();
        prop_assert_eq!(k.total_dim() + rank, f.source.total_dim());
        prop_assert_eq!(q.total_dim() + rank, f.target.total_dim());
    }

    #[test]
    fn auslander_algebra_structure(seed in any::<u64>()) {
        let g = gamma(seed);
        prop_assert!(g.alg.respects_grading());
        prop_assert_eq!(g.alg.dim() - g.alg.radical_space().dim(), g.alg.n_vertices());
        prop_assert!(g.alg.radical_nilpotency().is_some());
        let gram: usize = g.catalog.gram().iter().flatten().sum();
        prop_assert_eq!(g.alg.dim(), gram);
    }

    #[test]
    fn modules_are_coherent_and_yoneda_holds(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        let m = random_funmod(&g.alg, 3, &mut r).unwrap();
        prop_assert!(m.is_coherent());
        for x in 0..g.alg.n_vertices() {
            prop_assert_eq!(mod_hom_dim(&free_projective(&g.alg, x), &m).unwrap(), m.dim_at(x));
        }
    }

    #[test]
    fn ext_does_not_depend_on_the_presentation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        let m = random_funmod(&g.alg, 2, &mut r).unwrap();
        let n = random_funmod(&g.alg, 2, &mut r).unwrap();
        let cover = projective_cover(&m).unwrap().map;
        let extra = free_projective(&g.alg, r.gen_range(0..g.alg.n_vertices()));
        let ds = mod_sum(&g.alg, &[cover.source.clone(), extra.clone()]);
        let padded = map_from_sum(&ds, &m, &[cover.clone(), FunMap::zero(extra, m.clone())]);
        prop_assert_eq!(ext1(&m, &n).unwrap().dim, ext1_from(&padded, &n).unwrap().dim);
    }

    #[test]
    fn global_dimension_at_most_two(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        prop_assert!(pd_leq(&random_funmod(&g.alg, 3, &mut r).unwrap(), 2).unwrap());
    }

    #[test]
    fn duality_swaps_projectives_and_injectives(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        let m = if r.gen_bool(0.5) {
            free_projective(&g.alg, r.gen_range(0..g.alg.n_vertices()))
        } else {
            random_funmod(&g.alg, 2, &mut r).unwrap()
        };
        prop_assert_eq!(is_projective(&m).unwrap(), is_injective(&dual(&m)).unwrap());
    }

    #[test]
    fn fitting_summand_dims_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        let m = random_funmod(&g.alg, 3, &mut r).unwrap();
        let dims = |s: u64| {
            let mut d = fitting_decompose(&m, 64, s).unwrap().dims();
            d.sort();
            d
        };
        let d0 = dims(seed);
        prop_assert_eq!(&d0, &dims(seed.wrapping_add(1)));
        prop_assert_eq!(&d0, &dims(seed.wrapping_add(2)));
        prop_assert_eq!(d0.iter().sum::<usize>(), m.total_dim());
    }

    #[test]
    fn restriction_of_the_inclusion_is_the_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rec = pick(seed);
        let x = random_funmod(rec.stable(), 2, &mut r).unwrap();
        let ix = rec.iota(&x);
        prop_assert!(iso(&rec.q(&ix), &x, seed));
        prop_assert!(iso(&rec.p(&ix), &x, seed));
        prop_assert!(rec.e(&ix).unwrap().is_zero());
    }

    #[test]
    fn adjoints_of_restriction_to_projectives(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rec = pick(seed);
        let c = rec.catalog();
        let m = random_rep(c, 2, &mut r).unwrap();
        let lm = rec.l(&m).unwrap();
        let rm = rec.r(&m).unwrap();
        prop_assert!(c.is_iso(&rec.e(&lm).unwrap(), &m).unwrap());
        prop_assert!(c.is_iso(&rec.e(&rm).unwrap(), &m).unwrap());
        let n = random_funmod(rec.gamma_alg(), 2, &mut r).unwrap();
        let en = rec.e(&n).unwrap();
        prop_assert_eq!(mod_hom_dim(&lm, &n).unwrap(), hom_dim(&m, &en).unwrap());
        prop_assert_eq!(mod_hom_dim(&n, &rm).unwrap(), hom_dim(&en, &m).unwrap());
    }

    #[test]
    fn alpha_of_epsilon_vanishes_on_projectives(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rec = pick(seed);
        let x = random_mono(rec.catalog(), 2, &mut r).unwrap();
        let a = alpha(&rec.gamma, &epsilon(&x)).unwrap();
        prop_assert!(rec.e(&a).unwrap().is_zero());
    }

    #[test]
    fn standard_filtrations_account_for_every_dimension(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = gamma(seed);
        let order = loewy_order(g);
        let ds = standard_modules(&order);
        let m = random_delta_filtered(&ds, r.gen_range(1..4), &mut r).unwrap();
        let f = delta_filtration(&m, &order);
        prop_assert!(f.is_some());
        let n = f.unwrap().multiplicities();
        let total: usize = n.iter().zip(&ds).map(|(k, d)| k * d.total_dim()).sum();
        prop_assert_eq!(total, m.total_dim());
        let exts = order.linear_extensions().unwrap();
        for ranking in exts.iter().step_by((exts.len() / 3).max(1)).take(3) {
            let lin = SimpleOrder::linear(g.alg.clone(), ranking).unwrap();
            prop_assert_eq!(delta_filtration(&m, &lin).map(|f| f.multiplicities()), Some(n.clone()));
        }
    }
}

#[test]
fn nakayama_catalog_counts() {
    for c in 1..=4 {
        for n in 1..=3 {
            let cat = nakayama_catalog(c, n, P).unwrap();
            assert_eq!(cat.len(), c * (n + 1));
            let proj = cat.projective_entries();
            assert_eq!(proj.len(), c);
            assert!(proj.iter().all(|&i| cat.entries()[i].injective));
        }
    }
}
