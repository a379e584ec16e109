use rand::Rng;

use super::{AlgebraCtx, Check, VerifyConfig};
use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, Subspace};
use crate::functors::{
    alpha, alpha_map, default_bound, dense_lift_f, dense_lift_g, epi_criterion, factor_through, fullness_check,
    is_cotilting, is_tilting, ker_alpha_generators, t2_combine, t2_hom, theorem2_check, u_generators, v_generators,
    MonoPair, SubcatGens, T2Morphism, T2Object, Which,
};
use crate::funmod::{
    id_leq, injective_quotient, is_injective, is_selfinjective_algebra, iso_test, pd_leq, proj_module,
    projective_embedding, inj_module, FunMap, FunMod, IsoVerdict,
};
use crate::lambdacat::cokernel_rep;
use crate::qh::{characteristic_tilting_check, loewy_order, qh_tol_equivalence, theorem3_negative_search};
use crate::random::{
    case_seed, random_divisible, random_funmod, random_map, random_mono, random_rep, random_repmap, random_square,
    random_t2, random_torsionless, rng,
};

/// Suite ids with a one-line description of what each one checks.
pub const SUITES: &[(&str, &str)] = &[
    ("prop2_6", "the kernel of alpha consists of the squares factoring through (M = M) and (M -> 0)"),
    ("cor2_7", "alpha lands in modules of projective dimension at most one; torsionless and divisible tests agree"),
    ("lemma2_11", "a map is onto iff no projective hom reaches its alpha-image"),
    ("lemma3_1", "(E, M) is injective iff M is projective, and (E, Lambda) is (Lambda, E)^dual"),
    ("lemma3_3", "(E, Lambda) is tilting and cotilting; q and p vanish exactly on the divisible and torsionless modules"),
    ("thm1", "F and G are full, dense, and kill exactly the squares through U and V"),
    ("thm2", "0 -> F(f) -> q(E, N) -> G(f) -> 0 is exact and F agrees with the syzygy of G up to projectives"),
    ("thm3", "the Loewy order makes the Auslander algebra quasi-hereditary with Delta-filtered = torsionless"),
    ("cor3_6", "the stable Auslander algebra is self-injective with one vertex per non-projective indecomposable"),
    ("infra", "field arithmetic, associativity of the Auslander algebra, and Yoneda evaluation"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

pub fn suite_statement(suite: &str) -> Option<&'static str> {
    SUITES.iter().find(|s| s.0 == suite).map(|s| s.1)
}

/// Runs a suite on one algebra; an undecided test is retried once with four
/// times the trials before it is reported as undetermined.
pub fn run_on_algebra(suite: &str, ctx: &AlgebraCtx, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let seed = case_seed(cfg.seed, name_hash(&ctx.name));
    match dispatch(suite, ctx, cfg.trials, seed) {
        Err(Error::Undetermined(_) | Error::BoundExceeded(_)) => {}
        other => return other,
    }
    match dispatch(suite, ctx, cfg.trials * 4, seed) {
        Err(e @ (Error::Undetermined(_) | Error::BoundExceeded(_))) => {
            let mut c = Check::new(ctx, suite, false, e.to_string());
            c.undetermined = true;
            Ok(vec![c])
        }
        other => other,
    }
}

fn name_hash(s: &str) -> usize {
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3)) as usize
}

fn dispatch(suite: &str, ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    match suite {
        "prop2_6" => prop2_6(ctx, trials, seed),
        "cor2_7" => cor2_7(ctx, seed),
        "lemma2_11" => lemma2_11(ctx, seed),
        "lemma3_1" => lemma3_1(ctx, trials, seed),
        "lemma3_3" => lemma3_3(ctx, trials, seed),
        "thm1" => thm1(ctx, trials, seed),
        "thm2" => thm2(ctx, trials, seed),
        "thm3" => thm3(ctx, trials, seed),
        "cor3_6" => cor3_6(ctx),
        "infra" => infra(ctx, seed),
        _ => Err(Error::NotFound(format!("suite {suite}"))),
    }
}

/// Counts passes over `n` seeded cases and keeps the first failure.
struct Tally {
    ok: usize,
    n: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { ok: 0, n: 0, first_failure: None }
    }

    fn record(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.n += 1;
        if pass {
            self.ok += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn check(self, ctx: &AlgebraCtx, name: &str) -> Check {
        let mut detail = format!("{}/{}", self.ok, self.n);
        if let Some(f) = &self.first_failure {
            detail.push_str(&format!("; first failure: {f}"));
        }
        Check::new(ctx, name, self.ok == self.n, detail)
    }
}

fn is_iso(a: &FunMod, b: &FunMod, trials: usize, seed: u64) -> Result<bool> {
    match iso_test(a, b, trials, seed)? {
        IsoVerdict::Isomorphic(_) => Ok(true),
        IsoVerdict::NotIsomorphic(_) => Ok(false),
        IsoVerdict::Undetermined => Err(Error::Undetermined("isomorphism test".into())),
    }
}

/// Kernel of the linear map sending basis vector `i` to `images[i]` (length `n`).
fn kernel_of_images(p: u32, k: usize, n: usize, images: &[Vec<u32>]) -> Subspace {
    if n == 0 || k == 0 {
        return Subspace::full(p, k);
    }
    FpMatrix::from_vecs(p, n, images).transpose().kernel()
}

/// A random square `x → y` killed by a functor, sampled from the kernel of the
/// functor on the hom space.
fn killed_square<R: Rng>(
    x: &T2Object,
    y: &T2Object,
    functor: impl Fn(&T2Morphism) -> Result<FunMap>,
    rng: &mut R,
) -> Result<T2Morphism> {
    let p = x.f.source.p();
    let h = t2_hom(x, y)?;
    let images: Vec<Vec<u32>> = h.iter().map(|phi| functor(phi).map(|f| f.vectorize())).collect::<Result<_>>()?;
    let n = images.first().map_or(0, Vec::len);
    let ker = kernel_of_images(p, h.len(), n, &images);
    let c: Vec<u32> = (0..ker.dim()).map(|_| rng.gen_range(0..p)).collect();
    let v = if ker.dim() == 0 { vec![0; h.len()] } else { ker.combine(&c) };
    Ok(t2_combine(x, y, &h, &v))
}

fn factors(phi: &T2Morphism, gens: &SubcatGens) -> Result<bool> {
    let bound = default_bound(phi, gens)?;
    Ok(factor_through(phi, gens, bound)?.is_some_and(|w| w.compose(phi).vectorize() == phi.vectorize()))
}

const SQUARE_CASES: usize = 100;

fn prop2_6(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let g = ctx.gamma();
    let cat = &ctx.catalog;
    let gens = ker_alpha_generators(cat, trials, seed)?;
    let mut gen_t = Tally::new();
    for o in &gens.gens {
        gen_t.record(alpha(g, o)?.is_zero(), || format!("{} -> {}", o.top().total_dim(), o.bottom().total_dim()));
    }
    let mut nonzero = Tally::new();
    let mut zero = Tally::new();
    for i in 0..SQUARE_CASES {
        let mut r = rng(case_seed(seed, i));
        let x = random_t2(cat, 2, &mut r)?;
        let y = random_t2(cat, 2, &mut r)?;
        let phi = random_square(&x, &y, &mut r)?;
        if !alpha_map(g, &phi)?.is_zero() {
            nonzero.record(!factors(&phi, &gens)?, || format!("case {i}: alpha(phi) != 0 but phi factors"));
        }
        let psi = killed_square(&x, &y, |s| alpha_map(g, s), &mut r)?;
        zero.record(factors(&psi, &gens)?, || format!("case {i}: alpha(phi) = 0 without a witness"));
    }
    Ok(vec![
        gen_t.check(ctx, "generators are killed by alpha"),
        nonzero.check(ctx, "squares with alpha != 0 do not factor"),
        zero.check(ctx, "squares with alpha = 0 factor through the generators"),
    ])
}

fn cor2_7(ctx: &AlgebraCtx, seed: u64) -> Result<Vec<Check>> {
    let g = ctx.gamma();
    let alg = &g.alg;
    let mut monos = Tally::new();
    for i in 0..100 {
        let mut r = rng(case_seed(seed, i));
        let x = random_mono(&ctx.catalog, 3, &mut r)?;
        let a = alpha(g, x.object())?;
        monos.record(pd_leq(&a, 1)?, || format!("case {i}: dims {:?}", a.dims()));
    }
    let mut tl = Tally::new();
    let mut dv = Tally::new();
    let mut emb = Tally::new();
    let mut quo = Tally::new();
    for i in 0..50 {
        let mut r = rng(case_seed(seed ^ 0x7011, i));
        let t = random_torsionless(alg, 3, &mut r)?;
        tl.record(pd_leq(&t, 1)?, || format!("case {i}: dims {:?}", t.dims()));
        let d = random_divisible(alg, 3, &mut r)?;
        dv.record(id_leq(&d, 1)?, || format!("case {i}: dims {:?}", d.dims()));
        for m in [t, d, random_funmod(alg, 3, &mut r)?] {
            let pd = pd_leq(&m, 1)?;
            emb.record(projective_embedding(&m)?.is_some() == pd, || format!("case {i}: pd<=1 is {pd}"));
            let id = id_leq(&m, 1)?;
            quo.record(injective_quotient(&m)? == id, || format!("case {i}: id<=1 is {id}"));
        }
    }
    Ok(vec![
        monos.check(ctx, "alpha of a mono has pd <= 1"),
        tl.check(ctx, "torsionless samples have pd <= 1"),
        dv.check(ctx, "divisible samples have id <= 1"),
        emb.check(ctx, "projective embedding exists iff pd <= 1"),
        quo.check(ctx, "injective quotient exists iff id <= 1"),
    ])
}

fn lemma2_11(ctx: &AlgebraCtx, seed: u64) -> Result<Vec<Check>> {
    let g = ctx.gamma();
    let mut t = Tally::new();
    let mut epis = 0;
    for i in 0..200 {
        let mut r = rng(case_seed(seed, i));
        let f = random_repmap(&ctx.catalog, 2, &mut r)?;
        let f = if i % 2 == 0 { cokernel_rep(&f).1 } else { f };
        epis += f.is_epi() as usize;
        let x = T2Object::new(f);
        let e = x.f.is_epi();
        t.record(epi_criterion(g, &x)? == e, || format!("case {i}: epi is {e}"));
    }
    let mut c = t.check(ctx, "criterion agrees with surjectivity");
    c.detail.push_str(&format!("; {epis} onto"));
    Ok(vec![c])
}

fn lemma3_1(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let g = ctx.gamma();
    let cat = &ctx.catalog;
    let proj = cat.projective_entries();
    let mut t = Tally::new();
    for i in 0..cat.len() {
        let m = cat.entry(i);
        let want = proj.contains(&i);
        t.record(is_injective(&proj_module(g, m)?)? == want, || format!("entry {}", cat.name(i)));
    }
    for i in 0..30 {
        let mut r = rng(case_seed(seed, i));
        let m = random_rep(cat, 3, &mut r)?;
        let mult = cat.multiplicities(&m)?;
        let want = mult.iter().enumerate().all(|(j, &k)| k == 0 || proj.contains(&j));
        t.record(is_injective(&proj_module(g, &m)?)? == want, || format!("random case {i}"));
    }
    let reg = cat.regular();
    let same = is_iso(&proj_module(g, &reg)?, &inj_module(g, &reg)?, trials, seed)?;
    Ok(vec![
        t.check(ctx, "(E, M) injective iff M projective"),
        Check::new(ctx, "(E, Lambda) is isomorphic to D(Lambda, E)", same, ""),
    ])
}

fn lemma3_3(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let rec = ctx.rec()?;
    let alg = rec.gamma_alg();
    let t = rec.tilting_t()?;
    let tilt = is_tilting(&t, trials, seed)?;
    let cotilt = is_cotilting(&t, trials, seed)?;
    let mut q = Tally::new();
    let mut p = Tally::new();
    for i in 0..50 {
        let mut r = rng(case_seed(seed, i));
        let m = match i % 3 {
            0 => random_funmod(alg, 3, &mut r)?,
            1 => random_torsionless(alg, 3, &mut r)?,
            _ => random_divisible(alg, 3, &mut r)?,
        };
        let (qz, id) = (rec.q(&m).is_zero(), id_leq(&m, 1)?);
        q.record(qz == id, || format!("case {i}: q = 0 is {qz}, id <= 1 is {id}"));
        let (pz, pd) = (rec.p(&m).is_zero(), pd_leq(&m, 1)?);
        p.record(pz == pd, || format!("case {i}: p = 0 is {pz}, pd <= 1 is {pd}"));
    }
    Ok(vec![
        Check::new(ctx, "T is tilting and cotilting", tilt && cotilt, format!("tilting: {tilt}, cotilting: {cotilt}")),
        q.check(ctx, "q(M) = 0 iff id M <= 1"),
        p.check(ctx, "p(M) = 0 iff pd M <= 1"),
    ])
}

fn thm1(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let rec = ctx.rec()?;
    let cat = &ctx.catalog;
    let m = cat.len();
    let u = u_generators(cat, trials, seed)?;
    let v = v_generators(cat, trials, seed)?;
    let mut out = Vec::new();
    out.push(Check::new(
        ctx,
        "|U| = |V| = 2m",
        u.len() == 2 * m && v.len() == 2 * m,
        format!("|U| = {}, |V| = {}, m = {m}", u.len(), v.len()),
    ));
    let mut kill = Tally::new();
    for x in u.monos()? {
        kill.record(rec.f_functor(&x)?.is_zero(), || "F(U) != 0".into());
    }
    for x in v.monos()? {
        kill.record(rec.g_functor(&x)?.is_zero(), || "G(V) != 0".into());
    }
    out.push(kill.check(ctx, "F kills U and G kills V"));

    for which in [Which::F, Which::G] {
        let mut full = Tally::new();
        for i in 0..50 {
            let mut r = rng(case_seed(seed ^ 0xf011, i));
            let x = random_mono(cat, 2, &mut r)?;
            let y = random_mono(cat, 2, &mut r)?;
            let (rank, dim) = fullness_check(rec, which, &x, &y)?;
            full.record(rank == dim, || format!("case {i}: rank {rank} < {dim}"));
        }
        out.push(full.check(ctx, &format!("{which:?} is full")));
    }

    let (mut dense_f, mut dense_g) = (Tally::new(), Tally::new());
    for i in 0..20 {
        let mut r = rng(case_seed(seed ^ 0xde75, i));
        let xbar = random_funmod(rec.stable(), 2, &mut r)?;
        let ok_f = dense_lift_f(rec, &xbar, trials, seed).is_ok();
        dense_f.record(ok_f, || format!("case {i}: dims {:?}", xbar.dims()));
        let ok_g = dense_lift_g(rec, &xbar, trials, seed).is_ok();
        dense_g.record(ok_g, || format!("case {i}: dims {:?}", xbar.dims()));
    }
    out.push(dense_f.check(ctx, "F is dense"));
    out.push(dense_g.check(ctx, "G is dense"));

    for (which, gens) in [(Which::F, &u), (Which::G, &v)] {
        let functor = |s: &T2Morphism| match which {
            Which::F => rec.f_map(s),
            Which::G => rec.g_map(s),
        };
        let mut killed = Tally::new();
        let mut alive = Tally::new();
        for i in 0..20 {
            let mut r = rng(case_seed(seed ^ 0x4e7, i));
            let x = random_mono(cat, 2, &mut r)?;
            let y = random_mono(cat, 2, &mut r)?;
            let (xo, yo) = (x.object(), y.object());
            let phi = killed_square(xo, yo, functor, &mut r)?;
            killed.record(factors(&phi, gens)?, || format!("case {i}: no witness"));
            let psi = random_square(xo, yo, &mut r)?;
            for psi in [psi, T2Morphism::identity(xo)] {
                if !functor(&psi)?.is_zero() {
                    alive.record(!factors(&psi, gens)?, || format!("case {i}: nonzero image but factors"));
                }
            }
        }
        out.push(killed.check(ctx, &format!("{which:?}(phi) = 0 implies phi factors through {}", gens.name)));
        out.push(alive.check(ctx, &format!("{which:?}(phi) != 0 implies no factorization through {}", gens.name)));
    }
    Ok(out)
}

fn thm2(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let rec = ctx.rec()?;
    let (mut ex, mut st) = (Tally::new(), Tally::new());
    for i in 0..50 {
        let mut r = rng(case_seed(seed, i));
        let x: MonoPair = random_mono(&ctx.catalog, 3, &mut r)?;
        let rep = theorem2_check(rec, &x, trials, case_seed(seed, i))?;
        ex.record(rep.exact_sequence, || format!("case {i}: {}", rep.detail));
        st.record(rep.stable_iso, || format!("case {i}: {}", rep.detail));
    }
    Ok(vec![ex.check(ctx, "the sequence is exact"), st.check(ctx, "F(f) is stably the syzygy of G(f)")])
}

fn thm3(ctx: &AlgebraCtx, trials: usize, seed: u64) -> Result<Vec<Check>> {
    let g = ctx.gamma();
    match ctx.rec() {
        Ok(rec) => {
            let order = loewy_order(g);
            let tol = qh_tol_equivalence(g, &order, 50, seed)?;
            let ch = characteristic_tilting_check(rec, trials, seed)?;
            Ok(vec![
                Check::new(ctx, "Loewy order: quasi-hereditary with F(Delta) = tol", tol.passed(), format!("{tol:?}")),
                Check::new(ctx, "T is the characteristic tilting module", ch.passed(), format!("{ch:?}")),
            ])
        }
        Err(Error::NotSelfInjective) => {
            let rep = theorem3_negative_search(g, 50, seed)?;
            let witnessed = rep.orders.iter().all(|o| o.passed || o.witness.is_some());
            Ok(vec![
                Check::new(ctx, "no order satisfies the conclusion", rep.failing == rep.total, rep.summary),
                Check::new(ctx, "every failing order has a witness module", witnessed, ""),
            ])
        }
        Err(e) => Err(e),
    }
}

fn cor3_6(ctx: &AlgebraCtx) -> Result<Vec<Check>> {
    let rec = ctx.rec()?;
    let bar = rec.stable();
    let cat = &ctx.catalog;
    let sinj = is_selfinjective_algebra(bar)?;
    let nonproj = cat.len() - cat.projective_entries().len();
    let mut out = vec![
        Check::new(ctx, "stable Auslander algebra is self-injective", sinj, ""),
        Check::new(
            ctx,
            "one vertex per non-projective indecomposable",
            bar.n_vertices() == nonproj,
            format!("{} vertices, {nonproj} non-projective", bar.n_vertices()),
        ),
    ];
    if let Some((1, n)) = ctx.nakayama() {
        out.push(Check::new(ctx, "N vertices for one cycle vertex", bar.n_vertices() == n, format!("N = {n}")));
    }
    Ok(out)
}

fn infra(ctx: &AlgebraCtx, seed: u64) -> Result<Vec<Check>> {
    let p = ctx.catalog.p();
    let mut la = Tally::new();
    for i in 0..1000 {
        let mut r = rng(case_seed(seed, i));
        let (rows, cols) = (r.gen_range(1..=8), r.gen_range(1..=8));
        let mut a = FpMatrix::random(p, rows, cols, &mut r);
        if i % 3 == 0 {
            // force a rank drop
            let dup = a.row(0).to_vec();
            for c in 0..cols {
                a.set(rows - 1, c, dup[c]);
            }
        }
        let nullity = a.kernel().dim();
        let ok_rn = a.rank() + nullity == cols;
        let gm = loop {
            let gm = FpMatrix::random(p, rows, rows, &mut r);
            if gm.is_invertible() {
                break gm;
            }
        };
        let ok_rref = gm.mul(&a).rref().matrix == a.rref().matrix;
        let ok_ker = a.kernel().basis_vecs().iter().all(|v| a.mul_vec(v).iter().all(|&x| x == 0));
        la.record(ok_rn && ok_rref && ok_ker, || format!("case {i}: {rows}x{cols}"));
    }
    let assoc = ctx.gamma().alg.is_associative();
    let mut yo = Tally::new();
    let cat = &ctx.catalog;
    let nv = cat.quiver().n_vertices();
    for i in 0..100 {
        let mut r = rng(case_seed(seed ^ 0x70e, i));
        let v = r.gen_range(0..nv);
        let m = random_rep(cat, 2, &mut r)?;
        let (h, ev) = cat.yoneda(v, &m)?;
        let ok = h.dim() == m.dim_at(v) && (m.dim_at(v) == 0 || ev.is_invertible());
        // a second route: evaluation of a random map agrees with its preimage under Yoneda
        let f = random_map(cat.entry(cat.projective_vertices()[v].entry), &m, &mut r)?;
        let x = f.blocks[v].mul_vec(&cat.projective_vertices()[v].generator);
        let back = cat.map_from_projective(v, &m, &x)?;
        yo.record(ok && back.vectorize() == f.vectorize(), || format!("case {i}: vertex {v}"));
    }
    Ok(vec![
        la.check(ctx, "rank-nullity and row-reduction invariance"),
        Check::new(ctx, "Auslander algebra is associative", assoc, ""),
        yo.check(ctx, "Yoneda evaluation is an isomorphism"),
    ])
}
