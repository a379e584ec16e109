use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ausrep_core::par::{map_par, map_seq};
use ausrep_core::verify::{default_grid, run_on_algebra, AlgebraCtx, VerifyConfig};

fn suites_over_grid(c: &mut Criterion) {
    let cfg = VerifyConfig::default();
    let ctxs: Vec<AlgebraCtx> = default_grid().iter().map(|s| AlgebraCtx::new(s, cfg.prime).unwrap()).collect();
    let mut group = c.benchmark_group("suite_over_grid");
    group.sample_size(10);
    for suite in ["thm2", "lemma2_11"] {
        let run = |ctx: &AlgebraCtx| run_on_algebra(suite, ctx, &cfg).unwrap().len();
        group.bench_with_input(BenchmarkId::new("sequential", suite), &ctxs, |b, ctxs| b.iter(|| map_seq(ctxs, run)));
        group.bench_with_input(BenchmarkId::new("parallel", suite), &ctxs, |b, ctxs| b.iter(|| map_par(ctxs, run)));
    }
    group.finish();
}

criterion_group!(benches, suites_over_grid);
criterion_main!(benches);
