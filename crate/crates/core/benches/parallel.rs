//! Sequential against rayon execution on the three heaviest loops.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use symweight::codes::{exhaustive_optimum, RsCswSubcode, WordSpace};
use symweight::field::Field;
use symweight::spaces::scan_symbol_weights;
use symweight::{Config, Exec};

fn execs() -> [(&'static str, Config); 2] {
    [
        ("sequential", Config::default().with_exec(Exec::Sequential)),
        ("parallel", Config::default().with_exec(Exec::Parallel)),
    ]
}

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan_symbol_weights_9_5");
    for (name, cfg) in execs() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| scan_symbol_weights(black_box(9), black_box(5), &cfg).unwrap())
        });
    }
    g.finish();
}

fn subcode_audit(c: &mut Criterion) {
    let field = Field::from_order(11).unwrap();
    let sub = RsCswSubcode::new(&field, 8, 5, &Config::default()).unwrap();
    let mut g = c.benchmark_group("rs_csw_audit_gf11_k8_r5");
    g.sample_size(10);
    for (name, cfg) in execs() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| sub.audit(&cfg)));
    }
    g.finish();
}

fn clique(c: &mut Criterion) {
    let mut g = c.benchmark_group("exhaustive_optimum_5_3_d3");
    g.sample_size(10);
    for (name, cfg) in execs() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| exhaustive_optimum(5, 3, 3, &WordSpace::BoundedWeight(3), &cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, scan, subcode_audit, clique);
criterion_main!(benches);
