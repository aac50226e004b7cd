use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use limpack::audit::{audit_all, stream_audit, AuditConfig};
use limpack::generators::gen_petersen;
use limpack_bench::audit_corpus;

fn single(c: &mut Criterion) {
    let g = gen_petersen();
    c.bench_function("audit_all/petersen", |b| b.iter(|| audit_all(&g)));
}

fn stream(c: &mut Criterion) {
    let lines = audit_corpus(500);
    let mut group = c.benchmark_group("stream_audit");
    group.sample_size(10);
    for workers in [1, 4] {
        let config = AuditConfig {
            workers,
            ..AuditConfig::default()
        };
        group.bench_with_input(
            BenchmarkId::new("random_500", workers),
            &config,
            |b, config| b.iter(|| stream_audit(lines.clone(), config)),
        );
    }
    group.finish();
}

criterion_group!(benches, single, stream);
criterion_main!(benches);
