use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use colsym::exec::Execution;
use colsym::sentence::Alphabet;
use colsym::tableaux::KostkaMatrix;
use colsym::verify::{parse_checks, run_suite, VerifyConfig};

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn verify_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (name, exec) in MODES {
        let mut cfg = VerifyConfig::new(Alphabet::parse("ab").unwrap(), 3, parse_checks("all").unwrap());
        cfg.exec = exec;
        g.bench_function(BenchmarkId::new(name, "ab/3"), |b| b.iter(|| black_box(run_suite(&cfg).unwrap().passed)));
    }
    g.finish();
}

fn kostka(c: &mut Criterion) {
    let mut g = c.benchmark_group("kostka");
    g.sample_size(10);
    let a = Alphabet::parse("ab").unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "ab/4"), |b| b.iter(|| black_box(KostkaMatrix::of_size(4, &a, exec).rows.len())));
    }
    g.finish();
}

criterion_group!(benches, verify_suite, kostka);
criterion_main!(benches);
