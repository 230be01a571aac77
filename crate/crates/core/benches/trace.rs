use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use superfrob::characters::hecke_character_table;
use superfrob::combinatorics::{HookProfile, Multipartition};
use superfrob::tensor::{check_relations, OperatorWord, TensorSpace};
use superfrob::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace_d_word");
    group.sample_size(10);
    for (m, n) in [(2, 3), (2, 4)] {
        let space = TensorSpace::new(&HookProfile::uniform(m, 1, 1).unwrap(), n).unwrap();
        let mut parts = vec![vec![]; m];
        parts[m - 1] = vec![n];
        let word = OperatorWord::standard(&Multipartition::from_nested(&parts).unwrap());
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("m{m}n{n}")), &exec, |b, &exec| {
                b.iter(|| space.trace_d_word(&word, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("relations");
    group.sample_size(10);
    let space = TensorSpace::new(&HookProfile::new(vec![1, 1], vec![1, 1]).unwrap(), 3).unwrap();
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| check_relations(&space, exec).unwrap()));
    }
    group.finish();
}

fn table(c: &mut Criterion) {
    let mut group = c.benchmark_group("hecke_character_table");
    group.sample_size(10);
    for (m, n) in [(2, 3), (1, 6)] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("m{m}n{n}")), &exec, |b, &exec| {
                b.iter(|| hecke_character_table(m, n, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, trace, relations, table);
criterion_main!(benches);
