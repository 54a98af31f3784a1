use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lefschetz_core::colon::{colon_generators, ColonParams};
use lefschetz_core::oracle::{brute_colon2, first_graded_difference};
use lefschetz_core::par::Exec;
use lefschetz_core::wlp::{determinant_polynomial, Parity};

fn grid(max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for d1 in 2..=max {
        for d2 in d1..=max {
            for a in 1..=d1 + d2 - 2 {
                out.push((d1, d2, a));
            }
        }
    }
    out
}

fn oracle_grid(exec: Exec, cases: &[(u32, u32, u32)]) -> usize {
    exec.map(cases, |&(d1, d2, a)| {
        let g = colon_generators(ColonParams::new(d1, d2, a).unwrap());
        first_graded_difference(&g.as_vec(), &brute_colon2(d1, d2, a), d1 + d2).is_some()
    })
    .into_iter()
    .filter(|&bad| bad)
    .count()
}

fn bench_oracle(c: &mut Criterion) {
    let cases = grid(8);
    let mut group = c.benchmark_group("oracle_grid_8");
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| oracle_grid(exec, black_box(&cases)))
        });
    }
    group.finish();
}

fn bench_det_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_poly_2_4_6");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| determinant_polynomial(2, 4, 6, Parity::Odd, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_oracle, bench_det_poly);
criterion_main!(benches);
