use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lieverify::chevalley::{ChevalleyAlgebra, JacobiMode, LieElement};
use lieverify::orbits::min_orbit_member;
use lieverify::par::{map_slice_with, Exec};
use lieverify::roots::DynkinType;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi_exhaustive");
    group.sample_size(10);
    for t in [DynkinType::d(5).unwrap(), DynkinType::e(6).unwrap()] {
        let g = ChevalleyAlgebra::from_type(t).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, t), &g, |b, g| {
                b.iter(|| black_box(g.verify_jacobi_with(exec, JacobiMode::Exhaustive)))
            });
        }
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_orbit_oracle");
    group.sample_size(10);
    let g = ChevalleyAlgebra::from_type(DynkinType::e(6).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let xs: Vec<LieElement> = (0..32)
        .map(|i| {
            let support: Vec<usize> = (0..g.dim()).filter(|j| (j + i) % 7 == 0).collect();
            g.random_element(&mut rng, &support)
        })
        .collect();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "E6x32"), |b| {
            b.iter(|| black_box(map_slice_with(exec, &xs, |x| min_orbit_member(&g, x))))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_jacobi, bench_oracle);
criterion_main!(benches);
