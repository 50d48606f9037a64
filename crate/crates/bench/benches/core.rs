use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use infmod_core::corpus::{perturb_for_completion, random_intertwiner, random_nonsingular_l, random_transfer};
use infmod_core::{
    canonical_split, complete_intertwiner, left_coprime, realize_plus, smith_at_infinity, PolyMatrix, Rational,
    UBasis,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus(n: usize, count: usize) -> Vec<PolyMatrix<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    (0..count).map(|_| random_nonsingular_l(&mut rng, n, 3)).collect()
}

fn smith(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_at_infinity");
    for n in 1..=4 {
        let ls = corpus(n, 8);
        group.bench_with_input(BenchmarkId::from_parameter(n), &ls, |b, ls| {
            b.iter(|| ls.iter().map(|l| smith_at_infinity(&l.to_rat().shift(-1)).profile.rank).sum::<usize>())
        });
    }
    group.finish();
}

fn basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis");
    for n in 1..=4 {
        let ls = corpus(n, 8);
        group.bench_with_input(BenchmarkId::from_parameter(n), &ls, |b, ls| {
            b.iter(|| ls.iter().map(|l| UBasis::compute(l).unwrap().dim()).sum::<usize>())
        });
    }
    group.finish();
}

fn homomorphisms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases: Vec<_> = (0..8).map(|_| random_intertwiner::<Rational, _>(&mut rng, 3)).collect();
    c.bench_function("left_coprime", |b| {
        b.iter(|| {
            cases
                .iter()
                .filter(|k| left_coprime(&k.theta, &k.l1.to_rat().shift(-1)).unwrap().verdict)
                .count()
        })
    });
    c.bench_function("complete_intertwiner", |b| {
        b.iter_batched(
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(6);
                cases.iter().map(|k| perturb_for_completion(&mut rng, k)).collect::<Vec<_>>()
            },
            |thetas| {
                for (k, t) in cases.iter().zip(&thetas) {
                    complete_intertwiner(t, &k.l, &k.l1).unwrap();
                }
            },
            BatchSize::SmallInput,
        )
    });
}

fn realization(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let gs: Vec<_> = (0..8).map(|_| random_transfer::<Rational, _>(&mut rng, 2, 2, 3)).collect();
    c.bench_function("realize", |b| {
        b.iter(|| gs.iter().map(|g| realize_plus(&canonical_split(g)).unwrap().dim()).sum::<usize>())
    });
}

criterion_group!(benches, smith, basis, homomorphisms, realization);
criterion_main!(benches);
