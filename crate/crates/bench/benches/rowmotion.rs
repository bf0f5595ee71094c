//! Benchmarks for the three dynamics engines: combinatorial orbit scans,
//! numeric full periods on the largest poset, and exact symbolic full
//! periods in chain coordinates.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rowmotion_core::birational::{random_labeling, rowmotion_iterates, symbolic_chain_coords};
use rowmotion_core::catalog::MinusculePoset;
use rowmotion_core::{combinat, Family};

fn combinatorial_order_largest(c: &mut Criterion) {
    let mp = MinusculePoset::build(Family::E, 7, 7).unwrap();
    c.bench_function("combinatorial rowmotion order E7", |b| {
        b.iter(|| {
            let order = combinat::rowmotion_order(mp.poset());
            assert_eq!(order, 18);
        })
    });
}

fn numeric_period_largest(c: &mut Criterion) {
    let mp = MinusculePoset::build(Family::E, 7, 7).unwrap();
    let h = mp.coxeter_number() as usize;
    c.bench_function("numeric rowmotion period E7", |b| {
        b.iter(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let start = random_labeling(mp.poset(), &mut rng, 1 << 31);
            let its = rowmotion_iterates(mp.poset(), &start, h + 1);
            assert_eq!(its[h], its[0]);
        })
    });
}

fn symbolic_period_medium(c: &mut Criterion) {
    let mp = MinusculePoset::build(Family::B, 4, 4).unwrap();
    let h = mp.coxeter_number() as usize;
    c.bench_function("symbolic rowmotion period B4", |b| {
        b.iter(|| {
            let start = symbolic_chain_coords(mp.poset());
            let its = rowmotion_iterates(mp.poset(), &start, h + 1);
            assert_eq!(its[h], its[0]);
        })
    });
}

fn symbolic_period_large(c: &mut Criterion) {
    let mp = MinusculePoset::build(Family::E, 6, 6).unwrap();
    let h = mp.coxeter_number() as usize;
    let mut group = c.benchmark_group("symbolic large");
    group.sample_size(10);
    group.bench_function("symbolic rowmotion period E6", |b| {
        b.iter(|| {
            let start = symbolic_chain_coords(mp.poset());
            let its = rowmotion_iterates(mp.poset(), &start, h + 1);
            assert_eq!(its[h], its[0]);
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    combinatorial_order_largest,
    numeric_period_largest,
    symbolic_period_medium,
    symbolic_period_large
);
criterion_main!(benches);
