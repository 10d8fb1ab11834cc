use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use combinat::asymptotics::binet_sweep;
use combinat::binomials::{binomial, pascal_triangle};
use combinat::exactnum::factorial;
use combinat::expand::multinomial_expand;
use combinat::inclexcl::ie_union;
use combinat::mapscount::{count_derangements, count_surjections};
use combinat::{Measure, SetFamily};

fn bench_exact_counts(c: &mut Criterion) {
    c.bench_function("factorial_1000", |b| {
        b.iter(|| factorial(black_box(1000)))
    });
    c.bench_function("binomial_1000_500", |b| {
        b.iter(|| binomial(black_box(1000), black_box(500)))
    });
    c.bench_function("pascal_triangle_200", |b| {
        b.iter(|| pascal_triangle(black_box(200)))
    });
    c.bench_function("surjections_60_30", |b| {
        b.iter(|| count_surjections(black_box(60), black_box(30)))
    });
    c.bench_function("derangements_100", |b| {
        b.iter(|| count_derangements(black_box(100)))
    });
}

fn bench_expand(c: &mut Criterion) {
    c.bench_function("multinomial_expand_4_12", |b| {
        b.iter(|| multinomial_expand(black_box(4), black_box(12)))
    });
}

fn bench_inclusion_exclusion(c: &mut Criterion) {
    // 16 arithmetic-progression subsets of a 64-element universe.
    let sets: Vec<Vec<usize>> = (1..=16usize)
        .map(|step| (0..64).step_by(step).collect())
        .collect();
    let family = SetFamily::from_index_sets(64, &sets).unwrap();
    let measure = Measure::counting(64);
    c.bench_function("ie_union_16_sets", |b| {
        b.iter(|| ie_union(black_box(&family), black_box(&measure)).unwrap())
    });
}

fn bench_asymptotics(c: &mut Criterion) {
    c.bench_function("binet_sweep_5000", |b| {
        b.iter(|| binet_sweep(black_box(5000)))
    });
}

criterion_group!(
    benches,
    bench_exact_counts,
    bench_expand,
    bench_inclusion_exclusion,
    bench_asymptotics
);
criterion_main!(benches);
