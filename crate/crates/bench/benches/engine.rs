use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use freecommutant_core::commutator::{
    cancellation_sum, cumulant_sequence_of, prop41_closed_form, s_plus_commutator, DistributionPair,
};
use freecommutant_core::cumulant::{
    cumulant_of_word_products, cumulant_of_word_products_unpruned, CumulantSequence,
};
use freecommutant_core::fock::{model_cumulant, RhoMoments};
use freecommutant_core::partitions::{enumerate, PartitionKind};
use freecommutant_core::poly::Word;
use freecommutant_core::rational::{int, rat};

fn partitions(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_nc");
    for n in [8, 10, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                enumerate(black_box(n), PartitionKind::NonCrossing)
                    .unwrap()
                    .len()
            })
        });
    }
    g.finish();
}

fn word_products(c: &mut Criterion) {
    let pair = DistributionPair::standard(CumulantSequence::free_poisson(int(1), 16));
    let words: Vec<Word> = ["sx", "xs", "s", "sx", "x", "xs"]
        .iter()
        .map(|w| w.parse().unwrap())
        .collect();
    let mut g = c.benchmark_group("word_products_9_letters");
    g.bench_function("pruned", |b| {
        b.iter(|| cumulant_of_word_products(black_box(&words), &pair.s, &pair.x).unwrap())
    });
    g.bench_function("unpruned", |b| {
        b.iter(|| cumulant_of_word_products_unpruned(black_box(&words), &pair.s, &pair.x).unwrap())
    });
    g.finish();

    let mut g = c.benchmark_group("s_plus_commutator");
    g.sample_size(10);
    g.bench_function("order_8", |b| {
        b.iter(|| cumulant_sequence_of(&s_plus_commutator(), black_box(&pair), 8).unwrap())
    });
    g.bench_function("cancellation_7_3", |b| {
        b.iter(|| cancellation_sum(7, 3, black_box(&pair)).unwrap())
    });
    g.finish();
}

fn operator_model(c: &mut Criterion) {
    let rho = RhoMoments::of_atoms(&[(rat(1, 2), int(0)), (rat(1, 2), int(3))], 12);
    let x = CumulantSequence::new(rho.values()[1..].to_vec());
    let mut g = c.benchmark_group("order_8");
    g.bench_function("model_cumulant", |b| {
        b.iter(|| model_cumulant(8, black_box(&rho)).unwrap())
    });
    g.bench_function("closed_form", |b| {
        b.iter(|| prop41_closed_form(8, black_box(&x)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, partitions, word_products, operator_model);
criterion_main!(benches);
