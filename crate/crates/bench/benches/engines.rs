use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ald_core::braid::{garside_equal, handle_reduce, BraidWord};
use ald_core::diagram::{diagram_reduce, word_to_diagram};
use ald_core::enumerate::random_term;
use ald_core::experiment::{freeness_scan, random_pb_words, ExperimentConfig};
use ald_core::ld::DefaultOracle;
use ald_core::term::Op;
use ald_core::{decide_ald, PBWord, Verdict};

fn braid_words(n: usize, len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..n)
        .map(|_| {
            let v = (0..len)
                .map(|_| rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 })
                .collect();
            BraidWord::new(v).unwrap()
        })
        .collect()
}

fn braids(c: &mut Criterion) {
    let words = braid_words(64, 40);
    c.bench_function("handle_reduce len 40", |b| {
        b.iter(|| words.iter().map(|w| handle_reduce(black_box(w)).len()).sum::<usize>())
    });
    c.bench_function("garside_equal len 40", |b| {
        b.iter(|| words.windows(2).filter(|p| garside_equal(&p[0], &p[1])).count())
    });
}

fn terms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let pairs: Vec<_> = (0..64)
        .map(|_| {
            let ops = [Op::Star, Op::Circ];
            (random_term(&mut rng, 8, 1, &ops), random_term(&mut rng, 8, 1, &ops))
        })
        .collect();
    let oracle = DefaultOracle::default();
    c.bench_function("decide_ald size 8", |b| {
        b.iter(|| pairs.iter().filter(|(s, t)| decide_ald(s, t, &oracle) == Verdict::Equal).count())
    });
}

fn diagrams(c: &mut Criterion) {
    let words: Vec<PBWord> = random_pb_words(3, 64, 12, 3);
    c.bench_function("word_to_diagram + reduce len 12", |b| {
        b.iter(|| {
            words
                .iter()
                .map(|w| diagram_reduce(&word_to_diagram(black_box(w))).strands())
                .sum::<usize>()
        })
    });
}

fn scan(c: &mut Criterion) {
    let config = ExperimentConfig {
        max_term_size: 4,
        ..ExperimentConfig::default()
    };
    let mut group = c.benchmark_group("freeness_scan");
    group.sample_size(10);
    group.bench_function("size 4", |b| b.iter(|| freeness_scan(black_box(&config)).ok()));
    group.finish();
}

criterion_group!(benches, braids, terms, diagrams, scan);
criterion_main!(benches);
