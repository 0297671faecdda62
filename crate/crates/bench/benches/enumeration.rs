use std::hint::black_box;
use std::num::NonZeroUsize;

use claimproof_core::graphs::{Multigraph, VertexId};
use claimproof_core::oracle::Enumerator;
use claimproof_core::{
    binomial, classify, classify_with_wilds, find_trail, make_deck, AceRule, Card, DeckSpec, Hand,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn random_hands(spec: &DeckSpec, n: usize, seed: u64) -> Vec<Hand> {
    let deck = make_deck(spec);
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let cards: Vec<Card> = deck.choose_multiple(&mut rng, 5).copied().collect();
            Hand::new(&cards).unwrap()
        })
        .collect()
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    let standard = DeckSpec::standard();
    let hands = random_hands(&standard, 4096, 1);
    group.throughput(Throughput::Elements(hands.len() as u64));
    group.bench_function("standard", |b| {
        b.iter(|| hands.iter().map(|h| classify(black_box(h), &standard).unwrap().index()).sum::<usize>())
    });
    let wild = DeckSpec::new(13, 4, 2, AceRule::Both).unwrap();
    let wild_hands = random_hands(&wild, 4096, 2);
    group.bench_function("two_wilds", |b| {
        b.iter(|| {
            wild_hands.iter().map(|h| classify_with_wilds(black_box(h), &wild).unwrap().category.index()).sum::<usize>()
        })
    });
    group.finish();
}

fn bench_tally(c: &mut Criterion) {
    let mut group = c.benchmark_group("tally");
    group.sample_size(10);
    let standard = DeckSpec::standard();
    group.throughput(Throughput::Elements(2_598_960));
    for threads in [1usize, 4] {
        let oracle = Enumerator::default().with_threads(NonZeroUsize::new(threads).unwrap());
        group.bench_with_input(BenchmarkId::new("standard", threads), &oracle, |b, o| {
            b.iter(|| o.tally(black_box(&standard)).unwrap())
        });
    }
    group.finish();
}

fn bench_binomial(c: &mut Criterion) {
    c.bench_function("binomial/52_5", |b| b.iter(|| binomial(black_box(52), black_box(5))));
    c.bench_function("binomial/1000_500", |b| b.iter(|| binomial(black_box(1000), black_box(500))));
}

/// A connected multigraph with every degree even, built from a random closed walk.
fn closed_walk(vertices: usize, edges: usize, seed: u64) -> Multigraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut g = Multigraph::new();
    for i in 0..vertices {
        g.add_vertex(&format!("v{i}")).unwrap();
    }
    let mut at = 0;
    for _ in 0..edges - 1 {
        let next = rng.gen_range(0..vertices);
        g.add_edge(VertexId(at), VertexId(next), None);
        at = next;
    }
    g.add_edge(VertexId(at), VertexId(0), None);
    g
}

fn bench_trail(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_trail");
    for edges in [100usize, 10_000] {
        let g = closed_walk(edges / 4, edges, 3);
        group.throughput(Throughput::Elements(edges as u64));
        group.bench_with_input(BenchmarkId::from_parameter(edges), &g, |b, g| b.iter(|| find_trail(black_box(g)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_tally, bench_binomial, bench_trail);
criterion_main!(benches);
