use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ins_core::convexity::{check_convex, CheckParams, Family, SampleBox};
use ins_core::dsl::{evaluate, parse_expr, parse_sets};
use ins_core::laws::{check_law, Law, LawConfig};
use ins_core::random::{random_set, seeded};
use ins_core::sample::EXAMPLE_FILE;

fn operators(c: &mut Criterion) {
    let mut group = c.benchmark_group("operators");
    for n in [8usize, 256, 4096] {
        let universe: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut rng = seeded(n as u64);
        let a = random_set(&mut rng, &universe);
        let b = random_set(&mut rng, &universe);
        group.bench_with_input(BenchmarkId::new("union", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).union(black_box(&b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("product", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).pointwise_product(black_box(&b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("complement", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).complement())
        });
        group.bench_with_input(BenchmarkId::new("subset", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).is_contained_in(black_box(&b)).unwrap())
        });
    }
    group.finish();
}

fn laws(c: &mut Criterion) {
    let config = LawConfig {
        trials: 100,
        ..LawConfig::default()
    };
    let mut group = c.benchmark_group("laws");
    for law in [Law::Distributivity, Law::Lub, Law::FavoriteAdditivity] {
        group.bench_function(law.name(), |bench| {
            bench.iter(|| check_law(law, black_box(&config)))
        });
    }
    group.finish();
}

fn convexity(c: &mut Criterion) {
    let params = CheckParams::default();
    let domain = SampleBox::cube(2, -2.0, 2.0).unwrap();
    let a = Family::Gaussian {
        center: 0.0,
        sigma: 1.0,
    }
    .build(2)
    .unwrap();
    let b = Family::Triangular {
        center: 0.5,
        width: 2.0,
    }
    .build(2)
    .unwrap();
    let both = a.intersect(&b).unwrap();
    c.bench_function("check_convex/intersection-2d", |bench| {
        bench.iter(|| check_convex(black_box(&both), &domain, &params).unwrap())
    });
}

fn dsl(c: &mut Criterion) {
    let src = "tf(A | B) & ~prod(A, scale(2, B)) \\ div(ff(A) + B, 3)";
    let env = parse_sets(EXAMPLE_FILE).unwrap();
    let expr = parse_expr(src).unwrap();
    c.bench_function("dsl/parse_expr", |bench| {
        bench.iter(|| parse_expr(black_box(src)).unwrap())
    });
    c.bench_function("dsl/parse_sets", |bench| {
        bench.iter(|| parse_sets(black_box(EXAMPLE_FILE)).unwrap())
    });
    c.bench_function("dsl/evaluate", |bench| {
        bench.iter(|| evaluate(black_box(&expr), &env).unwrap())
    });
}

criterion_group!(benches, operators, laws, convexity, dsl);
criterion_main!(benches);
