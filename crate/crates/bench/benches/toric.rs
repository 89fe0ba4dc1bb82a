use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use wog_toric::caps::Caps;
use wog_toric::fiber::{fiber, strongly_robust};
use wog_toric::graph::{make_family, FamilyDescriptor, Orientation, Shape};
use wog_toric::graver::{brute_force_graver, graver_basis};
use wog_toric::lattice::ToricMatrix;
use wog_toric::random::{random_matrix, seeded};
use wog_toric::IBig;

fn random_matrices(count: usize) -> Vec<ToricMatrix> {
    let mut rng = seeded(11);
    (0..count).map(|_| random_matrix(&mut rng, 3, 6, 3).unwrap()).collect()
}

fn graver(c: &mut Criterion) {
    let matrices = random_matrices(20);
    let mut group = c.benchmark_group("graver");
    group.bench_function("completion 3x6", |b| {
        b.iter(|| matrices.iter().map(|a| graver_basis(black_box(a)).unwrap().len()).sum::<usize>())
    });
    group.bench_function("brute force 3x6", |b| {
        b.iter(|| matrices.iter().map(|a| brute_force_graver(black_box(a), 4).unwrap().len()).sum::<usize>())
    });
    for length in [4, 8, 12] {
        let g = make_family(
            &FamilyDescriptor::new(Shape::Cycle { length })
                .oriented(Orientation::Alternating)
                .weighted((1..=length as u64).collect()),
        )
        .unwrap();
        let a = g.incidence_matrix();
        group.bench_with_input(BenchmarkId::new("alternating cycle", length), &a, |b, a| {
            b.iter(|| graver_basis(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn fibers(c: &mut Criterion) {
    let a = ToricMatrix::from_rows(&[vec![3i64, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
    let mut group = c.benchmark_group("fiber");
    for k in [2i64, 4, 8] {
        let b: Vec<IBig> = vec![IBig::from(3 * k), IBig::from(3 * k)];
        group.bench_with_input(BenchmarkId::new("twisted cubic degree", k), &b, |bench, b| {
            bench.iter(|| fiber(&a, black_box(b), 1_000_000).unwrap().len())
        });
    }
    group.finish();
}

fn robustness(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("strongly_robust");
    let shapes = [
        ("bouquet 3+3", Shape::Bouquet { cycles: vec![3, 3], attached: vec![] }),
        ("bouquet 4+4", Shape::Bouquet { cycles: vec![4, 4], attached: vec![] }),
        ("bouquet 3 with attached 4", Shape::Bouquet { cycles: vec![3], attached: vec![(1, 4)] }),
    ];
    for (name, shape) in shapes {
        let g = make_family(&FamilyDescriptor::new(shape)).unwrap();
        let weights: Vec<u64> = (0..g.vertex_count()).map(|v| 1 + (v as u64 % 3)).collect();
        let g = wog_toric::graph::WeightedOrientedGraph::new(weights, g.edges().to_vec()).unwrap();
        let a = g.incidence_matrix();
        group.bench_function(name, |b| b.iter(|| strongly_robust(black_box(&a), &caps).unwrap().strongly_robust));
    }
    group.finish();
}

criterion_group!(benches, graver, fibers, robustness);
criterion_main!(benches);
