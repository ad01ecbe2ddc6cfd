use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_traits::Zero;
use tree_eigen::enumerate::sampled_trees;
use tree_eigen::linalg::eigenspace_dim;
use tree_eigen::rational::int;
use tree_eigen::{adjacency_matrix, eigenspace_basis, kernel_basis, maximum_matching, Rational};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenspace_basis");
    for n in [8, 16, 32, 64] {
        let trees = sampled_trees(n, 16, 1);
        let matrices: Vec<_> = trees.iter().map(|t| adjacency_matrix(t)).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &matrices, |b, ms| {
            b.iter(|| {
                for m in ms {
                    black_box(eigenspace_basis(m, &Rational::zero()));
                }
            })
        });
    }
    group.finish();
}

fn nullity_two_ways(c: &mut Criterion) {
    let trees = sampled_trees(40, 32, 2);
    let matrices: Vec<_> = trees.iter().map(|t| adjacency_matrix(t)).collect();
    let mut group = c.benchmark_group("nullity_n40");
    group.bench_function("elimination", |b| {
        b.iter(|| {
            matrices
                .iter()
                .map(|m| eigenspace_dim(m, &int(0)))
                .sum::<usize>()
        })
    });
    group.bench_function("matching", |b| {
        b.iter(|| {
            trees
                .iter()
                .map(|t| t.len() - 2 * maximum_matching(t).size())
                .sum::<usize>()
        })
    });
    group.bench_function("kernel_basis", |b| {
        b.iter(|| trees.iter().map(|t| kernel_basis(t).len()).sum::<usize>())
    });
    group.finish();
}

criterion_group!(benches, elimination, nullity_two_ways);
criterion_main!(benches);
