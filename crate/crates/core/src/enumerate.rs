//! Labeled tree generation from Prüfer sequences.
//!
//! Trees on `n` vertices are labeled `"0"` .. `"n-1"` and listed with vertex
//! `i` at index `i`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Forest, Tree, VertexId};

/// Decodes a Prüfer sequence over `0..n` where `n = seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Smallest current leaf via a moving pointer, the standard linear decode.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        degree[leaf] = 0;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last = (0..n)
        .filter(|&v| degree[v] == 1 && v != leaf)
        .max()
        .unwrap();
    edges.push((leaf, last));
    labeled_tree(n, edges)
}

fn labeled_tree(n: usize, edges: Vec<(usize, usize)>) -> Tree {
    let labels = (0..n)
        .map(|i| VertexId::new(i.to_string()).expect("numeric label"))
        .collect();
    Tree::new(Forest::from_parts(labels, edges).expect("decoded edges form a tree"))
        .expect("decoded edges form a tree")
}

/// Number of labeled trees on `n` vertices (`n^(n-2)`), saturating.
pub fn labeled_tree_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => (n as u64).saturating_pow((n - 2) as u32),
    }
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Tree> {
    let mut state: Option<Vec<usize>> = match n {
        0 => None,
        _ => Some(vec![0; n.saturating_sub(2)]),
    };
    std::iter::from_fn(move || {
        let seq = state.take()?;
        let tree = if n == 1 {
            labeled_tree(1, Vec::new())
        } else {
            tree_from_prufer(&seq)
        };
        if n > 1 {
            let mut next = seq;
            let mut i = next.len();
            while i > 0 {
                i -= 1;
                next[i] += 1;
                if next[i] < n {
                    state = Some(next);
                    break;
                }
                next[i] = 0;
            }
        }
        Some(tree)
    })
}

/// The `index`-th tree of [`all_labeled_trees`], for `index <
/// labeled_tree_count(n)`.
pub fn labeled_tree_by_index(n: usize, index: u64) -> Tree {
    match n {
        0 => panic!("a tree needs at least one vertex"),
        1 => labeled_tree(1, Vec::new()),
        _ => {
            let mut seq = vec![0; n - 2];
            let mut rest = index;
            for slot in seq.iter_mut().rev() {
                *slot = (rest % n as u64) as usize;
                rest /= n as u64;
            }
            tree_from_prufer(&seq)
        }
    }
}

/// A uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    match n {
        0 => panic!("a tree needs at least one vertex"),
        1 => labeled_tree(1, Vec::new()),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// `count` random trees on `n` vertices from a stream determined by `(seed, n)`.
pub fn sampled_trees(n: usize, count: usize, seed: u64) -> Vec<Tree> {
    let mut rng = rng_for(seed, n as u64);
    (0..count).map(|_| random_tree(n, &mut rng)).collect()
}

/// Deterministic generator for a `(seed, stream)` pair.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cayley_counts() {
        for n in 1..=6 {
            let trees: Vec<Tree> = all_labeled_trees(n).collect();
            assert_eq!(trees.len() as u64, labeled_tree_count(n), "n = {n}");
            let distinct: HashSet<String> = trees.iter().map(|t| t.serialize()).collect();
            assert_eq!(distinct.len(), trees.len(), "duplicates at n = {n}");
        }
    }

    #[test]
    fn indexing_matches_enumeration() {
        for n in 1..=5 {
            for (i, t) in all_labeled_trees(n).enumerate() {
                assert_eq!(labeled_tree_by_index(n, i as u64), t);
            }
        }
    }

    #[test]
    fn known_decode() {
        // Star on five vertices centered at 3.
        let t = tree_from_prufer(&[3, 3, 3]);
        assert_eq!(t.degree(3), 4);
        let p = tree_from_prufer(&[1, 2]);
        assert_eq!(p.serialize(), "0 1\n1 2\n2 3\n");
    }

    #[test]
    fn sampling_is_reproducible() {
        let a: Vec<String> = sampled_trees(9, 20, 5)
            .iter()
            .map(|t| t.serialize())
            .collect();
        let b: Vec<String> = sampled_trees(9, 20, 5)
            .iter()
            .map(|t| t.serialize())
            .collect();
        let c: Vec<String> = sampled_trees(9, 20, 6)
            .iter()
            .map(|t| t.serialize())
            .collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
