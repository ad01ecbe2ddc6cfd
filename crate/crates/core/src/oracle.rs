//! Brute-force reference computations, kept independent of the algorithms
//! they check. All of them are exponential and meant for small trees.

use crate::graph::Forest;
use crate::linalg::{Matrix, TreePatternMatrix};
use crate::rational::{int, Rational};

/// Matching number by branching on the lowest vertex that still has an
/// available edge: leave it unmatched or match it to each neighbor.
pub fn matching_number(f: &Forest) -> usize {
    fn go(f: &Forest, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) =
            (from..f.len()).find(|&v| !used[v] && f.neighbors(v).iter().any(|&w| !used[w]))
        else {
            return 0;
        };
        used[v] = true;
        let mut best = go(f, used, v + 1);
        for &w in f.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + go(f, used, v + 1));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    go(f, &mut vec![false; f.len()], 0)
}

/// Per vertex: does deleting it keep the matching number?
pub fn may_miss(f: &Forest) -> Vec<bool> {
    let nu = matching_number(f);
    (0..f.len())
        .map(|v| {
            let rest: Vec<usize> = (0..f.len()).filter(|&w| w != v).collect();
            matching_number(&f.induced(&rest)) == nu
        })
        .collect()
}

/// Searches for a vector with entries in {1, -1} satisfying the adjacency
/// summation rule for `lambda` at every vertex. Values are assigned in
/// index order and a vertex's rule is checked once it and all its neighbors
/// carry values. Vertex 0 of each component is fixed to +1, which loses
/// nothing because negating a solution on a component gives a solution.
pub fn sign_eigenvector(f: &Forest, lambda: i64) -> Option<Vec<i8>> {
    let n = f.len();
    if n == 0 {
        return None;
    }
    // ready[i]: vertices whose rule can be checked once 0..=i are assigned.
    let mut ready = vec![Vec::new(); n];
    for v in 0..n {
        let last = f.neighbors(v).iter().copied().chain([v]).max().unwrap();
        ready[last].push(v);
    }
    let mut first_of_component = vec![false; n];
    for comp in f.component_sets() {
        first_of_component[comp[0]] = true;
    }
    let mut x = vec![0i8; n];
    fn go(
        f: &Forest,
        lambda: i64,
        ready: &[Vec<usize>],
        first: &[bool],
        x: &mut [i8],
        i: usize,
    ) -> bool {
        if i == x.len() {
            return true;
        }
        let choices: &[i8] = if first[i] { &[1] } else { &[1, -1] };
        for &s in choices {
            x[i] = s;
            let ok = ready[i].iter().all(|&v| {
                let sum: i64 = f.neighbors(v).iter().map(|&w| i64::from(x[w])).sum();
                sum == lambda * i64::from(x[v])
            });
            if ok && go(f, lambda, ready, first, x, i + 1) {
                return true;
            }
        }
        x[i] = 0;
        false
    }
    go(f, lambda, &ready, &first_of_component, &mut x, 0).then_some(x)
}

/// Every non-zero vector in {0, 1, -1}^n (up to sign) that is an eigenvector
/// for `lambda`, found by enumerating all of them.
pub fn zero_sign_eigenvectors(f: &Forest, lambda: i64) -> Vec<Vec<i8>> {
    let n = f.len();
    let total = 3usize.pow(n as u32);
    let mut out = Vec::new();
    let mut x = vec![0i8; n];
    for code in 1..total {
        let mut c = code;
        for slot in x.iter_mut() {
            *slot = (c % 3) as i8 - 1;
            c /= 3;
        }
        // Keep one of each pair x, -x: the first non-zero entry is +1.
        if x.iter().find(|&&v| v != 0) != Some(&1) {
            continue;
        }
        let ok = (0..n).all(|v| {
            let sum: i64 = f.neighbors(v).iter().map(|&w| i64::from(x[w])).sum();
            sum == lambda * i64::from(x[v])
        });
        if ok {
            out.push(x.clone());
        }
    }
    out
}

/// Rank of a set of sign vectors over the rationals.
pub fn sign_rank(vectors: &[Vec<i8>]) -> usize {
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| int(i64::from(x))).collect())
        .collect();
    Matrix::rank_of_vectors(&rows)
}

/// Dimension of the null space of `m - lambda I` by plain Gauss-Jordan
/// elimination over the rationals.
pub fn nullity(m: &TreePatternMatrix, lambda: &Rational) -> usize {
    let n = m.order();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = m.entry(i, j).clone();
                    if i == j {
                        e - lambda
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    n - gauss_rank(&mut a)
}

/// Rank by Gauss-Jordan elimination; `a` is reduced in place.
pub fn gauss_rank(a: &mut [Vec<Rational>]) -> usize {
    use num_traits::Zero;
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let factor = a[r][c].clone();
                for k in 0..cols {
                    let d = &factor * &a[rank][k];
                    a[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}
