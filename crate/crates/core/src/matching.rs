//! Maximum matchings of forests and the matching-based null space basis.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Forest;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Matched edges as `(min, max)` index pairs, sorted.
    edges: Vec<(usize, usize)>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    fn from_mates(mate: Vec<Option<usize>>) -> Self {
        let mut edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        edges.sort_unstable();
        Matching { edges, mate }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn covers(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate[u] == Some(v)
    }
}

/// Greedy leaf matching: walk each component (rooted at its lowest index)
/// bottom-up and match a vertex to its parent whenever both are free. On a
/// forest this is maximum. Vertices with `alive[v] == false` and the edge
/// `skip` are ignored.
fn greedy_mates(f: &Forest, alive: &[bool], skip: Option<(usize, usize)>) -> Vec<Option<usize>> {
    let n = f.len();
    let mut mate = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let usable = |u: usize, v: usize| skip != Some((u.min(v), u.max(v)));
    for root in 0..n {
        if !alive[root] || seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for &w in f.neighbors(v) {
                if alive[w] && !seen[w] && usable(v, w) {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && mate[v].is_none() && mate[p].is_none() {
            mate[v] = Some(p);
            mate[p] = Some(v);
        }
    }
    mate
}

fn matching_number_with(f: &Forest, alive: &[bool], skip: Option<(usize, usize)>) -> usize {
    greedy_mates(f, alive, skip).iter().flatten().count() / 2
}

pub fn maximum_matching(f: &Forest) -> Matching {
    Matching::from_mates(greedy_mates(f, &vec![true; f.len()], None))
}

pub fn matching_number(f: &Forest) -> usize {
    matching_number_with(f, &vec![true; f.len()], None)
}

/// Maximum matching plus the split of vertices into those some maximum
/// matching misses (`may_miss`) and those every maximum matching covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingClassification {
    pub matching: Matching,
    may_miss: Vec<bool>,
    /// Vertices missed by `matching`, in index order.
    pub missed: Vec<usize>,
    /// Edges contained in every maximum matching, as `(min, max)` pairs.
    pub forced_edges: Vec<(usize, usize)>,
}

impl MatchingClassification {
    pub fn may_miss(&self, v: usize) -> bool {
        self.may_miss[v]
    }

    pub fn never_missed(&self, v: usize) -> bool {
        !self.may_miss[v]
    }

    /// The set K, in index order.
    pub fn may_miss_set(&self) -> Vec<usize> {
        (0..self.may_miss.len())
            .filter(|&v| self.may_miss[v])
            .collect()
    }

    /// The set N, in index order.
    pub fn never_missed_set(&self) -> Vec<usize> {
        (0..self.may_miss.len())
            .filter(|&v| !self.may_miss[v])
            .collect()
    }

    pub fn is_forced(&self, u: usize, v: usize) -> bool {
        self.forced_edges
            .binary_search(&(u.min(v), u.max(v)))
            .is_ok()
    }
}

/// `v` may be missed iff deleting it keeps the matching number; an edge is
/// forced iff deleting it lowers the matching number.
pub fn classify_vertices(f: &Forest) -> MatchingClassification {
    let n = f.len();
    let mut alive = vec![true; n];
    let nu = matching_number_with(f, &alive, None);
    let mut may_miss = vec![false; n];
    for v in 0..n {
        alive[v] = false;
        may_miss[v] = matching_number_with(f, &alive, None) == nu;
        alive[v] = true;
    }
    let mut forced_edges: Vec<(usize, usize)> = f
        .edges()
        .iter()
        .copied()
        .filter(|&e| matching_number_with(f, &alive, Some(e)) < nu)
        .collect();
    forced_edges.sort_unstable();
    let matching = maximum_matching(f);
    let missed = (0..n).filter(|&v| !matching.covers(v)).collect();
    MatchingClassification {
        matching,
        may_miss,
        missed,
        forced_edges,
    }
}

/// A vector with entries in {-1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|x| !(-1..=1).contains(*x)) {
            return Err(Error::Precondition(format!(
                "sign vector entry {bad} outside {{-1, 0, 1}}"
            )));
        }
        Ok(SignVector(entries))
    }

    /// Converts a rational vector whose entries are all in {-1, 0, 1}.
    pub fn from_rationals(values: &[Rational]) -> Result<Self> {
        values
            .iter()
            .map(|x| {
                crate::rational::to_i64(x)
                    .filter(|v| (-1..=1).contains(v))
                    .map(|v| v as i8)
                    .ok_or_else(|| Error::Precondition(format!("entry {x} outside {{-1, 0, 1}}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| int(i64::from(x))).collect()
    }

    /// Negates the entries where `flip[v]` is true.
    pub fn flipped(&self, flip: &[bool]) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(flip)
                .map(|(&x, &f)| if f { -x } else { x })
                .collect(),
        )
    }
}

/// The {0, 1, -1} null space basis built from alternating paths.
///
/// Fixes the maximum matching `M` of [`maximum_matching`]. For every vertex
/// `v` missed by `M` (in index order) it grows the subtree of alternating
/// non-matching/matching paths from `v` whose edges join a never-missed
/// vertex to a vertex of `K \ (K_M \ {v})`, then weights vertices at
/// distance 0 mod 4 with +1 and 2 mod 4 with -1. Vector `i` is +1 on the
/// `i`-th missed vertex and zero on every other missed vertex.
pub fn kernel_basis(f: &Forest) -> Vec<SignVector> {
    let class = classify_vertices(f);
    kernel_basis_with(f, &class)
}

pub fn kernel_basis_with(f: &Forest, class: &MatchingClassification) -> Vec<SignVector> {
    let n = f.len();
    let m = &class.matching;
    let mut is_missed = vec![false; n];
    for &v in &class.missed {
        is_missed[v] = true;
    }
    class
        .missed
        .iter()
        .map(|&root| {
            // Allowed "K side" vertices for this root.
            let k_side = |u: usize| class.may_miss(u) && (!is_missed[u] || u == root);
            let mut dist = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let even = dist[u] % 2 == 0;
                for &w in f.neighbors(u) {
                    if dist[w] != usize::MAX {
                        continue;
                    }
                    // From the K side leave along non-matching edges into N;
                    // from N continue only along the matching edge into K.
                    let ok = if even {
                        !m.contains(u, w) && class.never_missed(w)
                    } else {
                        m.contains(u, w) && k_side(w)
                    };
                    if ok {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            SignVector(
                dist.iter()
                    .map(|&d| match d {
                        usize::MAX => 0,
                        d if d % 4 == 0 => 1,
                        d if d % 4 == 2 => -1,
                        _ => 0,
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Adjacency null space check for a sign vector.
pub fn is_null_vector(f: &Forest, x: &SignVector) -> bool {
    (0..f.len()).all(|v| {
        f.neighbors(v)
            .iter()
            .map(|&w| i64::from(x.0[w]))
            .sum::<i64>()
            .is_zero()
    })
}
