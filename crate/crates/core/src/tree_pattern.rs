//! Nullity and support of matrices whose off-diagonal pattern is a tree.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Forest, Tree, VertexId};
use crate::linalg::{eigenspace_basis, verify_eigenvector, Matrix, TreePatternMatrix};
use crate::rational::{frac, int, Rational};
use crate::skeleton::Decomposition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSupport {
    pub lambda: Rational,
    /// Vertices where some eigenvector does not vanish, in index order.
    pub support: Vec<usize>,
    /// Components of the pattern graph induced on the support.
    pub induced_components: usize,
    /// Vertices outside the support adjacent to it.
    pub outside_adjacent: usize,
}

/// Undirected graph of the non-zero off-diagonal entries.
pub fn pattern_graph(m: &TreePatternMatrix) -> &Forest {
    m.pattern()
}

pub fn pattern_support(m: &TreePatternMatrix, lambda: &Rational) -> PatternSupport {
    let basis = eigenspace_basis(m, lambda);
    let mask = basis.support_mask(m.order());
    let f = m.pattern();
    let outside_adjacent = (0..f.len())
        .filter(|&v| !mask[v] && f.neighbors(v).iter().any(|&w| mask[w]))
        .count();
    PatternSupport {
        lambda: lambda.clone(),
        support: (0..f.len()).filter(|&v| mask[v]).collect(),
        induced_components: f.component_sets_within(&mask).len(),
        outside_adjacent,
    }
}

fn require_tree(m: &TreePatternMatrix) -> Result<()> {
    if !m.pattern().is_connected() {
        return Err(Error::Precondition("pattern graph is not a tree".into()));
    }
    Ok(())
}

/// Components of the support minus the vertices adjacent to it from
/// outside.
pub fn nylen_nullity(m: &TreePatternMatrix, lambda: &Rational) -> Result<usize> {
    require_tree(m)?;
    let s = pattern_support(m, lambda);
    s.induced_components
        .checked_sub(s.outside_adjacent)
        .ok_or_else(|| {
            Error::Internal("more outside-adjacent vertices than support components".into())
        })
}

/// The same count through the skeleton of `M - lambda I`: skeleton order
/// minus twice its matching number, or zero when `lambda` is no eigenvalue.
pub fn nullity_via_skeleton(m: &TreePatternMatrix, lambda: &Rational) -> Result<usize> {
    match Decomposition::new(m, lambda) {
        Ok(d) => Ok(d.multiplicity_via_matching()),
        Err(Error::NotAnEigenvalue(_)) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Rescales a null vector of the pattern's adjacency matrix into a null
/// vector of `m` with the same zero pattern.
///
/// Walks each component breadth-first from its lowest vertex. The neighbors
/// of a vertex `z` are all rescaled so that `m[z][c] * g[c]` is one common
/// factor, which turns the adjacency summation rule at `z` into the one for
/// `m`. That factor is inherited from `z`'s parent when the parent carries
/// a non-zero value, and 1 otherwise.
pub fn transfer_null_pattern(m: &TreePatternMatrix, v: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.order();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: v.len(),
        });
    }
    if !m.has_zero_diagonal() {
        return Err(Error::Precondition(
            "branch rescaling needs a zero diagonal".into(),
        ));
    }
    let f = m.pattern();
    let adjacency = TreePatternMatrix::adjacency(f);
    if !verify_eigenvector(&adjacency, &Rational::zero(), v)? {
        return Err(Error::Precondition(
            "vector is not in the null space of the pattern's adjacency matrix".into(),
        ));
    }
    let mut g = vec![Rational::zero(); n];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        g[root] = Rational::one();
        let mut queue = VecDeque::from([root]);
        while let Some(z) = queue.pop_front() {
            let p = parent[z];
            let kappa = if p != usize::MAX && !v[p].is_zero() {
                &g[p] * m.entry(z, p)
            } else {
                Rational::one()
            };
            for &c in f.neighbors(z) {
                if seen[c] {
                    continue;
                }
                seen[c] = true;
                parent[c] = z;
                g[c] = &kappa / m.entry(z, c);
                queue.push_back(c);
            }
        }
    }
    let out: Vec<Rational> = g.iter().zip(v).map(|(a, b)| a * b).collect();
    if !verify_eigenvector(m, &Rational::zero(), &out)? {
        return Err(Error::Internal(
            "rescaled vector is not a null vector".into(),
        ));
    }
    Ok(out)
}

/// Notes on inputs outside the symmetric setting the nullity formula is
/// stated for.
pub fn caveats(m: &TreePatternMatrix) -> Vec<String> {
    let mut out = Vec::new();
    if !m.is_value_symmetric() {
        out.push("matrix values are not symmetric; the nullity formula is only established for symmetric matrices".into());
    }
    out
}

/// Off-diagonal and non-zero diagonal values drawn by
/// [`random_pattern_matrix`].
pub fn pattern_entry_values() -> Vec<Rational> {
    vec![
        int(1),
        int(-1),
        int(2),
        int(-2),
        int(3),
        int(-3),
        frac(1, 2),
        frac(-1, 2),
    ]
}

/// A symmetric matrix whose pattern is `tree`, with off-diagonal values
/// from [`pattern_entry_values`]. The diagonal is zero when `zero_diagonal`
/// is set, otherwise each diagonal entry is zero or a random value with
/// equal odds.
pub fn random_pattern_matrix<R: Rng + ?Sized>(
    tree: &Tree,
    zero_diagonal: bool,
    rng: &mut R,
) -> TreePatternMatrix {
    let values = pattern_entry_values();
    let pick = |rng: &mut R| values[rng.random_range(0..values.len())].clone();
    let n = tree.len();
    let mut entries = Matrix::zeros(n, n);
    for &(u, v) in tree.edges() {
        let x = pick(rng);
        entries.set(u, v, x.clone());
        entries.set(v, u, x);
    }
    if !zero_diagonal {
        for v in 0..n {
            if rng.random_bool(0.5) {
                entries.set(v, v, pick(rng));
            }
        }
    }
    let labels: Vec<VertexId> = tree.labels().to_vec();
    TreePatternMatrix::new(labels, entries).expect("pattern is the given tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::adjacency_matrix;
    use crate::rational::parse_rational;

    fn weighted_p3() -> TreePatternMatrix {
        TreePatternMatrix::from_json(
            r#"{"order":3,"vertex_order":["v1","v2","v3"],
                "entries":[["0","2","0"],["3","0","1"],["0","5","0"]]}"#,
        )
        .unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn pattern_examples() {
        let p3 = Tree::parse("a b\nb c").unwrap();
        assert_eq!(pattern_graph(&adjacency_matrix(&p3)), p3.as_forest());
        assert_eq!(pattern_graph(&weighted_p3()).edge_count(), 2);
        let diag = TreePatternMatrix::from_json(
            r#"{"order":2,"vertex_order":["a","b"],"entries":[["1","0"],["0","1"]]}"#,
        )
        .unwrap();
        assert_eq!(pattern_graph(&diag).edge_count(), 0);
        assert!(matches!(
            nylen_nullity(&diag, &int(1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn nylen_examples() {
        let s = pattern_support(&weighted_p3(), &int(0));
        assert_eq!(s.support, vec![0, 2]);
        assert_eq!((s.induced_components, s.outside_adjacent), (2, 1));
        assert_eq!(nylen_nullity(&weighted_p3(), &int(0)).unwrap(), 1);

        let star = adjacency_matrix(&Forest::parse("h a\nh b\nh c").unwrap());
        assert_eq!(nylen_nullity(&star, &int(0)).unwrap(), 2);
        let p4 = adjacency_matrix(&Forest::parse("a b\nb c\nc d").unwrap());
        assert_eq!(nylen_nullity(&p4, &int(1)).unwrap(), 0);
        assert_eq!(nullity_via_skeleton(&p4, &int(1)).unwrap(), 0);
    }

    #[test]
    fn transfer_examples() {
        assert_eq!(
            transfer_null_pattern(&weighted_p3(), &ints(&[1, 0, -1])).unwrap(),
            ints(&[1, 0, -3])
        );
        let p3 = adjacency_matrix(&Forest::parse("a b\nb c").unwrap());
        assert_eq!(
            transfer_null_pattern(&p3, &ints(&[1, 0, -1])).unwrap(),
            ints(&[1, 0, -1])
        );

        // Center h; leaf rows carry 1, center row carries 1, 2, 4.
        let star = TreePatternMatrix::from_json(
            r#"{"order":4,"vertex_order":["h","a","b","c"],
                "entries":[["0","1","2","4"],["1","0","0","0"],["1","0","0","0"],["1","0","0","0"]]}"#,
        )
        .unwrap();
        let y = transfer_null_pattern(&star, &ints(&[0, 1, -1, 0])).unwrap();
        assert_eq!(
            y,
            vec![int(0), int(1), parse_rational("-1/2").unwrap(), int(0)]
        );

        assert!(transfer_null_pattern(&weighted_p3(), &ints(&[1, 0, 1])).is_err());
    }

    #[test]
    fn support_can_differ_from_pattern_adjacency() {
        let m = TreePatternMatrix::from_json(
            r#"{"order":2,"vertex_order":["a","b"],"entries":[["0","2"],["2","0"]]}"#,
        )
        .unwrap();
        assert_eq!(pattern_support(&m, &int(2)).support, vec![0, 1]);
        let a = adjacency_matrix(m.pattern());
        assert!(pattern_support(&a, &int(2)).support.is_empty());
    }

    #[test]
    fn asymmetric_values_are_flagged() {
        assert_eq!(caveats(&weighted_p3()).len(), 1);
        assert!(caveats(&adjacency_matrix(&Forest::parse("a b").unwrap())).is_empty());
    }
}
