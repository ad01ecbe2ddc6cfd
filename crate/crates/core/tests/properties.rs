//! Property tests against the brute-force oracles.

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tree_eigen::enumerate::tree_from_prufer;
use tree_eigen::linalg::eigenspace_dim;
use tree_eigen::matching::matching_number;
use tree_eigen::oracle;
use tree_eigen::rational::{format_rational, int};
use tree_eigen::tree_pattern::{random_pattern_matrix, transfer_null_pattern};
use tree_eigen::{
    adjacency_matrix, classify_vertices, eigenspace_basis, has_simply_structured_basis, is_class_c,
    kernel_basis, multiplicity_via_matching, nylen_nullity, parse_rational, verify_eigenvector,
    Decomposition, Forest, Rational, Tree, TreePatternMatrix, VertexId,
};

fn tree_of_order(max_n: usize) -> impl Strategy<Value = Tree> {
    (2..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(0..n, n - 2))
        .prop_map(|seq| tree_from_prufer(&seq))
}

fn without_edge(f: &Forest, e: (usize, usize)) -> Forest {
    let rest = f.edges().iter().copied().filter(|&x| x != e);
    Forest::from_parts(f.labels().to_vec(), rest).unwrap()
}

fn gauss_rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows = vectors.to_vec();
    oracle::gauss_rank(&mut rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matching_number_matches_branching(t in tree_of_order(12)) {
        prop_assert_eq!(matching_number(&t), oracle::matching_number(&t));
    }

    #[test]
    fn classification_matches_deletion(t in tree_of_order(11)) {
        let class = classify_vertices(&t);
        let may = oracle::may_miss(&t);
        for v in 0..t.len() {
            prop_assert_eq!(class.may_miss(v), may[v], "vertex {}", v);
        }
        let nu = oracle::matching_number(&t);
        for &(u, v) in t.edges() {
            let forced = oracle::matching_number(&without_edge(&t, (u, v))) < nu;
            prop_assert_eq!(class.is_forced(u, v), forced, "edge {} {}", u, v);
        }
    }

    #[test]
    fn elimination_matches_gauss_jordan(t in tree_of_order(12), k in -3i64..=3) {
        let a = adjacency_matrix(&t);
        prop_assert_eq!(eigenspace_dim(&a, &int(k)), oracle::nullity(&a, &int(k)));
    }

    #[test]
    fn eigenspace_basis_verifies(t in tree_of_order(12), k in -2i64..=2) {
        let a = adjacency_matrix(&t);
        let b = eigenspace_basis(&a, &int(k));
        for x in &b.vectors {
            prop_assert!(verify_eigenvector(&a, &int(k), x).unwrap());
        }
        prop_assert_eq!(gauss_rank(&b.vectors), b.dim());
    }

    #[test]
    fn kernel_basis_spans_null_space(t in tree_of_order(14)) {
        let a = adjacency_matrix(&t);
        let basis: Vec<Vec<Rational>> = kernel_basis(&t).iter().map(|x| x.to_rationals()).collect();
        let nullity = oracle::nullity(&a, &Rational::zero());
        prop_assert_eq!(basis.len(), nullity);
        prop_assert_eq!(gauss_rank(&basis), nullity);
        for x in &basis {
            prop_assert!(verify_eigenvector(&a, &Rational::zero(), x).unwrap());
        }
    }

    #[test]
    fn skeleton_matching_gives_multiplicity(t in tree_of_order(12), k in -2i64..=2) {
        let a = adjacency_matrix(&t);
        let exact = oracle::nullity(&a, &int(k));
        match multiplicity_via_matching(&a, &int(k)) {
            Ok(m) => prop_assert_eq!(m, exact),
            Err(_) => prop_assert_eq!(exact, 0),
        }
    }

    #[test]
    fn lifted_skeleton_vectors_are_eigenvectors(t in tree_of_order(12), k in -2i64..=2) {
        let a = adjacency_matrix(&t);
        let lambda = int(k);
        let Ok(d) = Decomposition::new(&a, &lambda) else { return Ok(()); };
        let inner = TreePatternMatrix::adjacency(&d.skeleton.forest);
        let lifted: Vec<Vec<Rational>> = eigenspace_basis(&inner, &Rational::zero())
            .vectors
            .iter()
            .map(|s| d.lift(s).unwrap())
            .collect();
        for x in &lifted {
            prop_assert!(verify_eigenvector(&a, &lambda, x).unwrap());
        }
        prop_assert_eq!(gauss_rank(&lifted), d.support.multiplicity);
    }

    #[test]
    fn class_membership_matches_sign_search(t in tree_of_order(12)) {
        let r = is_class_c(&t);
        prop_assert_eq!(r.member, oracle::sign_eigenvector(&t, 1).is_some());
    }

    #[test]
    fn sign_basis_exists_iff_sign_vectors_span(t in tree_of_order(9)) {
        let a = adjacency_matrix(&t);
        let dim = oracle::nullity(&a, &Rational::one());
        prop_assume!(dim > 0);
        let found: Vec<Vec<Rational>> = oracle::zero_sign_eigenvectors(&t, 1)
            .iter()
            .map(|x| x.iter().map(|&e| int(i64::from(e))).collect())
            .collect();
        let spans = gauss_rank(&found) == dim;
        prop_assert_eq!(has_simply_structured_basis(&t, 1).unwrap(), spans);
    }

    #[test]
    fn pattern_nullity_formula(t in tree_of_order(10), seed in any::<u64>(), zero_diag in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_pattern_matrix(&t, zero_diag, &mut rng);
        for k in -2i64..=2 {
            let exact = oracle::nullity(&m, &int(k));
            if k != 0 && exact == 0 {
                continue;
            }
            prop_assert_eq!(nylen_nullity(&m, &int(k)).unwrap(), exact);
        }
        if zero_diag {
            let a = adjacency_matrix(&t);
            for v in eigenspace_basis(&a, &Rational::zero()).vectors {
                let y = transfer_null_pattern(&m, &v).unwrap();
                prop_assert!(verify_eigenvector(&m, &Rational::zero(), &y).unwrap());
            }
        }
    }

    #[test]
    fn edge_list_round_trip(t in tree_of_order(15)) {
        prop_assert_eq!(&Tree::parse(&t.serialize()).unwrap(), &t);
    }

    #[test]
    fn canonical_form_ignores_labels(t in tree_of_order(12)) {
        // Reverse the vertex order and rename every vertex.
        let n = t.len();
        let pos = |v: usize| n - 1 - v;
        let mut relabeled = Vec::with_capacity(n);
        for i in 0..n {
            relabeled.push(VertexId::new(format!("w{}", pos(i))).unwrap());
        }
        let edges = t.edges().iter().map(|&(u, v)| (pos(u), pos(v)));
        let other = Forest::from_parts(relabeled, edges).unwrap();
        let colors = vec![0u8; n];
        prop_assert_eq!(t.canonical_form(&colors), other.canonical_form(&colors));
    }

    #[test]
    fn rational_text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let x = Rational::new(p.into(), q.into());
        let text = format_rational(&x);
        prop_assert!(!text.contains('.'));
        prop_assert_eq!(parse_rational(&text).unwrap(), x);
    }
}
