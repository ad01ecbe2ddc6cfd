//! Exact eigenspace structure of trees.
//!
//! Eigenvectors of a tree vanish on a fixed set of vertices for each
//! eigenvalue. Contracting the remaining components gives a small skeleton
//! forest whose maximum matchings determine the multiplicity, and
//! eigenvectors move back and forth between tree and skeleton. On top of
//! that sit {0, 1, -1} eigenspace bases, a generator for trees with a
//! prescribed multiplicity, and the nullity of weighted matrices whose
//! pattern is a tree. All arithmetic is exact.

pub mod composition;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod matching;
pub mod oracle;
pub mod rational;
pub mod simply_structured;
pub mod skeleton;
pub mod tree_pattern;

pub use composition::{
    blow_up, generate_ingredients, validate_meta_skeleton, Blowup, BlowupPlan, Ingredients,
    MetaSkeletonSpec, Replacement, SpecViolation,
};
pub use error::{Error, Result};
pub use graph::{Forest, Tree, VertexId};
pub use linalg::{
    adjacency_matrix, eigenspace_basis, integer_spectrum, verify_eigenvector, Matrix,
    MatrixDocument, RationalBasis, TreePatternMatrix,
};
pub use matching::{
    classify_vertices, kernel_basis, maximum_matching, Matching, MatchingClassification, SignVector,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use simply_structured::{
    has_simply_structured_basis, is_class_c, simply_structured_basis, ClassCResult, ReductionTrace,
};
pub use skeleton::{
    lift_null_vector, meta_skeleton, multiplicity_via_matching, project_eigenvector, skeleton,
    support_report, x_skeleton, Decomposition, MetaSkeleton, SkeletonForest, SkeletonVertex,
    SupportReport,
};
pub use tree_pattern::{
    nylen_nullity, pattern_graph, pattern_support, transfer_null_pattern, PatternSupport,
};
