//! Property suites run over generated trees and matrices.
//!
//! Each suite walks an instance set in parallel and tallies named checks.
//! Tallies merge by addition and keep the failure with the smallest
//! instance index, so results do not depend on scheduling.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::composition::{
    blow_up, generate_ingredients, validate_meta_skeleton, BlowupPlan, Ingredients,
    MetaSkeletonSpec, Replacement,
};
use crate::enumerate::{
    labeled_tree_by_index, labeled_tree_count, random_tree, rng_for, sampled_trees,
};
use crate::error::Result;
use crate::graph::{Forest, Tree, VertexId};
use crate::linalg::{
    adjacency_matrix, eigenspace_basis, eigenspace_dim, straighten_basis, verify_eigenvector,
    Matrix, TreePatternMatrix,
};
use crate::matching::{classify_vertices, is_null_vector, kernel_basis_with, matching_number};
use crate::oracle;
use crate::rational::{int, Rational};
use crate::simply_structured::{
    bipartition_flip, has_simply_structured_basis, is_class_c, simply_structured_basis,
};
use crate::skeleton::{
    is_zero_skeleton_fixed_point, skeleton_null, Decomposition, SkeletonViolation,
};
use crate::tree_pattern::{
    nullity_via_skeleton, nylen_nullity, pattern_support, random_pattern_matrix,
    transfer_null_pattern,
};

/// Largest tree order used for sampled instances.
pub const MAX_SAMPLED_ORDER: usize = 14;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: u64,
    pub failures: u64,
    /// Instance index and description of the earliest failing instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<(u64, String)>,
}

fn earlier(a: Option<(u64, String)>, b: Option<(u64, String)>) -> Option<(u64, String)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
        (a, b) => a.or(b),
    }
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures += other.failures;
        self.first_failure = earlier(self.first_failure.take(), other.first_failure);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// How often a counted property occurred.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub examined: u64,
    pub occurrences: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_occurrence: Option<(u64, String)>,
}

impl Observation {
    fn merge(&mut self, other: Observation) {
        self.examined += other.examined;
        self.occurrences += other.occurrences;
        self.first_occurrence = earlier(self.first_occurrence.take(), other.first_occurrence);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub checks: BTreeMap<String, Tally>,
    /// Properties that are counted but do not decide the outcome.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, Observation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(Tally::passed)
    }

    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, t)| !t.passed())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.instances += other.instances;
        for (k, t) in other.checks {
            self.checks.entry(k).or_default().merge(t);
        }
        for (k, t) in other.observations {
            self.observations.entry(k).or_default().merge(t);
        }
        self
    }
}

/// Collects checks for one instance.
pub struct Recorder {
    index: u64,
    report: SuiteReport,
}

impl Recorder {
    fn new(index: u64) -> Self {
        Recorder {
            index,
            report: SuiteReport {
                instances: 1,
                ..SuiteReport::default()
            },
        }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.report.checks.entry(name.to_string()).or_default();
        t.checks += 1;
        if !ok {
            t.failures += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some((self.index, detail()));
            }
        }
    }

    /// Counts an occurrence of `name` when `happened` holds.
    pub fn observe(&mut self, name: &str, happened: bool, detail: impl FnOnce() -> String) {
        let o = self
            .report
            .observations
            .entry(name.to_string())
            .or_default();
        o.examined += 1;
        if happened {
            o.occurrences += 1;
            if o.first_occurrence.is_none() {
                o.first_occurrence = Some((self.index, detail()));
            }
        }
    }

    /// Records a failed check for an unexpected error.
    pub fn ok<T>(
        &mut self,
        name: &str,
        r: Result<T>,
        detail: impl FnOnce() -> String,
    ) -> Option<T> {
        match r {
            Ok(v) => {
                self.check(name, true, String::new);
                Some(v)
            }
            Err(e) => {
                self.check(name, false, || format!("{}: {e}", detail()));
                None
            }
        }
    }
}

fn run_indexed<F>(suite: &str, count: u64, f: F) -> SuiteReport
where
    F: Fn(u64, &mut Recorder) + Sync,
{
    let mut report = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rec = Recorder::new(i);
            f(i, &mut rec);
            rec.report
        })
        .reduce(SuiteReport::default, SuiteReport::merge);
    report.suite = suite.to_string();
    report
}

/// Every labeled tree up to `exhaustive_n` vertices, then `samples` seeded
/// random trees for each listed larger order.
#[derive(Debug, Clone)]
pub struct TreeSet {
    exhaustive: Vec<(usize, u64)>,
    sampled: Vec<Tree>,
}

impl TreeSet {
    pub fn new(
        exhaustive_n: usize,
        sampled_orders: std::ops::RangeInclusive<usize>,
        samples: usize,
        seed: u64,
    ) -> Self {
        let exhaustive = (1..=exhaustive_n)
            .map(|n| (n, labeled_tree_count(n)))
            .collect();
        let sampled = sampled_orders
            .flat_map(|n| sampled_trees(n, samples, seed))
            .collect();
        TreeSet {
            exhaustive,
            sampled,
        }
    }

    pub fn len(&self) -> u64 {
        self.exhaustive.iter().map(|&(_, c)| c).sum::<u64>() + self.sampled.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, mut index: u64) -> Tree {
        for &(n, count) in &self.exhaustive {
            if index < count {
                return labeled_tree_by_index(n, index);
            }
            index -= count;
        }
        self.sampled[index as usize].clone()
    }

    pub fn run(&self, suite: &str, check: impl Fn(&Tree, &mut Recorder) + Sync) -> SuiteReport {
        run_indexed(suite, self.len(), |i, rec| check(&self.get(i), rec))
    }
}

fn edges_text(f: &Forest) -> String {
    let s = f.serialize();
    s.trim_end().replace('\n', "; ")
}

fn pattern_of(x: &[Rational]) -> Vec<bool> {
    x.iter().map(|v| !v.is_zero()).collect()
}

/// Nullity equals vertices minus twice the matching number.
pub fn check_matching_nullity(t: &Tree, rec: &mut Recorder) {
    let a = adjacency_matrix(t);
    let nullity = eigenspace_dim(&a, &Rational::zero());
    let nu = matching_number(t);
    rec.check(
        "nullity_is_unmatched_count",
        nullity + 2 * nu == t.len(),
        || {
            format!(
                "[{}]: nullity {nullity}, matching number {nu}",
                edges_text(t)
            )
        },
    );
}

/// The alternating-path basis is a {0, 1, -1} null space basis whose common
/// zeros are exactly the vertices every maximum matching covers.
pub fn check_kernel_basis(t: &Tree, rec: &mut Recorder) {
    let a = adjacency_matrix(t);
    let exact = eigenspace_basis(&a, &Rational::zero());
    let class = classify_vertices(t);
    let basis = kernel_basis_with(t, &class);
    let vectors: Vec<Vec<Rational>> = basis.iter().map(|x| x.to_rationals()).collect();
    let all_null = basis.iter().all(|x| is_null_vector(t, x))
        && vectors
            .iter()
            .all(|x| verify_eigenvector(&a, &Rational::zero(), x).unwrap_or(false));
    rec.check("vectors_in_null_space", all_null, || edges_text(t));
    rec.check(
        "rank_equals_nullity",
        basis.len() == exact.dim() && Matrix::rank_of_vectors(&vectors) == exact.dim(),
        || {
            format!(
                "[{}]: {} vectors, nullity {}",
                edges_text(t),
                basis.len(),
                exact.dim()
            )
        },
    );
    let support = exact.support_mask(t.len());
    let always_zero: Vec<usize> = (0..t.len()).filter(|&v| !support[v]).collect();
    rec.check(
        "always_zero_is_never_missed",
        always_zero == class.never_missed_set(),
        || {
            format!(
                "[{}]: always zero {:?}, never missed {:?}",
                edges_text(t),
                always_zero,
                class.never_missed_set()
            )
        },
    );
}

/// Integer eigenvalues worth trying on `t`.
pub fn integer_eigenvalues(t: &Forest) -> Vec<(Rational, usize)> {
    let a = adjacency_matrix(t);
    let d = t.max_degree() as i64;
    (-d..=d)
        .filter_map(|k| {
            let dim = eigenspace_dim(&a, &int(k));
            (dim > 0).then(|| (int(k), dim))
        })
        .collect()
}

/// Skeleton multiplicity, structure and fixed point for every integer
/// eigenvalue. Adjacent boundary vertices are counted as an observation.
pub fn check_skeleton(t: &Tree, rec: &mut Recorder) {
    let a = adjacency_matrix(t);
    for (lambda, dim) in integer_eigenvalues(t) {
        let ctx = || format!("[{}] at {lambda}", edges_text(t));
        let Some(d) = rec.ok("decomposition", Decomposition::new(&a, &lambda), ctx) else {
            continue;
        };
        let via = d.multiplicity_via_matching();
        rec.check("multiplicity_via_matching", via == dim, || {
            format!("{}: {via} vs {dim}", ctx())
        });
        rec.check(
            "components_at_least_multiplicity",
            d.support.eigen_components.len() >= dim,
            ctx,
        );
        let violations = d.skeleton.violations();
        let has = |pred: &dyn Fn(&SkeletonViolation) -> bool| violations.iter().any(pred);
        rec.check(
            "leaves_contracted",
            !has(&|v| matches!(v, SkeletonViolation::BoundaryLeaf(_))),
            ctx,
        );
        rec.check(
            "boundary_between_two_components",
            !has(&|v| matches!(v, SkeletonViolation::ThinBoundary(_))),
            ctx,
        );
        rec.check(
            "no_contracted_contracted_edge",
            !has(&|v| matches!(v, SkeletonViolation::ContractedEdge(..))),
            ctx,
        );
        rec.check(
            "no_forced_edge",
            !has(&|v| matches!(v, SkeletonViolation::ForcedEdge(..))),
            ctx,
        );
        rec.check(
            "missable_iff_contracted",
            !has(&|v| matches!(v, SkeletonViolation::MatchingSplit(_))),
            ctx,
        );
        rec.observe(
            "boundary_boundary_edge",
            has(&|v| matches!(v, SkeletonViolation::BoundaryEdge(..))),
            ctx,
        );
        rec.check(
            "zero_skeleton_fixed_point",
            is_zero_skeleton_fixed_point(&d.skeleton),
            ctx,
        );
        if let Some(meta) = rec.ok("meta_skeleton", d.meta_skeleton(), ctx) {
            let spec = MetaSkeletonSpec {
                tree: Tree::new(meta.tree.clone()).expect("contraction of a tree"),
                non_eigen: meta.non_eigen.clone(),
                lambda: lambda.clone(),
            };
            let bad = validate_meta_skeleton(&spec);
            rec.check("meta_skeleton_admissible", bad.is_empty(), || {
                let text: Vec<String> = bad.iter().map(|v| v.describe(&spec.tree)).collect();
                format!("{}: {}", ctx(), text.join("; "))
            });
        }
        check_x_skeletons(t, &a, &lambda, &d, rec);
    }
}

/// Components of each basis vector's own skeleton are components of the
/// eigenvalue's skeleton, and its skeleton null vectors extend by zeros.
fn check_x_skeletons(
    t: &Tree,
    a: &TreePatternMatrix,
    lambda: &Rational,
    d: &Decomposition,
    rec: &mut Recorder,
) {
    let ctx = || format!("[{}] at {lambda}", edges_text(t));
    let mut components: Vec<Vec<usize>> = d.support.eigen_components.clone();
    components.sort();
    for x in eigenspace_basis(a, lambda).vectors {
        let own: Vec<Vec<usize>> = t.component_sets_within(&pattern_of(&x));
        rec.check(
            "vector_components_are_components",
            own.iter().all(|c| components.binary_search(c).is_ok()),
            ctx,
        );
        let Ok(sk) = crate::skeleton::x_skeleton(a, &x, lambda) else {
            rec.check("x_skeleton", false, ctx);
            continue;
        };
        let inner = TreePatternMatrix::adjacency(&sk.forest);
        for s in eigenspace_basis(&inner, &Rational::zero()).vectors {
            // Embed: each x-skeleton vertex maps to the skeleton vertex
            // holding its first original member.
            let mut full = vec![Rational::zero(); d.skeleton.len()];
            for (i, kind) in sk.kinds.iter().enumerate() {
                let target = d
                    .skeleton
                    .image(kind.members()[0])
                    .expect("x-skeleton vertices are skeleton vertices");
                full[target] = s[i].clone();
            }
            rec.check(
                "x_skeleton_vector_extends",
                skeleton_null(&d.skeleton.forest, &full),
                ctx,
            );
        }
    }
}

/// Projection and lifting agree on zero patterns per component and produce
/// verified vectors; a straight basis projects to an independent set.
pub fn check_transfer(t: &Tree, rec: &mut Recorder) {
    let a = adjacency_matrix(t);
    for (lambda, _) in integer_eigenvalues(t) {
        let ctx = || format!("[{}] at {lambda}", edges_text(t));
        let Ok(d) = Decomposition::new(&a, &lambda) else {
            rec.check("decomposition", false, ctx);
            continue;
        };
        let sk = &d.skeleton;
        let active = |x: &[Rational]| -> Vec<bool> {
            sk.kinds
                .iter()
                .map(|k| k.is_contracted() && !x[k.members()[0]].is_zero())
                .collect()
        };
        let basis = eigenspace_basis(&a, &lambda);
        for b in &basis.vectors {
            let Some(s) = rec.ok("project", d.project(b), ctx) else {
                continue;
            };
            rec.check("projection_pattern", pattern_of(&s) == active(b), ctx);
            if let Some(x) = rec.ok("lift_projection", d.lift(&s), ctx) {
                rec.check("round_trip_pattern", pattern_of(&x) == pattern_of(b), ctx);
            }
        }
        let inner = TreePatternMatrix::adjacency(&sk.forest);
        for s in eigenspace_basis(&inner, &Rational::zero()).vectors {
            let Some(x) = rec.ok("lift", d.lift(&s), ctx) else {
                continue;
            };
            rec.check("lift_pattern", active(&x) == pattern_of(&s), ctx);
            if let Some(back) = rec.ok("project_lift", d.project(&x), ctx) {
                rec.check(
                    "reverse_round_trip_pattern",
                    pattern_of(&back) == pattern_of(&s),
                    ctx,
                );
            }
        }
        if let Some(straight) = rec.ok("straighten", straighten_basis(&a, &basis), ctx) {
            let projected: Option<Vec<Vec<Rational>>> =
                straight.vectors.iter().map(|b| d.project(b).ok()).collect();
            rec.check(
                "straight_basis_projects_independent",
                projected.is_some_and(|p| Matrix::rank_of_vectors(&p) == basis.dim()),
                ctx,
            );
        }
    }
}

/// Gadget reduction against the exhaustive sign search.
pub fn check_class_c(t: &Tree, rec: &mut Recorder) {
    let r = is_class_c(t);
    let oracle = oracle::sign_eigenvector(t, 1).is_some();
    let ctx = || edges_text(t);
    rec.check("agrees_with_sign_search", r.member == oracle, || {
        format!("[{}]: reduction {}, search {}", ctx(), r.member, oracle)
    });
    if !r.member {
        return;
    }
    rec.check("order_is_2_mod_4", t.len() % 4 == 2, ctx);
    let a = adjacency_matrix(t);
    rec.check(
        "multiplicity_one",
        eigenspace_dim(&a, &Rational::one()) == 1,
        ctx,
    );
    let cert = r.certificate.as_ref().expect("members carry a certificate");
    let ok = !cert.entries().contains(&0)
        && verify_eigenvector(&a, &Rational::one(), &cert.to_rationals()).unwrap_or(false);
    rec.check("certificate_verifies", ok, ctx);
    let trace = r.trace.as_ref().expect("members carry a trace");
    let rebuilt = Forest::from_parts(t.labels().to_vec(), trace.replay_edges());
    rec.check(
        "trace_rebuilds_tree",
        rebuilt.as_ref().ok() == Some(t.as_forest()),
        ctx,
    );
}

/// {0, 1, -1} bases for eigenvalue 1 exist exactly when every component of
/// the support has a sign eigenvector, decided here by exhaustive search.
pub fn check_simply_structured(t: &Tree, rec: &mut Recorder) {
    let a = adjacency_matrix(t);
    let one = Rational::one();
    let exact = eigenspace_basis(&a, &one);
    if exact.dim() == 0 {
        return;
    }
    let ctx = || edges_text(t);
    let support = exact.support_mask(t.len());
    let expected = t
        .component_sets_within(&support)
        .iter()
        .all(|c| oracle::sign_eigenvector(&t.induced(c), 1).is_some());
    let Some(has) = rec.ok("has_basis", has_simply_structured_basis(t, 1), ctx) else {
        return;
    };
    rec.check("agrees_with_component_criterion", has == expected, || {
        format!("[{}]: construction {has}, criterion {expected}", ctx())
    });
    if !has {
        return;
    }
    let Some(basis) = rec.ok("basis_one", simply_structured_basis(t, 1), ctx) else {
        return;
    };
    let vectors: Vec<Vec<Rational>> = basis.iter().map(|x| x.to_rationals()).collect();
    let ok = vectors
        .iter()
        .all(|x| verify_eigenvector(&a, &one, x).unwrap_or(false))
        && vectors.len() == exact.dim()
        && Matrix::rank_of_vectors(&vectors) == exact.dim();
    rec.check("basis_verifies", ok, ctx);
    if let Some(minus) = rec.ok("basis_minus_one", simply_structured_basis(t, -1), ctx) {
        let flipped = basis
            .iter()
            .map(|x| bipartition_flip(t, x))
            .collect::<Vec<_>>();
        let ok = minus == flipped
            && minus
                .iter()
                .all(|x| verify_eigenvector(&a, &int(-1), &x.to_rationals()).unwrap_or(false));
        rec.check("flipped_basis_verifies", ok, ctx);
    }
}

/// Composition instance generator: meta skeletons assembled from skeleton
/// components of random trees, joined through non-eigenvalue vertices.
pub struct CompositionGenerator {
    pub ingredients: Vec<Ingredients>,
    pub seed: u64,
}

/// Stream offsets for the seeded generators, so suites draw independent
/// sequences from one seed.
const COMPOSITION_STREAM: u64 = 1 << 20;
const PATTERN_STREAM: u64 = 2 << 20;

/// Largest replacement tree in generated compositions.
pub const COMPOSITION_INGREDIENT_ORDER: usize = 6;

impl CompositionGenerator {
    pub fn new(lambdas: &[i64], seed: u64) -> Result<Self> {
        let ingredients = lambdas
            .iter()
            .map(|&l| generate_ingredients(&int(l), COMPOSITION_INGREDIENT_ORDER, seed))
            .collect::<Result<Vec<_>>>()?;
        Ok(CompositionGenerator { ingredients, seed })
    }

    /// A skeleton component, with at least one never-missed vertex when
    /// `needs_boundary`.
    fn component<R: Rng>(rng: &mut R, needs_boundary: bool) -> Forest {
        loop {
            let n = rng.random_range(2..=9);
            let t = random_tree(n, rng);
            let a = adjacency_matrix(&t);
            let Ok(d) = Decomposition::new(&a, &Rational::zero()) else {
                continue;
            };
            let f = &d.skeleton.forest;
            let comps = f.component_sets();
            let c = &comps[rng.random_range(0..comps.len())];
            let piece = f.induced(c);
            if !needs_boundary || !classify_vertices(&piece).never_missed_set().is_empty() {
                return piece;
            }
        }
    }

    pub fn instance(&self, index: u64) -> (MetaSkeletonSpec, BlowupPlan) {
        let mut rng = rng_for(self.seed, COMPOSITION_STREAM + index);
        let parts = rng.random_range(1..=3);
        let comps: Vec<Forest> = (0..parts)
            .map(|_| Self::component(&mut rng, parts > 1))
            .collect();
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut never_missed: Vec<Vec<usize>> = Vec::new();
        for c in &comps {
            let base = labels.len();
            labels.extend((0..c.len()).map(|i| format!("s{}", base + i)));
            edges.extend(c.edges().iter().map(|&(u, v)| (base + u, base + v)));
            never_missed.push(
                classify_vertices(c)
                    .never_missed_set()
                    .into_iter()
                    .map(|v| base + v)
                    .collect(),
            );
        }
        let mut non_eigen = Vec::new();
        let mut add_x =
            |labels: &mut Vec<String>, edges: &mut Vec<(usize, usize)>, targets: Vec<usize>| {
                let x = labels.len();
                labels.push(format!("x{}", non_eigen.len()));
                non_eigen.push(x);
                edges.extend(targets.into_iter().map(|t| (x, t)));
            };
        for i in 1..parts {
            let j = rng.random_range(0..i);
            let a = *never_missed[i].choose(&mut rng).unwrap();
            let b = *never_missed[j].choose(&mut rng).unwrap();
            add_x(&mut labels, &mut edges, vec![a, b]);
        }
        let all_never: Vec<usize> = never_missed.concat();
        for _ in 0..rng.random_range(0..=2) {
            if let Some(&v) = all_never.choose(&mut rng) {
                add_x(&mut labels, &mut edges, vec![v]);
            }
        }
        let ids = labels
            .into_iter()
            .map(|l| VertexId::new(l).unwrap())
            .collect();
        let tree = Tree::new(Forest::from_parts(ids, edges).unwrap()).unwrap();
        let which = rng.random_range(0..self.ingredients.len());
        let ing = &self.ingredients[which];
        let spec = MetaSkeletonSpec {
            tree,
            non_eigen,
            lambda: ing.lambda.clone(),
        };
        let missable = spec.missable();
        let mut is_x = vec![false; spec.tree.len()];
        for &x in &spec.non_eigen {
            is_x[x] = true;
        }
        let replacements = (0..spec.tree.len())
            .map(|v| {
                let pool = if is_x[v] {
                    &ing.without_eigenvalue
                } else if missable[v] {
                    &ing.zero_free
                } else {
                    return Replacement::single();
                };
                let t = pool.choose(&mut rng).expect("ingredients exist").clone();
                let attachment = rng.random_range(0..t.len());
                Replacement {
                    tree: t,
                    attachment,
                }
            })
            .collect();
        (spec, BlowupPlan { replacements })
    }
}

fn meta_colors(d: &Decomposition, meta: &crate::skeleton::MetaSkeleton) -> Vec<u8> {
    (0..meta.tree.len())
        .map(|s| {
            if meta.non_eigen.binary_search(&s).is_ok() {
                2
            } else {
                u8::from(d.support.in_support[meta.members[s][0]])
            }
        })
        .collect()
}

/// Blow-ups have the predicted multiplicity and give back their skeleton
/// and meta skeleton.
pub fn check_composition(spec: &MetaSkeletonSpec, plan: &BlowupPlan, rec: &mut Recorder) {
    let ctx = || {
        format!(
            "[{}] X={:?} at {}",
            edges_text(&spec.tree),
            spec.non_eigen,
            spec.lambda
        )
    };
    let bad = validate_meta_skeleton(spec);
    rec.check("spec_valid", bad.is_empty(), ctx);
    let Some(b) = rec.ok("blow_up", blow_up(spec, plan), ctx) else {
        return;
    };
    let a = adjacency_matrix(&b.tree);
    let dim = eigenspace_dim(&a, &spec.lambda);
    rec.check(
        "multiplicity_as_predicted",
        dim == b.predicted_multiplicity,
        || format!("{}: {dim} vs {}", ctx(), b.predicted_multiplicity),
    );
    let Some(d) = rec.ok("decomposition", Decomposition::new(&a, &spec.lambda), ctx) else {
        return;
    };
    rec.check(
        "skeleton_recovered",
        d.skeleton.canonical_form() == spec.expected_skeleton_form(),
        ctx,
    );
    if let Some(meta) = rec.ok("meta_skeleton", d.meta_skeleton(), ctx) {
        let form = meta.tree.canonical_form(&meta_colors(&d, &meta));
        rec.check(
            "meta_skeleton_recovered",
            form == spec.expected_meta_form(),
            ctx,
        );
    }
}

pub fn run_composition(count: u64, seed: u64) -> Result<SuiteReport> {
    let generator = CompositionGenerator::new(&[0, 1, 2], seed)?;
    Ok(run_indexed("composition", count, |i, rec| {
        let (spec, plan) = generator.instance(i);
        check_composition(&spec, &plan, rec);
    }))
}

/// Largest order of generated pattern matrices.
pub const MAX_PATTERN_ORDER: usize = 10;

pub fn pattern_instance(seed: u64, index: u64) -> TreePatternMatrix {
    let mut rng = rng_for(seed, PATTERN_STREAM + index);
    let n = rng.random_range(1..=MAX_PATTERN_ORDER);
    let t = random_tree(n, &mut rng);
    let zero_diagonal = rng.random_bool(0.5);
    random_pattern_matrix(&t, zero_diagonal, &mut rng)
}

/// Nullity formula, skeleton matching count, zero-diagonal support and
/// branch rescaling on a weighted tree pattern matrix.
pub fn check_pattern(m: &TreePatternMatrix, rec: &mut Recorder) {
    let ctx = || m.to_json();
    let mut lambdas = vec![Rational::zero()];
    lambdas.extend(
        (-4..=4)
            .filter(|&k| k != 0)
            .map(int)
            .filter(|l| oracle::nullity(m, l) > 0),
    );
    for lambda in &lambdas {
        let exact = oracle::nullity(m, lambda);
        rec.check(
            "elimination_agrees",
            eigenspace_dim(m, lambda) == exact,
            ctx,
        );
        let ctx = || format!("{} at {lambda}", m.to_json());
        if let Some(k) = rec.ok("nylen", nylen_nullity(m, lambda), ctx) {
            rec.check("nylen_equals_nullity", k == exact, || {
                format!("{}: {k} vs {exact}", ctx())
            });
        }
        if let Some(k) = rec.ok("skeleton", nullity_via_skeleton(m, lambda), ctx) {
            rec.check("skeleton_matching_equals_nullity", k == exact, || {
                format!("{}: {k} vs {exact}", ctx())
            });
        }
    }
    if !m.has_zero_diagonal() {
        return;
    }
    let a = TreePatternMatrix::adjacency(m.pattern());
    let zero = Rational::zero();
    rec.check(
        "support_matches_adjacency",
        pattern_support(m, &zero).support == pattern_support(&a, &zero).support,
        ctx,
    );
    let basis = eigenspace_basis(&a, &zero);
    let mut moved = Vec::new();
    for v in &basis.vectors {
        if let Some(y) = rec.ok("transfer", transfer_null_pattern(m, v), ctx) {
            rec.check(
                "transfer_keeps_pattern",
                pattern_of(&y) == pattern_of(v),
                ctx,
            );
            moved.push(y);
        }
    }
    if let Ok(straight) = straighten_basis(&a, &basis) {
        let out: Option<Vec<Vec<Rational>>> = straight
            .vectors
            .iter()
            .map(|v| transfer_null_pattern(m, v).ok())
            .collect();
        rec.check(
            "straight_set_stays_independent",
            out.is_some_and(|o| Matrix::rank_of_vectors(&o) == basis.dim()),
            ctx,
        );
    }
}

pub fn run_pattern(count: u64, seed: u64) -> SuiteReport {
    run_indexed("tree_pattern", count, |i, rec| {
        check_pattern(&pattern_instance(seed, i), rec)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Every labeled tree up to this order.
    pub exhaustive_n: usize,
    /// Random trees per order above `exhaustive_n`, up to [`MAX_SAMPLED_ORDER`].
    pub samples: usize,
    pub seed: u64,
    /// Largest order for the class membership and {0, 1, -1} basis suites,
    /// whose oracles are exponential.
    pub sign_search_order: usize,
    pub compositions: u64,
    pub pattern_matrices: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_n: 7,
            samples: 100,
            seed: 0,
            sign_search_order: 10,
            compositions: 100,
            pattern_matrices: 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

pub fn run_all(config: &VerifyConfig) -> Result<VerifyReport> {
    let trees = TreeSet::new(
        config.exhaustive_n,
        config.exhaustive_n + 1..=MAX_SAMPLED_ORDER,
        config.samples,
        config.seed,
    );
    let signs = TreeSet::new(
        config.exhaustive_n.min(config.sign_search_order),
        config.exhaustive_n + 1..=config.sign_search_order,
        config.samples,
        config.seed,
    );
    let suites = vec![
        trees.run("matching_nullity", check_matching_nullity),
        trees.run("kernel_basis", check_kernel_basis),
        trees.run("skeleton", check_skeleton),
        trees.run("transfer", check_transfer),
        signs.run("class_c", check_class_c),
        signs.run("simply_structured", check_simply_structured),
        run_composition(config.compositions, config.seed)?,
        run_pattern(config.pattern_matrices, config.seed),
    ];
    Ok(VerifyReport {
        passed: suites.iter().all(SuiteReport::passed),
        suites,
    })
}
