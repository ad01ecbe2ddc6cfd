//! Building trees with a prescribed eigenvalue multiplicity by blowing up
//! the vertices of a meta skeleton.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Deserialize;

use crate::enumerate::{all_labeled_trees, labeled_tree_count, sampled_trees};
use crate::error::{Error, Result};
use crate::graph::{Forest, Tree, VertexId};
use crate::linalg::{adjacency_matrix, eigenspace_basis, eigenspace_dim};
use crate::matching::{classify_vertices, matching_number};
use crate::rational::{format_rational, parse_rational, Rational};

/// Largest tree order [`generate_ingredients`] accepts.
pub const MAX_INGREDIENT_ORDER: usize = 10;
/// Orders up to this are enumerated exhaustively; larger ones are sampled.
pub const EXHAUSTIVE_INGREDIENT_ORDER: usize = 7;
/// Trees sampled per order above [`EXHAUSTIVE_INGREDIENT_ORDER`].
pub const SAMPLED_INGREDIENTS_PER_ORDER: usize = 2000;

/// A meta skeleton `S'` with its non-eigenvalue set `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaSkeletonSpec {
    pub tree: Tree,
    /// Indices into `tree`, sorted.
    pub non_eigen: Vec<usize>,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    /// Two vertices of `X` are adjacent.
    AdjacentNonEigen(usize, usize),
    /// Every vertex is in `X`.
    EmptySkeleton,
    /// A component of `S' \ X` has a perfect matching.
    PerfectMatching(Vec<usize>),
    /// A vertex that some maximum matching of its component misses is
    /// adjacent to the `X` vertex.
    MissableNextToNonEigen { vertex: usize, non_eigen: usize },
    /// An edge of `S' \ X` lies in every maximum matching.
    ForcedEdge(usize, usize),
}

impl SpecViolation {
    pub fn describe(&self, tree: &Forest) -> String {
        let l = |v: &usize| tree.label(*v).to_string();
        match self {
            SpecViolation::AdjacentNonEigen(a, b) => {
                format!("non-eigenvalue vertices {} and {} are adjacent", l(a), l(b))
            }
            SpecViolation::EmptySkeleton => "every vertex is a non-eigenvalue vertex".into(),
            SpecViolation::PerfectMatching(c) => format!(
                "component {{{}}} has a perfect matching",
                c.iter().map(l).collect::<Vec<_>>().join(", ")
            ),
            SpecViolation::MissableNextToNonEigen { vertex, non_eigen } => format!(
                "{} is adjacent to non-eigenvalue vertex {} but can be missed by a maximum matching",
                l(vertex),
                l(non_eigen)
            ),
            SpecViolation::ForcedEdge(a, b) => {
                format!("edge {} {} lies in every maximum matching", l(a), l(b))
            }
        }
    }
}

impl MetaSkeletonSpec {
    pub fn new(tree: Tree, non_eigen: &[VertexId], lambda: Rational) -> Result<Self> {
        let mut idx = non_eigen
            .iter()
            .map(|v| tree.require_index(v.as_str()))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(MetaSkeletonSpec {
            tree,
            non_eigen: idx,
            lambda,
        })
    }

    fn in_x(&self) -> Vec<bool> {
        let mut mask = vec![false; self.tree.len()];
        for &x in &self.non_eigen {
            mask[x] = true;
        }
        mask
    }

    /// Indices of `S' \ X` in order.
    pub fn skeleton_vertices(&self) -> Vec<usize> {
        let in_x = self.in_x();
        (0..self.tree.len()).filter(|&v| !in_x[v]).collect()
    }

    /// `S' \ X` and, per original vertex, its index there.
    pub fn skeleton_forest(&self) -> (Forest, Vec<usize>) {
        (
            self.tree.induced(&self.skeleton_vertices()),
            self.skeleton_vertices(),
        )
    }

    /// Per vertex of `S'`: may some maximum matching of `S' \ X` miss it?
    /// Always false on `X`.
    pub fn missable(&self) -> Vec<bool> {
        let (f, keep) = self.skeleton_forest();
        let class = classify_vertices(&f);
        let mut out = vec![false; self.tree.len()];
        for (i, &v) in keep.iter().enumerate() {
            out[v] = class.may_miss(i);
        }
        out
    }

    /// Vertices of `S' \ X` minus twice its matching number.
    pub fn predicted_multiplicity(&self) -> usize {
        let (f, _) = self.skeleton_forest();
        f.len() - 2 * matching_number(&f)
    }

    /// Canonical form of `S' \ X` colored 1 on missable, 0 on never-missed
    /// vertices: what the skeleton of a blow-up must look like.
    pub fn expected_skeleton_form(&self) -> String {
        let (f, keep) = self.skeleton_forest();
        let missable = self.missable();
        let colors: Vec<u8> = keep.iter().map(|&v| u8::from(missable[v])).collect();
        f.canonical_form(&colors)
    }

    /// Canonical form of `S'` colored 1 on missable, 2 on `X`, 0 elsewhere.
    pub fn expected_meta_form(&self) -> String {
        let missable = self.missable();
        let in_x = self.in_x();
        let colors: Vec<u8> = (0..self.tree.len())
            .map(|v| if in_x[v] { 2 } else { u8::from(missable[v]) })
            .collect();
        self.tree.canonical_form(&colors)
    }
}

/// Checks the four admissibility conditions; an empty result means valid.
pub fn validate_meta_skeleton(spec: &MetaSkeletonSpec) -> Vec<SpecViolation> {
    let t = &spec.tree;
    let in_x = spec.in_x();
    let mut out = Vec::new();
    for &(u, v) in t.edges() {
        if in_x[u] && in_x[v] {
            out.push(SpecViolation::AdjacentNonEigen(u, v));
        }
    }
    let (f, keep) = spec.skeleton_forest();
    if f.is_empty() {
        out.push(SpecViolation::EmptySkeleton);
        return out;
    }
    let class = classify_vertices(&f);
    for comp in f.component_sets() {
        let sub = f.induced(&comp);
        if 2 * matching_number(&sub) == sub.len() {
            out.push(SpecViolation::PerfectMatching(
                comp.iter().map(|&i| keep[i]).collect(),
            ));
        }
    }
    // Maximum matchings of a forest are unions over its components, so the
    // forest-wide classification is the per-component one.
    for (i, &v) in keep.iter().enumerate() {
        if !class.may_miss(i) {
            continue;
        }
        for &x in t.neighbors(v) {
            if in_x[x] {
                out.push(SpecViolation::MissableNextToNonEigen {
                    vertex: v,
                    non_eigen: x,
                });
            }
        }
    }
    out.extend(
        class
            .forced_edges
            .iter()
            .map(|&(a, b)| SpecViolation::ForcedEdge(keep[a], keep[b])),
    );
    out
}

/// A replacement tree and the vertex of it that inherits the edges of the
/// replaced meta skeleton vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    pub tree: Tree,
    pub attachment: usize,
}

impl Replacement {
    /// Attaches at the lowest-ordered vertex.
    pub fn new(tree: Tree) -> Self {
        Replacement {
            tree,
            attachment: 0,
        }
    }

    pub fn with_attachment(tree: Tree, attachment: &str) -> Result<Self> {
        let attachment = tree.require_index(attachment)?;
        Ok(Replacement { tree, attachment })
    }

    pub fn single() -> Self {
        Replacement::new(Tree::singleton("v").expect("valid label"))
    }
}

/// One replacement per vertex of `S'`, indexed like it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupPlan {
    pub replacements: Vec<Replacement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanViolation {
    WrongLength {
        expected: usize,
        actual: usize,
    },
    /// An `X` vertex replaced by a tree with the eigenvalue.
    HasEigenvalue(usize),
    /// A missable vertex replaced by a tree without a zero-free eigenvector.
    NoZeroFreeEigenvector(usize),
    /// A never-missed vertex replaced by something other than a single vertex.
    NotSingleVertex(usize),
    AttachmentOutOfRange(usize),
}

impl PlanViolation {
    pub fn describe(&self, tree: &Forest) -> String {
        let l = |v: &usize| tree.label(*v).to_string();
        match self {
            PlanViolation::WrongLength { expected, actual } => {
                format!("plan has {actual} replacements for {expected} vertices")
            }
            PlanViolation::HasEigenvalue(v) => {
                format!(
                    "replacement for non-eigenvalue vertex {} has the eigenvalue",
                    l(v)
                )
            }
            PlanViolation::NoZeroFreeEigenvector(v) => format!(
                "replacement for {} lacks a single eigenvector without zero entries",
                l(v)
            ),
            PlanViolation::NotSingleVertex(v) => {
                format!(
                    "never-missed vertex {} must be replaced by a single vertex",
                    l(v)
                )
            }
            PlanViolation::AttachmentOutOfRange(v) => {
                format!("attachment vertex for {} is not in its replacement", l(v))
            }
        }
    }
}

/// Eigenspace of the tree for `lambda` is one-dimensional and spanned by a
/// vector without zero entries.
pub fn has_zero_free_eigenvector(t: &Forest, lambda: &Rational) -> bool {
    let b = eigenspace_basis(&adjacency_matrix(t), lambda);
    b.dim() == 1 && b.vectors[0].iter().all(|x| !x.is_zero())
}

pub fn lacks_eigenvalue(t: &Forest, lambda: &Rational) -> bool {
    eigenspace_dim(&adjacency_matrix(t), lambda) == 0
}

pub fn check_plan(spec: &MetaSkeletonSpec, plan: &BlowupPlan) -> Vec<PlanViolation> {
    let n = spec.tree.len();
    if plan.replacements.len() != n {
        return vec![PlanViolation::WrongLength {
            expected: n,
            actual: plan.replacements.len(),
        }];
    }
    let in_x = spec.in_x();
    let missable = spec.missable();
    let mut out = Vec::new();
    for (v, r) in plan.replacements.iter().enumerate() {
        if r.attachment >= r.tree.len() {
            out.push(PlanViolation::AttachmentOutOfRange(v));
        }
        if in_x[v] {
            if !lacks_eigenvalue(&r.tree, &spec.lambda) {
                out.push(PlanViolation::HasEigenvalue(v));
            }
        } else if missable[v] {
            if !has_zero_free_eigenvector(&r.tree, &spec.lambda) {
                out.push(PlanViolation::NoZeroFreeEigenvector(v));
            }
        } else if r.tree.len() != 1 {
            out.push(PlanViolation::NotSingleVertex(v));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blowup {
    pub tree: Tree,
    pub predicted_multiplicity: usize,
    /// Per vertex of `tree`, the meta skeleton vertex it replaces.
    pub origin: Vec<usize>,
}

/// Substitutes every vertex of `S'` by its replacement; edges of `S'` join
/// the attachment vertices. Single-vertex replacements keep the meta
/// skeleton label, others are labeled `<meta>.<inner>`.
pub fn blow_up(spec: &MetaSkeletonSpec, plan: &BlowupPlan) -> Result<Blowup> {
    let violations = validate_meta_skeleton(spec);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(|v| v.describe(&spec.tree)).collect();
        return Err(Error::Precondition(format!(
            "invalid meta skeleton: {}",
            text.join("; ")
        )));
    }
    blow_up_unchecked(spec, plan)
}

/// Like [`blow_up`] without the admissibility check on `S'`; the plan is
/// still checked. Used to build negative controls.
pub fn blow_up_unchecked(spec: &MetaSkeletonSpec, plan: &BlowupPlan) -> Result<Blowup> {
    let violations = check_plan(spec, plan);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(|v| v.describe(&spec.tree)).collect();
        return Err(Error::Precondition(format!(
            "invalid blow-up plan: {}",
            text.join("; ")
        )));
    }
    let meta = &spec.tree;
    let mut labels = Vec::new();
    let mut origin = Vec::new();
    let mut offset = Vec::with_capacity(meta.len());
    let mut edges = Vec::new();
    let mut taken = HashSet::new();
    for (v, r) in plan.replacements.iter().enumerate() {
        offset.push(labels.len());
        for inner in r.tree.labels() {
            let mut label = if r.tree.len() == 1 {
                meta.label(v).to_string()
            } else {
                format!("{}.{}", meta.label(v), inner)
            };
            while !taken.insert(label.clone()) {
                label.push('\'');
            }
            labels.push(VertexId::new(label)?);
            origin.push(v);
        }
        let base = offset[v];
        edges.extend(r.tree.edges().iter().map(|&(a, b)| (base + a, base + b)));
    }
    let attach = |v: usize| offset[v] + plan.replacements[v].attachment;
    edges.extend(meta.edges().iter().map(|&(a, b)| (attach(a), attach(b))));
    let tree = Tree::new(Forest::from_parts(labels, edges)?)?;
    Ok(Blowup {
        tree,
        predicted_multiplicity: spec.predicted_multiplicity(),
        origin,
    })
}

/// Trees sorted by order, then canonical form, one per isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ingredients {
    pub lambda: Rational,
    pub without_eigenvalue: Vec<Tree>,
    pub zero_free: Vec<Tree>,
}

impl Ingredients {
    pub fn smallest_without(&self) -> Option<&Tree> {
        self.without_eigenvalue.first()
    }

    pub fn smallest_zero_free(&self) -> Option<&Tree> {
        self.zero_free.first()
    }
}

enum Kind {
    Without,
    ZeroFree,
    Neither,
}

fn classify(t: &Tree, lambda: &Rational) -> Kind {
    let b = eigenspace_basis(&adjacency_matrix(t), lambda);
    match b.dim() {
        0 => Kind::Without,
        1 if b.vectors[0].iter().all(|x| !x.is_zero()) => Kind::ZeroFree,
        _ => Kind::Neither,
    }
}

/// Searches trees on 1..=`n_max` vertices: every labeled tree up to
/// [`EXHAUSTIVE_INGREDIENT_ORDER`] vertices, seeded samples above. Keeps
/// one tree per isomorphism class, the first in generation order.
pub fn generate_ingredients(lambda: &Rational, n_max: usize, seed: u64) -> Result<Ingredients> {
    if n_max > MAX_INGREDIENT_ORDER {
        return Err(Error::Precondition(format!(
            "ingredient search is limited to {MAX_INGREDIENT_ORDER} vertices, got {n_max}"
        )));
    }
    let mut without = BTreeMap::new();
    let mut zero_free = BTreeMap::new();
    for n in 1..=n_max {
        let trees: Vec<Tree> = if n <= EXHAUSTIVE_INGREDIENT_ORDER {
            all_labeled_trees(n).collect()
        } else {
            sampled_trees(
                n,
                SAMPLED_INGREDIENTS_PER_ORDER.min(labeled_tree_count(n) as usize),
                seed,
            )
        };
        let classified: Vec<(String, Kind)> = trees
            .par_iter()
            .map(|t| (t.canonical_form(&vec![0; t.len()]), classify(t, lambda)))
            .collect();
        for (t, (form, kind)) in trees.into_iter().zip(classified) {
            let target = match kind {
                Kind::Without => &mut without,
                Kind::ZeroFree => &mut zero_free,
                Kind::Neither => continue,
            };
            target.entry((n, form)).or_insert(t);
        }
    }
    Ok(Ingredients {
        lambda: lambda.clone(),
        without_eigenvalue: without.into_values().collect(),
        zero_free: zero_free.into_values().collect(),
    })
}

/// Completes a partial plan: unset never-missed vertices get a single
/// vertex, unset `X` vertices the smallest tree without the eigenvalue,
/// unset missable vertices the smallest tree with a zero-free eigenvector.
pub fn complete_plan(
    spec: &MetaSkeletonSpec,
    partial: Vec<Option<Replacement>>,
    ingredients: &Ingredients,
) -> Result<BlowupPlan> {
    let in_x = spec.in_x();
    let missable = spec.missable();
    let missing = |what: &str| {
        Error::Precondition(format!(
            "no tree {what} for eigenvalue {} within the ingredient search bound",
            format_rational(&spec.lambda)
        ))
    };
    let replacements = partial
        .into_iter()
        .enumerate()
        .map(|(v, r)| match r {
            Some(r) => Ok(r),
            None if in_x[v] => ingredients
                .smallest_without()
                .cloned()
                .map(Replacement::new)
                .ok_or_else(|| missing("without the eigenvalue")),
            None if missable[v] => ingredients
                .smallest_zero_free()
                .cloned()
                .map(Replacement::new)
                .ok_or_else(|| missing("with a zero-free eigenvector")),
            None => Ok(Replacement::single()),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlowupPlan { replacements })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    lambda: String,
    tree: String,
    #[serde(default)]
    non_eigen: Vec<String>,
    #[serde(default)]
    replace: BTreeMap<String, ReplacementFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReplacementFile {
    tree: String,
    attach: Option<String>,
}

/// A parsed composition spec file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionRequest {
    pub spec: MetaSkeletonSpec,
    /// Replacements given in the file, indexed like `spec.tree`.
    pub replacements: Vec<Option<Replacement>>,
}

/// Parses a TOML composition spec:
///
/// ```toml
/// lambda = "1"
/// tree = "m c1\nm c2\nm x"
/// non_eigen = ["x"]
///
/// [replace.c1]
/// tree = "a b"
/// attach = "a"
/// ```
///
/// Trees use the edge-list format. Vertices without a `replace` entry are
/// filled in by [`complete_plan`].
pub fn parse_composition(text: &str) -> Result<CompositionRequest> {
    let file: SpecFile = toml::from_str(text).map_err(|e| {
        let line = e
            .span()
            .map(|s| text[..s.start.min(text.len())].matches('\n').count() + 1)
            .unwrap_or(0);
        Error::parse(line, e.message().to_string())
    })?;
    let lambda = parse_rational(&file.lambda)?;
    let tree = Tree::parse(&file.tree)?;
    let non_eigen = file
        .non_eigen
        .iter()
        .map(|s| VertexId::new(s.as_str()))
        .collect::<Result<Vec<_>>>()?;
    let spec = MetaSkeletonSpec::new(tree, &non_eigen, lambda)?;
    let mut replacements = vec![None; spec.tree.len()];
    for (name, r) in file.replace {
        let v = spec.tree.require_index(&name)?;
        let t = Tree::parse(&r.tree)?;
        replacements[v] = Some(match r.attach {
            Some(a) => Replacement::with_attachment(t, &a)?,
            None => Replacement::new(t),
        });
    }
    Ok(CompositionRequest { spec, replacements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn tree(text: &str) -> Tree {
        Tree::parse(text).unwrap()
    }

    fn spec(text: &str, x: &[&str], lambda: i64) -> MetaSkeletonSpec {
        let ids: Vec<VertexId> = x.iter().map(|s| VertexId::new(*s).unwrap()).collect();
        MetaSkeletonSpec::new(tree(text), &ids, int(lambda)).unwrap()
    }

    const STAR: &str = "m c1\nm c2\nm x";

    #[test]
    fn validation_examples() {
        assert!(validate_meta_skeleton(&spec(STAR, &["x"], 1)).is_empty());

        let s = spec("c1 x\nx c2", &["x"], 1);
        let v = validate_meta_skeleton(&s);
        assert!(v.contains(&SpecViolation::MissableNextToNonEigen {
            vertex: 0,
            non_eigen: 1
        }));

        let s = spec("a b\nb c\nc d", &[], 1);
        let v = validate_meta_skeleton(&s);
        assert!(v.contains(&SpecViolation::PerfectMatching(vec![0, 1, 2, 3])));
        assert!(v.contains(&SpecViolation::ForcedEdge(0, 1)));
    }

    #[test]
    fn blow_up_examples() {
        // Vertex order of STAR: m c1 c2 x.
        let s = spec(STAR, &["x"], 1);
        let k2 = || Replacement::new(tree("a b"));
        let plan = BlowupPlan {
            replacements: vec![Replacement::single(), k2(), k2(), Replacement::single()],
        };
        let b = blow_up(&s, &plan).unwrap();
        assert_eq!(b.predicted_multiplicity, 1);
        assert_eq!(b.tree.len(), 6);
        let spider = tree("m p1\np1 p2\nm q1\nq1 q2\nm s");
        assert_eq!(
            b.tree.canonical_form(&[0; 6]),
            spider.canonical_form(&[0; 6])
        );
        assert_eq!(eigenspace_dim(&adjacency_matrix(&b.tree), &int(1)), 1);

        let single = spec("c", &[], 1);
        let b = blow_up(
            &single,
            &BlowupPlan {
                replacements: vec![k2()],
            },
        )
        .unwrap();
        assert_eq!(b.tree.serialize(), "c.a c.b\n");
        assert_eq!(b.predicted_multiplicity, 1);

        let s = spec(STAR, &["x"], 0);
        let plan = BlowupPlan {
            replacements: vec![
                Replacement::single(),
                Replacement::single(),
                Replacement::single(),
                k2(),
            ],
        };
        let b = blow_up(&s, &plan).unwrap();
        assert_eq!(b.tree.len(), 5);
        assert_eq!(eigenspace_dim(&adjacency_matrix(&b.tree), &int(0)), 1);
    }

    #[test]
    fn plan_violations() {
        let s = spec(STAR, &["x"], 1);
        let plan = BlowupPlan {
            replacements: vec![
                Replacement::new(tree("a b")),
                Replacement::single(),
                Replacement::new(tree("a b")),
                Replacement::new(tree("a b")),
            ],
        };
        assert_eq!(
            check_plan(&s, &plan),
            vec![
                PlanViolation::NotSingleVertex(0),
                PlanViolation::NoZeroFreeEigenvector(1),
                PlanViolation::HasEigenvalue(3)
            ]
        );
        assert!(blow_up(&s, &plan).is_err());
    }

    #[test]
    fn ingredient_examples() {
        let forms = |ts: &[Tree]| -> Vec<usize> { ts.iter().map(|t| t.len()).collect() };
        let i = generate_ingredients(&int(1), 3, 0).unwrap();
        assert_eq!(forms(&i.without_eigenvalue), vec![1, 3]);
        assert_eq!(forms(&i.zero_free), vec![2]);

        let i = generate_ingredients(&int(0), 2, 0).unwrap();
        assert_eq!(forms(&i.without_eigenvalue), vec![2]);
        assert_eq!(forms(&i.zero_free), vec![1]);

        let i = generate_ingredients(&int(2), 4, 0).unwrap();
        let p4 = tree("a b\nb c\nc d");
        let p4_form = p4.canonical_form(&[0; 4]);
        assert!(i
            .without_eigenvalue
            .iter()
            .any(|t| t.canonical_form(&[0; 4]) == p4_form));

        assert!(generate_ingredients(&int(1), MAX_INGREDIENT_ORDER + 1, 0).is_err());
    }

    #[test]
    fn spec_file_round_trip() {
        let text = "lambda = \"1\"\ntree = \"m c1\\nm c2\\nm x\"\nnon_eigen = [\"x\"]\n\n[replace.c1]\ntree = \"a b\"\nattach = \"b\"\n";
        let req = parse_composition(text).unwrap();
        assert_eq!(req.spec.non_eigen, vec![3]);
        assert_eq!(req.replacements[1].as_ref().unwrap().attachment, 1);
        let ingredients = generate_ingredients(&int(1), 3, 0).unwrap();
        let plan = complete_plan(&req.spec, req.replacements, &ingredients).unwrap();
        assert_eq!(plan.replacements[2].tree.len(), 2);
        assert_eq!(plan.replacements[3].tree.len(), 1);
        let b = blow_up(&req.spec, &plan).unwrap();
        assert_eq!(eigenspace_dim(&adjacency_matrix(&b.tree), &int(1)), 1);

        assert!(matches!(
            parse_composition("lambda = 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_composition("lambda = \"1\"\ntree = \"a b\"\nnon_eigen = [\"q\"]"),
            Err(Error::UnknownVertex(_))
        ));
    }
}
