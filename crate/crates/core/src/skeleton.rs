//! Support sets, skeleton forests and eigenvector transfer between a tree
//! and its skeleton.
//!
//! Everything here runs on a [`TreePatternMatrix`]: the summation rule at a
//! vertex is its matrix row (weighted neighbors plus the diagonal term), and
//! the adjacency matrix is the special case with unit weights. Operations
//! that assume a tree accept forests and work component by component.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Forest, VertexId};
use crate::linalg::{eigenspace_basis, eigenspace_dim, RationalBasis, TreePatternMatrix};
use crate::matching::{classify_vertices, matching_number};
use crate::rational::{format_rational, Rational};

/// Where an eigenspace lives on the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportReport {
    pub lambda: Rational,
    /// Per vertex: does some eigenvector not vanish here?
    pub in_support: Vec<bool>,
    /// Components of the subgraph induced by the support, in discovery order.
    pub eigen_components: Vec<Vec<usize>>,
    /// Always-zero vertices adjacent to the support, sorted.
    pub boundary: Vec<usize>,
    pub multiplicity: usize,
}

impl SupportReport {
    pub fn from_basis(m: &TreePatternMatrix, basis: &RationalBasis) -> Self {
        let pattern = m.pattern();
        let in_support = basis.support_mask(m.order());
        let eigen_components = pattern.component_sets_within(&in_support);
        let boundary = boundary_of(pattern, &in_support);
        SupportReport {
            lambda: basis.lambda.clone(),
            in_support,
            eigen_components,
            boundary,
            multiplicity: basis.dim(),
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.in_support.len())
            .filter(|&v| self.in_support[v])
            .collect()
    }

    pub fn always_zero(&self) -> Vec<usize> {
        (0..self.in_support.len())
            .filter(|&v| !self.in_support[v])
            .collect()
    }

    pub fn is_eigenvalue(&self) -> bool {
        self.multiplicity > 0
    }
}

fn boundary_of(pattern: &Forest, in_support: &[bool]) -> Vec<usize> {
    (0..pattern.len())
        .filter(|&v| !in_support[v] && pattern.neighbors(v).iter().any(|&w| in_support[w]))
        .collect()
}

pub fn support_report(m: &TreePatternMatrix, lambda: &Rational) -> SupportReport {
    SupportReport::from_basis(m, &eigenspace_basis(m, lambda))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkeletonVertex {
    /// A contracted eigen-component; `ordinal` counts from one in discovery order.
    Contracted { ordinal: usize, members: Vec<usize> },
    /// An always-zero vertex adjacent to the support.
    Boundary(usize),
}

impl SkeletonVertex {
    pub fn is_contracted(&self) -> bool {
        matches!(self, SkeletonVertex::Contracted { .. })
    }

    pub fn members(&self) -> &[usize] {
        match self {
            SkeletonVertex::Contracted { members, .. } => members,
            SkeletonVertex::Boundary(v) => std::slice::from_ref(v),
        }
    }
}

/// A skeleton forest together with the provenance of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonForest {
    pub forest: Forest,
    pub kinds: Vec<SkeletonVertex>,
    /// Per original vertex, its skeleton vertex (if any).
    image: Vec<Option<usize>>,
}

struct Group {
    /// `None` keeps the single member's own label.
    label: Option<String>,
    members: Vec<usize>,
}

/// Contracts each group to one vertex, ordered by smallest member, and
/// induces the edges between groups. Vertices outside every group vanish.
fn assemble(
    pattern: &Forest,
    mut groups: Vec<Group>,
) -> Result<(Forest, Vec<Group>, Vec<Option<usize>>)> {
    groups.sort_by_key(|g| g.members[0]);
    let taken: std::collections::HashSet<&str> =
        pattern.labels().iter().map(VertexId::as_str).collect();
    let mut image = vec![None; pattern.len()];
    let mut labels = Vec::with_capacity(groups.len());
    for (i, g) in groups.iter().enumerate() {
        for &v in &g.members {
            image[v] = Some(i);
        }
        labels.push(match &g.label {
            None => pattern.label(g.members[0]).clone(),
            Some(base) => {
                let mut label = base.clone();
                while taken.contains(label.as_str()) {
                    label.push('\'');
                }
                VertexId::new(label)?
            }
        });
    }
    let mut edges = BTreeSet::new();
    for &(u, v) in pattern.edges() {
        if let (Some(a), Some(b)) = (image[u], image[v]) {
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let forest = Forest::from_parts(labels, edges)
        .map_err(|e| Error::Internal(format!("contraction is not a forest: {e}")))?;
    Ok((forest, groups, image))
}

impl SkeletonForest {
    /// Contracts the components of the support and keeps the always-zero
    /// vertices adjacent to them.
    pub fn build(pattern: &Forest, in_support: &[bool]) -> Result<Self> {
        let comps = pattern.component_sets_within(in_support);
        let mut groups: Vec<Group> = comps
            .into_iter()
            .enumerate()
            .map(|(k, members)| Group {
                label: Some(format!("C#{}", k + 1)),
                members,
            })
            .collect();
        let mut ordinals: Vec<(usize, usize)> = groups
            .iter()
            .enumerate()
            .map(|(k, g)| (g.members[0], k + 1))
            .collect();
        groups.extend(boundary_of(pattern, in_support).into_iter().map(|v| Group {
            label: None,
            members: vec![v],
        }));
        let (forest, groups, image) = assemble(pattern, groups)?;
        ordinals.sort_unstable();
        let kinds = groups
            .into_iter()
            .map(|g| match g.label {
                None => SkeletonVertex::Boundary(g.members[0]),
                Some(_) => {
                    let idx = ordinals
                        .binary_search_by_key(&g.members[0], |&(rep, _)| rep)
                        .unwrap();
                    SkeletonVertex::Contracted {
                        ordinal: ordinals[idx].1,
                        members: g.members,
                    }
                }
            })
            .collect();
        Ok(SkeletonForest {
            forest,
            kinds,
            image,
        })
    }

    pub fn len(&self) -> usize {
        self.forest.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forest.is_empty()
    }

    pub fn image(&self, original: usize) -> Option<usize> {
        self.image[original]
    }

    pub fn is_contracted(&self, s: usize) -> bool {
        self.kinds[s].is_contracted()
    }

    pub fn contracted(&self) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.is_contracted(s)).collect()
    }

    /// 1 for contracted vertices, 0 for boundary vertices.
    pub fn colors(&self) -> Vec<u8> {
        self.kinds
            .iter()
            .map(|k| u8::from(k.is_contracted()))
            .collect()
    }

    pub fn canonical_form(&self) -> String {
        self.forest.canonical_form(&self.colors())
    }

    /// Structural checks. An empty result means all of them hold.
    pub fn violations(&self) -> Vec<SkeletonViolation> {
        let f = &self.forest;
        let mut out = Vec::new();
        for s in 0..self.len() {
            if f.degree(s) == 1 && !self.is_contracted(s) {
                out.push(SkeletonViolation::BoundaryLeaf(s));
            }
            if !self.is_contracted(s) {
                let contracted_nbrs = f
                    .neighbors(s)
                    .iter()
                    .filter(|&&t| self.is_contracted(t))
                    .count();
                if contracted_nbrs < 2 {
                    out.push(SkeletonViolation::ThinBoundary(s));
                }
            }
        }
        for &(u, v) in f.edges() {
            match (self.is_contracted(u), self.is_contracted(v)) {
                (true, true) => out.push(SkeletonViolation::ContractedEdge(u, v)),
                (false, false) => out.push(SkeletonViolation::BoundaryEdge(u, v)),
                _ => {}
            }
        }
        let class = classify_vertices(f);
        out.extend(
            class
                .forced_edges
                .iter()
                .map(|&(u, v)| SkeletonViolation::ForcedEdge(u, v)),
        );
        for s in 0..self.len() {
            if class.may_miss(s) != self.is_contracted(s) {
                out.push(SkeletonViolation::MatchingSplit(s));
            }
        }
        out
    }

    /// DOT rendering: contracted vertices as boxes listing their members,
    /// boundary vertices as filled circles.
    pub fn to_dot(&self, original: &Forest) -> String {
        let escape = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let quote = |s: &str| format!("\"{}\"", escape(s));
        let mut out = String::from("graph skeleton {\n");
        for (s, kind) in self.kinds.iter().enumerate() {
            let name = quote(self.forest.label(s).as_str());
            match kind {
                SkeletonVertex::Contracted { members, .. } => {
                    let list: Vec<String> = members
                        .iter()
                        .map(|&v| escape(original.label(v).as_str()))
                        .collect();
                    let text = format!(
                        "{}\\n{{{}}}",
                        escape(self.forest.label(s).as_str()),
                        list.join(", ")
                    );
                    let _ = writeln!(out, "  {name} [shape=box, label=\"{text}\"];");
                }
                SkeletonVertex::Boundary(_) => {
                    let _ = writeln!(
                        out,
                        "  {name} [shape=circle, style=filled, fillcolor=black, fontcolor=white];"
                    );
                }
            }
        }
        let mut edges: Vec<(String, String)> = self
            .forest
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (
                    self.forest.label(u).to_string(),
                    self.forest.label(v).to_string(),
                );
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort();
        for (a, b) in edges {
            let _ = writeln!(out, "  {} -- {};", quote(&a), quote(&b));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeletonViolation {
    /// A leaf that is not a contracted vertex.
    BoundaryLeaf(usize),
    /// A boundary vertex with fewer than two contracted neighbors.
    ThinBoundary(usize),
    ContractedEdge(usize, usize),
    BoundaryEdge(usize, usize),
    /// An edge contained in every maximum matching.
    ForcedEdge(usize, usize),
    /// A vertex whose contracted/boundary kind disagrees with whether some
    /// maximum matching misses it.
    MatchingSplit(usize),
}

impl SkeletonViolation {
    /// One line of text naming the skeleton vertices involved.
    pub fn describe(&self, skeleton: &Forest) -> String {
        let l = |s: usize| skeleton.label(s).to_string();
        match *self {
            SkeletonViolation::BoundaryLeaf(s) => format!("boundary vertex {} is a leaf", l(s)),
            SkeletonViolation::ThinBoundary(s) => {
                format!(
                    "boundary vertex {} has fewer than two contracted neighbors",
                    l(s)
                )
            }
            SkeletonViolation::ContractedEdge(u, v) => {
                format!("contracted vertices {} and {} are adjacent", l(u), l(v))
            }
            SkeletonViolation::BoundaryEdge(u, v) => {
                format!("boundary vertices {} and {} are adjacent", l(u), l(v))
            }
            SkeletonViolation::ForcedEdge(u, v) => {
                format!("edge {} {} lies in every maximum matching", l(u), l(v))
            }
            SkeletonViolation::MatchingSplit(s) => {
                format!(
                    "vertex {} disagrees with the maximum matching classification",
                    l(s)
                )
            }
        }
    }
}

/// The skeleton of the eigenspace of `m` for `lambda`, with everything needed
/// to move vectors between the two.
#[derive(Debug, Clone)]
pub struct Decomposition<'a> {
    matrix: &'a TreePatternMatrix,
    pub support: SupportReport,
    pub skeleton: SkeletonForest,
}

/// One step of the brother search over contracted skeleton vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
enum SearchStep {
    /// First vertex of a brother class.
    Root(usize),
    /// `parent` is placed; its boundary neighbor `boundary` fixes `children`.
    Group {
        parent: usize,
        boundary: usize,
        children: Vec<usize>,
    },
}

impl<'a> Decomposition<'a> {
    pub fn new(m: &'a TreePatternMatrix, lambda: &Rational) -> Result<Self> {
        Self::from_basis(m, &eigenspace_basis(m, lambda))
    }

    pub fn from_basis(m: &'a TreePatternMatrix, basis: &RationalBasis) -> Result<Self> {
        let support = SupportReport::from_basis(m, basis);
        if !support.is_eigenvalue() {
            return Err(Error::NotAnEigenvalue(format_rational(&basis.lambda)));
        }
        let skeleton = SkeletonForest::build(m.pattern(), &support.in_support)?;
        Ok(Decomposition {
            matrix: m,
            support,
            skeleton,
        })
    }

    pub fn matrix(&self) -> &TreePatternMatrix {
        self.matrix
    }

    pub fn lambda(&self) -> &Rational {
        &self.support.lambda
    }

    /// Vertices of the skeleton minus twice its matching number.
    pub fn multiplicity_via_matching(&self) -> usize {
        self.skeleton.len() - 2 * matching_number(&self.skeleton.forest)
    }

    /// Contracted vertices are visited class by class, where two contracted
    /// vertices are brothers if they share a boundary neighbor. Boundary
    /// vertices adjacent to each other do not link classes.
    fn brother_search(&self) -> Vec<SearchStep> {
        let sk = &self.skeleton;
        let f = &sk.forest;
        let mut placed = vec![false; sk.len()];
        let mut done_boundary = vec![false; sk.len()];
        let mut steps = Vec::new();
        for start in sk.contracted() {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            steps.push(SearchStep::Root(start));
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                for &w in f.neighbors(p) {
                    if sk.is_contracted(w) || done_boundary[w] {
                        continue;
                    }
                    done_boundary[w] = true;
                    let children: Vec<usize> = f
                        .neighbors(w)
                        .iter()
                        .copied()
                        .filter(|&c| c != p && sk.is_contracted(c))
                        .collect();
                    for &c in &children {
                        placed[c] = true;
                        queue.push_back(c);
                    }
                    steps.push(SearchStep::Group {
                        parent: p,
                        boundary: w,
                        children,
                    });
                }
            }
        }
        steps
    }

    /// Original vertex of contracted skeleton vertex `c` adjacent to the
    /// boundary skeleton vertex `w`.
    fn attachment(&self, c: usize, w: usize) -> Result<usize> {
        self.matrix
            .pattern()
            .neighbors(self.boundary_original(w))
            .iter()
            .copied()
            .find(|&u| self.skeleton.image(u) == Some(c))
            .ok_or_else(|| Error::Internal("skeleton edge without an original edge".into()))
    }

    fn boundary_original(&self, s: usize) -> usize {
        match self.skeleton.kinds[s] {
            SkeletonVertex::Boundary(v) => v,
            SkeletonVertex::Contracted { .. } => {
                unreachable!("brother search yields boundary vertices")
            }
        }
    }

    fn require_eigenvector(&self, x: &[Rational]) -> Result<()> {
        if !crate::linalg::verify_eigenvector(self.matrix, self.lambda(), x)? {
            return Err(Error::NotAnEigenvector(format_rational(self.lambda())));
        }
        Ok(())
    }

    /// Maps an eigenvector of the tree to a null vector of the skeleton that is
    /// non-zero exactly on the contracted vertices whose components carry
    /// non-zero entries. The first vertex of each brother class gets 1 when
    /// active.
    pub fn project(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.require_eigenvector(b)?;
        let sk = &self.skeleton;
        for kind in &sk.kinds {
            if let SkeletonVertex::Contracted { members, .. } = kind {
                let zeros = members.iter().filter(|&&u| b[u].is_zero()).count();
                if zeros != 0 && zeros != members.len() {
                    return Err(Error::Internal(
                        "eigenvector is neither zero nor zero-free on an eigen-component".into(),
                    ));
                }
            }
        }
        let flow = |c: usize, w: usize| -> Result<Rational> {
            let wo = self.boundary_original(w);
            let u = self.attachment(c, w)?;
            Ok(self.matrix.entry(wo, u) * &b[u])
        };
        let mut value = vec![Rational::zero(); sk.len()];
        for step in self.brother_search() {
            match step {
                SearchStep::Root(c) => {
                    if !b[sk.kinds[c].members()[0]].is_zero() {
                        value[c] = Rational::one();
                    }
                }
                SearchStep::Group {
                    parent,
                    boundary,
                    children,
                } => {
                    let scale = if value[parent].is_zero() {
                        Rational::one()
                    } else {
                        &value[parent] / flow(parent, boundary)?
                    };
                    for c in children {
                        value[c] = &scale * flow(c, boundary)?;
                    }
                }
            }
        }
        if !skeleton_null(&sk.forest, &value) {
            return Err(Error::Internal(
                "projected vector is not a skeleton null vector".into(),
            ));
        }
        Ok(value)
    }

    /// The zero-free eigenvector of each eigen-component, as full-length
    /// vectors indexed like the matrix.
    pub fn component_eigenvectors(&self) -> Result<Vec<Vec<Rational>>> {
        let n = self.matrix.order();
        self.support
            .eigen_components
            .iter()
            .map(|members| {
                let sub = self.matrix.principal_submatrix(members);
                let basis = eigenspace_basis(&sub, self.lambda());
                if basis.dim() != 1 || basis.vectors[0].iter().any(Zero::is_zero) {
                    return Err(Error::Internal(format!(
                        "eigen-component has eigenspace dimension {} or a zero entry",
                        basis.dim()
                    )));
                }
                let mut full = vec![Rational::zero(); n];
                for (x, &u) in basis.vectors[0].iter().zip(members) {
                    full[u] = x.clone();
                }
                Ok(full)
            })
            .collect()
    }

    /// Maps a skeleton null vector to an eigenvector that is non-zero exactly
    /// on the components whose skeleton vertices carry non-zero entries.
    pub fn lift(&self, s: &[Rational]) -> Result<Vec<Rational>> {
        let pieces = self.component_eigenvectors()?;
        self.lift_with(s, &pieces)
    }

    /// Like [`Decomposition::lift`] with caller-supplied component vectors:
    /// `pieces[k]` must be a zero-free eigenvector of eigen-component `k`
    /// (discovery order), zero elsewhere. Each piece is only rescaled, so
    /// sign-valued pieces and a sign-valued `s` give a sign-valued result.
    pub fn lift_with(&self, s: &[Rational], pieces: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        let sk = &self.skeleton;
        if s.len() != sk.len() {
            return Err(Error::DimensionMismatch {
                expected: sk.len(),
                actual: s.len(),
            });
        }
        if !skeleton_null(&sk.forest, s) {
            return Err(Error::NotInSkeletonNullSpace);
        }
        let piece = |c: usize| -> &Vec<Rational> {
            match &sk.kinds[c] {
                SkeletonVertex::Contracted { ordinal, .. } => &pieces[ordinal - 1],
                SkeletonVertex::Boundary(_) => unreachable!(),
            }
        };
        let flow = |c: usize, w: usize| -> Result<Rational> {
            let wo = self.boundary_original(w);
            let u = self.attachment(c, w)?;
            Ok(self.matrix.entry(wo, u) * &piece(c)[u])
        };
        let mut coeff = vec![Rational::zero(); sk.len()];
        for step in self.brother_search() {
            match step {
                SearchStep::Root(c) => {
                    if !s[c].is_zero() {
                        coeff[c] = Rational::one();
                    }
                }
                SearchStep::Group {
                    parent,
                    boundary,
                    children,
                } => {
                    let scale = if s[parent].is_zero() {
                        Rational::one()
                    } else {
                        &coeff[parent] * flow(parent, boundary)? / &s[parent]
                    };
                    for c in children {
                        if !s[c].is_zero() {
                            coeff[c] = &scale * &s[c] / flow(c, boundary)?;
                        }
                    }
                }
            }
        }
        let mut x = vec![Rational::zero(); self.matrix.order()];
        for c in sk.contracted() {
            if coeff[c].is_zero() {
                continue;
            }
            for &u in sk.kinds[c].members() {
                x[u] = &coeff[c] * &piece(c)[u];
            }
        }
        self.require_eigenvector(&x)
            .map_err(|_| Error::Internal("lifted vector fails the eigen-equation".into()))?;
        Ok(x)
    }

    /// The contraction of the tree by all components left after deleting the
    /// boundary, with the non-eigen components marked.
    pub fn meta_skeleton(&self) -> Result<MetaSkeleton> {
        let pattern = self.matrix.pattern();
        let n = pattern.len();
        let mut keep = vec![true; n];
        for &b in &self.support.boundary {
            keep[b] = false;
        }
        let in_support = &self.support.in_support;
        let mut groups = Vec::new();
        let mut eigen_ordinal = 0;
        let mut other_ordinal = 0;
        let mut non_eigen_members = Vec::new();
        for members in pattern.component_sets_within(&keep) {
            let supported = members.iter().filter(|&&u| in_support[u]).count();
            let label = if supported == members.len() {
                eigen_ordinal += 1;
                format!("C#{eigen_ordinal}")
            } else if supported == 0 {
                let sub = self.matrix.principal_submatrix(&members);
                if eigenspace_dim(&sub, self.lambda()) != 0 {
                    return Err(Error::Internal(
                        "a non-eigen component has the eigenvalue".into(),
                    ));
                }
                other_ordinal += 1;
                non_eigen_members.push(members[0]);
                format!("X#{other_ordinal}")
            } else {
                return Err(Error::Internal(
                    "component mixes support and always-zero vertices".into(),
                ));
            };
            groups.push(Group {
                label: Some(label),
                members,
            });
        }
        groups.extend(self.support.boundary.iter().map(|&v| Group {
            label: None,
            members: vec![v],
        }));
        let (tree, groups, image) = assemble(pattern, groups)?;
        let non_eigen: Vec<usize> = non_eigen_members
            .iter()
            .map(|&rep| image[rep].unwrap())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let skeleton_vertices: Vec<usize> = (0..tree.len())
            .filter(|s| non_eigen.binary_search(s).is_err())
            .collect();
        for (i, &x) in non_eigen.iter().enumerate() {
            if non_eigen[i + 1..].iter().any(|&y| tree.has_edge(x, y)) {
                return Err(Error::Internal("non-eigen set is not independent".into()));
            }
        }
        if tree.induced(&skeleton_vertices) != self.skeleton.forest {
            return Err(Error::Internal(
                "meta skeleton does not restrict to the skeleton".into(),
            ));
        }
        Ok(MetaSkeleton {
            tree,
            members: groups.into_iter().map(|g| g.members).collect(),
            non_eigen,
            skeleton_vertices,
        })
    }
}

/// The skeleton with the contracted no-eigenvalue trees that join its
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaSkeleton {
    pub tree: Forest,
    /// Per vertex of `tree`, the original vertices it stands for.
    pub members: Vec<Vec<usize>>,
    /// Vertices of `tree` contracted from no-eigenvalue components, sorted.
    pub non_eigen: Vec<usize>,
    /// The remaining vertices; they induce the skeleton.
    pub skeleton_vertices: Vec<usize>,
}

/// Adjacency null space test on a skeleton forest.
pub fn skeleton_null(f: &Forest, x: &[Rational]) -> bool {
    x.len() == f.len()
        && (0..f.len()).all(|v| {
            f.neighbors(v)
                .iter()
                .fold(Rational::zero(), |acc, &w| acc + &x[w])
                .is_zero()
        })
}

/// Skeleton of the single eigenvector `x`.
pub fn x_skeleton(
    m: &TreePatternMatrix,
    x: &[Rational],
    lambda: &Rational,
) -> Result<SkeletonForest> {
    if !crate::linalg::verify_eigenvector(m, lambda, x)? {
        return Err(Error::NotAnEigenvector(format_rational(lambda)));
    }
    let in_support: Vec<bool> = x.iter().map(|v| !v.is_zero()).collect();
    SkeletonForest::build(m.pattern(), &in_support)
}

pub fn skeleton(m: &TreePatternMatrix, lambda: &Rational) -> Result<SkeletonForest> {
    Ok(Decomposition::new(m, lambda)?.skeleton)
}

pub fn meta_skeleton(m: &TreePatternMatrix, lambda: &Rational) -> Result<MetaSkeleton> {
    Decomposition::new(m, lambda)?.meta_skeleton()
}

pub fn multiplicity_via_matching(m: &TreePatternMatrix, lambda: &Rational) -> Result<usize> {
    Ok(Decomposition::new(m, lambda)?.multiplicity_via_matching())
}

pub fn project_eigenvector(
    m: &TreePatternMatrix,
    lambda: &Rational,
    b: &[Rational],
) -> Result<Vec<Rational>> {
    Decomposition::new(m, lambda)?.project(b)
}

pub fn lift_null_vector(
    m: &TreePatternMatrix,
    lambda: &Rational,
    s: &[Rational],
) -> Result<Vec<Rational>> {
    Decomposition::new(m, lambda)?.lift(s)
}

/// Whether the eigenvalue-0 skeleton of `sk` (viewed as a forest) is `sk`
/// itself: every vertex survives uncontracted with the same kind and the
/// same edges.
pub fn is_zero_skeleton_fixed_point(sk: &SkeletonForest) -> bool {
    let a = TreePatternMatrix::adjacency(&sk.forest);
    let Ok(inner) = Decomposition::new(&a, &Rational::zero()) else {
        return false;
    };
    let inner = inner.skeleton;
    if inner.len() != sk.len() || inner.forest.edge_count() != sk.forest.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; sk.len()];
    for s in 0..sk.len() {
        let Some(t) = inner.image(s) else {
            return false;
        };
        let same_kind = match &inner.kinds[t] {
            SkeletonVertex::Contracted { members, .. } => members.len() == 1 && sk.is_contracted(s),
            SkeletonVertex::Boundary(_) => !sk.is_contracted(s),
        };
        if !same_kind {
            return false;
        }
        map[s] = t;
    }
    sk.forest
        .edges()
        .iter()
        .all(|&(u, v)| inner.forest.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Forest;
    use crate::linalg::{adjacency_matrix, verify_eigenvector};
    use crate::rational::int;

    fn adj(text: &str) -> TreePatternMatrix {
        adjacency_matrix(&Forest::parse(text).unwrap())
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    const P4: &str = "a b\nb c\nc d";
    const P5: &str = "a b\nb c\nc d\nd e";
    const STAR: &str = "h a\nh b\nh c";
    // Center m with arms m-p1-p2 and m-q1-q2 and a pendant s.
    const S221: &str = "m p1\np1 p2\nm q1\nq1 q2\nm s";

    fn labels(f: &Forest) -> Vec<String> {
        f.labels().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn support_examples() {
        let r = support_report(&adj(P5), &int(1));
        assert_eq!(r.always_zero(), vec![2]);
        assert_eq!(r.support(), vec![0, 1, 3, 4]);
        assert_eq!(r.boundary, vec![2]);
        assert_eq!(r.eigen_components, vec![vec![0, 1], vec![3, 4]]);

        let r = support_report(&adj(P4), &int(1));
        assert!(r.support().is_empty() && r.boundary.is_empty());

        let r = support_report(&adj(STAR), &int(0));
        assert_eq!(r.always_zero(), vec![0]);
        assert_eq!(r.boundary, vec![0]);
        assert_eq!(r.eigen_components.len(), 3);
    }

    #[test]
    fn x_skeleton_examples() {
        let sk = x_skeleton(&adj(P5), &ints(&[1, 1, 0, -1, -1]), &int(1)).unwrap();
        assert_eq!(labels(&sk.forest), ["C#1", "c", "C#2"]);
        assert_eq!(sk.forest, Forest::parse("C#1 c\nc C#2").unwrap());
        assert_eq!(sk.kinds[1], SkeletonVertex::Boundary(2));

        let sk = x_skeleton(&adj("a b"), &ints(&[1, 1]), &int(1)).unwrap();
        assert_eq!(sk.len(), 1);
        assert!(sk.is_contracted(0));

        let sk = x_skeleton(&adj("a b\nb c"), &ints(&[1, 0, -1]), &int(0)).unwrap();
        assert_eq!(sk.forest, Forest::parse("C#1 b\nb C#2").unwrap());

        assert!(matches!(
            x_skeleton(&adj(P5), &ints(&[1, 0, 0, 0, 0]), &int(1)),
            Err(Error::NotAnEigenvector(_))
        ));
    }

    #[test]
    fn skeleton_examples() {
        let sk = skeleton(&adj(P5), &int(1)).unwrap();
        assert_eq!(sk.forest, Forest::parse("C#1 c\nc C#2").unwrap());

        let sk = skeleton(&adj(S221), &int(1)).unwrap();
        assert_eq!(sk.forest, Forest::parse("m C#1\nm C#2").unwrap());
        assert_eq!(sk.kinds[0], SkeletonVertex::Boundary(0));

        let sk = skeleton(&adj(STAR), &int(0)).unwrap();
        assert_eq!(sk.forest, Forest::parse("h C#1\nh C#2\nh C#3").unwrap());
        assert!(!sk.is_contracted(0));
        assert!(sk.violations().is_empty());

        assert!(matches!(
            skeleton(&adj(P4), &int(1)),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn meta_skeleton_examples() {
        let meta = meta_skeleton(&adj(S221), &int(1)).unwrap();
        assert_eq!(meta.tree, Forest::parse("m C#1\nm C#2\nm X#1").unwrap());
        let x = meta.tree.index_of("X#1").unwrap();
        assert_eq!(meta.non_eigen, vec![x]);
        assert_eq!(meta.members[x], vec![5]);

        let meta = meta_skeleton(&adj(P5), &int(1)).unwrap();
        assert!(meta.non_eigen.is_empty());
        assert_eq!(meta.tree, skeleton(&adj(P5), &int(1)).unwrap().forest);

        let meta = meta_skeleton(&adj(STAR), &int(0)).unwrap();
        assert!(meta.non_eigen.is_empty());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity_via_matching(&adj(P5), &int(1)).unwrap(), 1);
        assert_eq!(multiplicity_via_matching(&adj(STAR), &int(0)).unwrap(), 2);
        assert_eq!(multiplicity_via_matching(&adj(S221), &int(1)).unwrap(), 1);
    }

    #[test]
    fn projection_examples() {
        let s = project_eigenvector(&adj(P5), &int(1), &ints(&[1, 1, 0, -1, -1])).unwrap();
        assert_eq!(s, ints(&[1, 0, -1]));
        let s = project_eigenvector(&adj("a b"), &int(1), &ints(&[1, 1])).unwrap();
        assert_eq!(s, ints(&[1]));
        // Skeleton order: h, C#1(a), C#2(b), C#3(c).
        let s = project_eigenvector(&adj(STAR), &int(0), &ints(&[0, 1, -1, 0])).unwrap();
        assert_eq!(s, ints(&[0, 1, -1, 0]));
    }

    #[test]
    fn lift_examples() {
        let x = lift_null_vector(&adj(P5), &int(1), &ints(&[1, 0, -1])).unwrap();
        assert_eq!(x, ints(&[1, 1, 0, -1, -1]));

        // Skeleton order of S221: m, C#1 (p-arm), C#2 (q-arm).
        let x = lift_null_vector(&adj(S221), &int(1), &ints(&[0, 1, -1])).unwrap();
        assert_eq!(x, ints(&[0, 1, 1, -1, -1, 0]));

        let x = lift_null_vector(&adj(STAR), &int(0), &ints(&[0, 1, -1, 0])).unwrap();
        assert_eq!(x, ints(&[0, 1, -1, 0]));

        assert!(matches!(
            lift_null_vector(&adj(P5), &int(1), &ints(&[1, 0, 1])),
            Err(Error::NotInSkeletonNullSpace)
        ));
    }

    #[test]
    fn weighted_round_trip() {
        let m = TreePatternMatrix::from_json(
            r#"{"order":3,"vertex_order":["a","b","c"],
                "entries":[["0","2","0"],["3","0","1"],["0","5","0"]]}"#,
        )
        .unwrap();
        let d = Decomposition::new(&m, &int(0)).unwrap();
        assert_eq!(d.multiplicity_via_matching(), 1);
        let x = d.lift(&ints(&[1, 0, -1])).unwrap();
        assert!(verify_eigenvector(&m, &int(0), &x).unwrap());
        assert_eq!(x, ints(&[1, 0, -3]));
        assert_eq!(d.project(&x).unwrap(), ints(&[1, 0, -1]));
    }

    #[test]
    fn boundary_vertices_may_be_adjacent() {
        // Two P3 centers joined: both centers are boundary and adjacent.
        let m = adj("a b\nb c\nb e\nd e\ne f");
        let d = Decomposition::new(&m, &int(0)).unwrap();
        let sk = &d.skeleton;
        let b = sk.forest.index_of("b").unwrap();
        let e = sk.forest.index_of("e").unwrap();
        assert!(sk.forest.has_edge(b, e));
        assert_eq!(
            sk.violations(),
            vec![SkeletonViolation::BoundaryEdge(b.min(e), b.max(e))]
        );
        assert_eq!(d.multiplicity_via_matching(), 2);
        // Transfer still works across the two brother classes.
        let s: Vec<Rational> = sk
            .kinds
            .iter()
            .map(|k| match k {
                SkeletonVertex::Contracted { ordinal: 1, .. } => int(1),
                SkeletonVertex::Contracted { ordinal: 2, .. } => int(-1),
                SkeletonVertex::Contracted { ordinal: 3, .. } => int(1),
                SkeletonVertex::Contracted { .. } => int(-1),
                SkeletonVertex::Boundary(_) => int(0),
            })
            .collect();
        let x = d.lift(&s).unwrap();
        assert!(verify_eigenvector(&m, &int(0), &x).unwrap());
        assert!(x
            .iter()
            .enumerate()
            .all(|(v, val)| val.is_zero() == (v == 1 || v == 3)));
    }

    #[test]
    fn fixed_point_on_examples() {
        for (text, lambda) in [(P5, 1), (STAR, 0), (S221, 1)] {
            let sk = skeleton(&adj(text), &int(lambda)).unwrap();
            assert!(is_zero_skeleton_fixed_point(&sk), "{text}");
        }
    }

    #[test]
    fn dot_output_is_stable() {
        let m = adj(P5);
        let sk = skeleton(&m, &int(1)).unwrap();
        let dot = sk.to_dot(m.pattern());
        assert_eq!(
            dot,
            "graph skeleton {\n  \"C#1\" [shape=box, label=\"C#1\\n{a, b}\"];\n  \"c\" [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n  \"C#2\" [shape=box, label=\"C#2\\n{d, e}\"];\n  \"C#1\" -- \"c\";\n  \"C#2\" -- \"c\";\n}\n"
        );
    }
}
