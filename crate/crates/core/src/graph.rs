//! Vertex-labeled forests.
//!
//! A [`Forest`] stores its vertices in a fixed order (first appearance in the
//! source document when parsed) and refers to them internally by index. That
//! order is the row order of every matrix built from the forest.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidGraph("empty vertex label".into()));
        }
        if label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidGraph(format!(
                "vertex label `{label}` contains whitespace"
            )));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        VertexId::new(value)
    }
}

impl From<VertexId> for String {
    fn from(value: VertexId) -> Self {
        value.0
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An undirected, simple, acyclic graph with labeled vertices.
///
/// Equality compares labeled graphs: same vertex labels and same edges,
/// regardless of vertex order.
#[derive(Debug, Clone)]
pub struct Forest {
    labels: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() || self.edge_count() != other.edge_count() {
            return false;
        }
        if !self.labels.iter().all(|l| other.index.contains_key(l)) {
            return false;
        }
        self.edges.iter().all(|&(u, v)| {
            let ou = other.index[&self.labels[u]];
            let ov = other.index[&self.labels[v]];
            other.has_edge(ou, ov)
        })
    }
}

impl Eq for Forest {}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Forest {
    /// Builds a forest from labels and index pairs, rejecting self-loops,
    /// duplicate edges and cycles.
    pub fn from_parts(
        labels: Vec<VertexId>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{label}`")));
            }
        }
        let n = labels.len();
        let mut forest = Forest {
            labels,
            index,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        };
        let mut sets = DisjointSets::new(n);
        for (u, v) in edges {
            forest.check_new_edge(u, v, &mut sets)?;
            forest.push_edge(u, v);
        }
        for list in &mut forest.adj {
            list.sort_unstable();
        }
        Ok(forest)
    }

    fn check_new_edge(&self, u: usize, v: usize, sets: &mut DisjointSets) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!(
                "self-loop at `{}`",
                self.labels[u]
            )));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge `{} {}`",
                self.labels[u], self.labels[v]
            )));
        }
        if !sets.union(u, v) {
            return Err(Error::InvalidGraph(format!(
                "edge `{} {}` closes a cycle",
                self.labels[u], self.labels[v]
            )));
        }
        Ok(())
    }

    fn push_edge(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edges.push((u.min(v), u.max(v)));
    }

    /// Convenience constructor from label pairs; vertex order is first appearance.
    pub fn from_labeled_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut text = String::new();
        for (u, v) in edges {
            text.push_str(u);
            text.push(' ');
            text.push_str(v);
            text.push('\n');
        }
        Forest::parse(&text)
    }

    /// Parses the edge-list format: one `u v` edge or lone `u` vertex per line;
    /// blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<VertexId> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut intern = |token: &str, line: usize| -> Result<usize> {
            if let Some(&i) = index.get(token) {
                return Ok(i);
            }
            let id = VertexId::new(token).map_err(|e| Error::parse(line, e.to_string()))?;
            index.insert(token.to_owned(), labels.len());
            labels.push(id);
            Ok(labels.len() - 1)
        };
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [u] => {
                    intern(u, lineno)?;
                }
                [u, v] => {
                    let a = intern(u, lineno)?;
                    let b = intern(v, lineno)?;
                    edges.push((a, b, lineno));
                }
                _ => {
                    return Err(Error::parse(
                        lineno,
                        format!("expected `u v` or a lone vertex, got `{line}`"),
                    ))
                }
            }
        }
        let n = labels.len();
        let mut forest = Forest {
            index: labels
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, l)| (l, i))
                .collect(),
            labels,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        };
        let mut sets = DisjointSets::new(n);
        for (u, v, lineno) in edges {
            forest
                .check_new_edge(u, v, &mut sets)
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
            forest.push_edge(u, v);
        }
        for list in &mut forest.adj {
            list.sort_unstable();
        }
        Ok(forest)
    }

    /// Edge-list text: one edge per line in lexicographic order (each edge
    /// written with its smaller label first), then isolated vertices.
    pub fn serialize(&self) -> String {
        let mut lines: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (&self.labels[u], &self.labels[v]);
                if a <= b {
                    format!("{a} {b}")
                } else {
                    format!("{b} {a}")
                }
            })
            .collect();
        lines.sort();
        let mut isolated: Vec<String> = (0..self.len())
            .filter(|&v| self.adj[v].is_empty())
            .map(|v| self.labels[v].to_string())
            .collect();
        isolated.sort();
        lines.extend(isolated);
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexId {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_owned()))
    }

    /// Neighbors in increasing index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(min, max)` index pairs in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    /// Component id per vertex, numbered in discovery order (scanning
    /// vertices by index), and the number of components.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        self.component_ids_within(&vec![true; self.len()])
    }

    /// Like [`Forest::component_ids`] restricted to the vertices where `keep`
    /// is true; other vertices get `usize::MAX`.
    pub fn component_ids_within(&self, keep: &[bool]) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if !keep[start] || comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if keep[w] && comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Vertex sets of the components of the subgraph induced by `keep`, in
    /// discovery order, each sorted by index.
    pub fn component_sets_within(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let (comp, count) = self.component_ids_within(keep);
        let mut sets = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            if c != usize::MAX {
                sets[c].push(v);
            }
        }
        sets
    }

    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        self.component_sets_within(&vec![true; self.len()])
    }

    pub fn component_count(&self) -> usize {
        self.component_ids().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The components as trees, in discovery order.
    pub fn components(&self) -> Vec<Tree> {
        self.component_sets()
            .into_iter()
            .map(|set| Tree(self.induced(&set)))
            .collect()
    }

    /// Subgraph induced by `vertices`, which keep the given order.
    pub fn induced(&self, vertices: &[usize]) -> Forest {
        let mut position = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if position[u] != usize::MAX && position[v] != usize::MAX {
                edges.push((position[u], position[v]));
            }
        }
        Forest::from_parts(labels, edges).expect("induced subgraph of a forest is a forest")
    }

    /// Deletes the given vertices and their incident edges.
    pub fn remove_vertices(&self, removed: &[VertexId]) -> Result<Forest> {
        let mut gone = vec![false; self.len()];
        for id in removed {
            gone[self.require_index(id.as_str())?] = true;
        }
        let kept: Vec<usize> = (0..self.len()).filter(|&v| !gone[v]).collect();
        Ok(self.induced(&kept))
    }

    /// Contracts each part to a single vertex labeled `C#k` (k counting from
    /// one in the order the parts are given).
    pub fn contract_subgraphs(&self, parts: &[Vec<VertexId>]) -> Result<ContractionResult> {
        let parts = parts
            .iter()
            .map(|part| {
                part.iter()
                    .map(|id| self.require_index(id.as_str()))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        self.contract_indices(&parts, "C#")
    }

    /// Index-level contraction. Parts must be non-empty, pairwise disjoint and
    /// each induce a connected subgraph. Contracted vertices are ordered by the
    /// smallest original index they contain.
    pub fn contract_indices(
        &self,
        parts: &[Vec<usize>],
        prefix: &str,
    ) -> Result<ContractionResult> {
        let n = self.len();
        let mut owner = vec![usize::MAX; n];
        for (k, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidGraph(format!("part {} is empty", k + 1)));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidGraph(format!(
                        "vertex index {v} out of range"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "parts overlap at `{}`",
                        self.labels[v]
                    )));
                }
                owner[v] = k;
            }
            let mut keep = vec![false; n];
            for &v in part {
                keep[v] = true;
            }
            if self.component_ids_within(&keep).1 != 1 {
                return Err(Error::InvalidGraph(format!(
                    "part {} does not induce a connected subgraph",
                    k + 1
                )));
            }
        }

        // Representative index of each new vertex: its own index or the
        // smallest index in its part.
        let mut reps: Vec<(usize, Origin)> = Vec::new();
        for v in 0..n {
            if owner[v] == usize::MAX {
                reps.push((v, Origin::Vertex(v)));
            }
        }
        for (k, part) in parts.iter().enumerate() {
            let mut sorted = part.clone();
            sorted.sort_unstable();
            reps.push((
                sorted[0],
                Origin::Part {
                    ordinal: k + 1,
                    members: sorted,
                },
            ));
        }
        reps.sort_by_key(|(rep, _)| *rep);

        let mut image = vec![0usize; n];
        for (new, (_, origin)) in reps.iter().enumerate() {
            match origin {
                Origin::Vertex(v) => image[*v] = new,
                Origin::Part { members, .. } => {
                    for &v in members {
                        image[v] = new;
                    }
                }
            }
        }

        let taken: HashSet<&str> = self.labels.iter().map(VertexId::as_str).collect();
        let labels: Vec<VertexId> = reps
            .iter()
            .map(|(_, origin)| match origin {
                Origin::Vertex(v) => self.labels[*v].clone(),
                Origin::Part { ordinal, .. } => fresh_label(&format!("{prefix}{ordinal}"), &taken),
            })
            .collect();

        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            let (a, b) = (image[u], image[v]);
            if a != b {
                seen.insert((a.min(b), a.max(b)));
            }
        }
        let contracted = Forest::from_parts(labels, seen)
            .map_err(|e| Error::Internal(format!("contraction produced an invalid forest: {e}")))?;
        Ok(ContractionResult {
            contracted,
            origin: reps.into_iter().map(|(_, o)| o).collect(),
            image,
        })
    }

    /// Two-coloring per component; side `false` (set A) holds the first
    /// vertex of each component.
    pub fn bipartition_sides(&self) -> Vec<bool> {
        let n = self.len();
        let mut side = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for &w in &self.adj[v] {
                    if side[w].is_none() {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                }
            }
        }
        side.into_iter().map(Option::unwrap).collect()
    }

    pub fn bipartition(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        let sides = self.bipartition_sides();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (v, &s) in sides.iter().enumerate() {
            if s {
                b.push(self.labels[v].clone());
            } else {
                a.push(self.labels[v].clone());
            }
        }
        (a, b)
    }

    /// Distance from `source` to every vertex in its component (`usize::MAX`
    /// elsewhere), restricted to vertices with `alive[v]`.
    pub fn distances_within(&self, source: usize, alive: &[bool]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if alive[w] && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Isomorphism invariant of the vertex-colored forest: equal strings iff
    /// there is a color-preserving isomorphism.
    pub fn canonical_form(&self, colors: &[u8]) -> String {
        let alive = vec![true; self.len()];
        let mut parts: Vec<String> = self
            .component_sets()
            .iter()
            .map(|set| self.canonical_component(set, colors, &alive))
            .collect();
        parts.sort();
        parts.join("|")
    }

    fn canonical_component(&self, set: &[usize], colors: &[u8], alive: &[bool]) -> String {
        // Rooted canonical strings at each center; the smaller one wins.
        let ecc = |v: usize| -> usize {
            let d = self.distances_within(v, alive);
            set.iter().map(|&u| d[u]).max().unwrap_or(0)
        };
        let eccs: Vec<usize> = set.iter().map(|&v| ecc(v)).collect();
        let radius = *eccs.iter().min().unwrap();
        set.iter()
            .zip(&eccs)
            .filter(|(_, &e)| e == radius)
            .map(|(&c, _)| self.rooted_form(c, usize::MAX, colors))
            .min()
            .unwrap()
    }

    fn rooted_form(&self, v: usize, parent: usize, colors: &[u8]) -> String {
        let mut children: Vec<String> = self.adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| self.rooted_form(w, v, colors))
            .collect();
        children.sort();
        format!(
            "({}{})",
            colors.get(v).copied().unwrap_or(0),
            children.concat()
        )
    }
}

fn fresh_label(base: &str, taken: &HashSet<&str>) -> VertexId {
    let mut label = base.to_owned();
    while taken.contains(label.as_str()) {
        label.push('\'');
    }
    VertexId::new(label).expect("synthesized labels are non-empty and whitespace-free")
}

/// Where a vertex of a contracted graph came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Vertex(usize),
    /// A contracted part; `ordinal` is its 1-based position among the parts.
    Part {
        ordinal: usize,
        members: Vec<usize>,
    },
}

impl Origin {
    pub fn members(&self) -> Vec<usize> {
        match self {
            Origin::Vertex(v) => vec![*v],
            Origin::Part { members, .. } => members.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub contracted: Forest,
    /// Per contracted vertex, its preimage.
    pub origin: Vec<Origin>,
    /// Per original vertex, its image in `contracted`.
    pub image: Vec<usize>,
}

/// A connected forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree(Forest);

impl Tree {
    pub fn new(forest: Forest) -> Result<Self> {
        if forest.is_empty() {
            return Err(Error::InvalidGraph(
                "a tree needs at least one vertex".into(),
            ));
        }
        if !forest.is_connected() {
            return Err(Error::InvalidGraph(format!(
                "graph has {} components, expected a tree",
                forest.component_count()
            )));
        }
        Ok(Tree(forest))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Tree::new(Forest::parse(text)?)
    }

    pub fn from_labeled_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        Tree::new(Forest::from_labeled_edges(edges)?)
    }

    /// The single-vertex tree.
    pub fn singleton(label: &str) -> Result<Self> {
        Tree::new(Forest::from_parts(vec![VertexId::new(label)?], [])?)
    }

    pub fn as_forest(&self) -> &Forest {
        &self.0
    }

    pub fn into_forest(self) -> Forest {
        self.0
    }

    pub fn contract_subgraphs(&self, parts: &[Vec<VertexId>]) -> Result<(Tree, ContractionResult)> {
        let result = self.0.contract_subgraphs(parts)?;
        Ok((Tree(result.contracted.clone()), result))
    }
}

impl Deref for Tree {
    type Target = Forest;

    fn deref(&self) -> &Forest {
        &self.0
    }
}

impl TryFrom<Forest> for Tree {
    type Error = Error;

    fn try_from(value: Forest) -> Result<Self> {
        Tree::new(value)
    }
}
