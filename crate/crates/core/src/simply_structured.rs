//! Trees with a {1, -1} eigenvector for eigenvalue 1 and eigenspace bases
//! with entries in {0, 1, -1}.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Forest, Tree};
use crate::linalg::{
    adjacency_matrix, eigenspace_basis, verify_eigenvector, Matrix, TreePatternMatrix,
};
use crate::matching::{kernel_basis, SignVector};
use crate::rational::{format_rational, int, Rational};
use crate::skeleton::Decomposition;

/// One gadget removal: `y` joined to the leaves `u0`, `u1` and to `kept`,
/// and the leaf `w` hanging off `kept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionStep {
    pub kept: usize,
    pub u0: usize,
    pub u1: usize,
    pub y: usize,
    pub w: usize,
}

impl ReductionStep {
    pub fn removed(&self) -> [usize; 4] {
        [self.u0, self.u1, self.y, self.w]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// The two vertices left at the end.
    pub terminal: (usize, usize),
}

impl ReductionTrace {
    /// Rebuilds the edge set by adding the gadgets back onto the terminal edge.
    pub fn replay_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = vec![self.terminal];
        for s in self.steps.iter().rev() {
            edges.extend([(s.kept, s.y), (s.y, s.u0), (s.y, s.u1), (s.kept, s.w)]);
        }
        edges
    }

    /// The {1, -1} eigenvector for eigenvalue 1 obtained by starting from the
    /// all-ones vector on the terminal edge and extending gadget by gadget.
    pub fn certificate(&self, n: usize) -> SignVector {
        let mut x = vec![0i8; n];
        x[self.terminal.0] = 1;
        x[self.terminal.1] = 1;
        for s in self.steps.iter().rev() {
            let v = x[s.kept];
            x[s.w] = v;
            x[s.y] = -v;
            x[s.u0] = -v;
            x[s.u1] = -v;
        }
        SignVector::new(x).expect("entries are signs")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCResult {
    pub member: bool,
    pub trace: Option<ReductionTrace>,
    pub certificate: Option<SignVector>,
}

struct Reducer<'a> {
    f: &'a Forest,
    alive: Vec<bool>,
    degree: Vec<usize>,
    remaining: usize,
    steps: Vec<ReductionStep>,
    dead_ends: HashSet<Vec<bool>>,
}

impl<'a> Reducer<'a> {
    fn live_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.f
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.alive[w])
    }

    fn is_leaf(&self, v: usize) -> bool {
        self.alive[v] && self.degree[v] == 1
    }

    fn eccentricity(&self, v: usize) -> usize {
        let d = self.f.distances_within(v, &self.alive);
        d.into_iter()
            .filter(|&x| x != usize::MAX)
            .max()
            .unwrap_or(0)
    }

    /// All applicable gadgets, kept vertices of larger eccentricity first.
    fn candidates(&self) -> Vec<ReductionStep> {
        let mut out = Vec::new();
        for kept in 0..self.f.len() {
            if !self.alive[kept] {
                continue;
            }
            let leaves: Vec<usize> = self
                .live_neighbors(kept)
                .filter(|&w| self.is_leaf(w))
                .collect();
            if leaves.is_empty() {
                continue;
            }
            for y in self.live_neighbors(kept) {
                if self.degree[y] != 3 {
                    continue;
                }
                let hanging: Vec<usize> = self.live_neighbors(y).filter(|&u| u != kept).collect();
                if !hanging.iter().all(|&u| self.is_leaf(u)) {
                    continue;
                }
                // With two leaves at `kept`, which one plays `w` does not
                // change the remaining tree.
                out.push(ReductionStep {
                    kept,
                    u0: hanging[0],
                    u1: hanging[1],
                    y,
                    w: leaves[0],
                });
            }
        }
        let mut ranked: Vec<(usize, ReductionStep)> = out
            .into_iter()
            .map(|s| (self.eccentricity(s.kept), s))
            .collect();
        ranked.sort_by_key(|&(ecc, s)| (std::cmp::Reverse(ecc), s.kept, s.y));
        ranked.into_iter().map(|(_, s)| s).collect()
    }

    fn apply(&mut self, s: &ReductionStep, remove: bool) {
        for v in s.removed() {
            self.alive[v] = !remove;
        }
        if remove {
            self.degree[s.kept] -= 2;
            self.remaining -= 4;
            self.steps.push(*s);
        } else {
            self.degree[s.kept] += 2;
            self.remaining += 4;
            self.steps.pop();
        }
    }

    fn terminal(&self) -> Option<(usize, usize)> {
        if self.remaining != 2 {
            return None;
        }
        let mut live = (0..self.f.len()).filter(|&v| self.alive[v]);
        let (a, b) = (live.next()?, live.next()?);
        self.f.has_edge(a, b).then_some((a, b))
    }

    fn search(&mut self) -> Option<(usize, usize)> {
        if let Some(t) = self.terminal() {
            return Some(t);
        }
        if self.remaining < 6 || self.dead_ends.contains(&self.alive) {
            return None;
        }
        for s in self.candidates() {
            self.apply(&s, true);
            if let Some(t) = self.search() {
                return Some(t);
            }
            self.apply(&s, false);
        }
        self.dead_ends.insert(self.alive.clone());
        None
    }
}

/// Decides membership by gadget reduction to a single edge. Gadgets whose
/// kept vertex has the largest eccentricity are tried first; dead ends are
/// backtracked and remembered by remaining vertex set.
pub fn is_class_c(t: &Tree) -> ClassCResult {
    let f = t.as_forest();
    let n = f.len();
    let mut r = Reducer {
        f,
        alive: vec![true; n],
        degree: (0..n).map(|v| f.degree(v)).collect(),
        remaining: n,
        steps: Vec::new(),
        dead_ends: HashSet::new(),
    };
    match r.search() {
        Some(terminal) => {
            let trace = ReductionTrace {
                steps: r.steps,
                terminal,
            };
            let certificate = trace.certificate(n);
            ClassCResult {
                member: true,
                trace: Some(trace),
                certificate: Some(certificate),
            }
        }
        None => ClassCResult {
            member: false,
            trace: None,
            certificate: None,
        },
    }
}

fn check_lambda(lambda: i64) -> Result<()> {
    if !(-1..=1).contains(&lambda) {
        return Err(Error::Precondition(format!(
            "{{0, 1, -1}} bases exist only for eigenvalues 0, 1 and -1, not {lambda}"
        )));
    }
    Ok(())
}

/// Negates the entries on one side of the bipartition, turning eigenvalue 1
/// vectors into eigenvalue -1 vectors and back.
pub fn bipartition_flip(f: &Forest, x: &SignVector) -> SignVector {
    x.flipped(&f.bipartition_sides())
}

/// Whether an eigenspace basis with entries in {0, 1, -1} exists.
pub fn has_simply_structured_basis(t: &Tree, lambda: i64) -> Result<bool> {
    check_lambda(lambda)?;
    let m = adjacency_matrix(t);
    let d = Decomposition::new(&m, &int(lambda))?;
    if lambda == 0 {
        return Ok(true);
    }
    // Bipartite trees: the -1 eigenspace is the flipped 1 eigenspace, with the
    // same always-zero set.
    Ok(d.support
        .eigen_components
        .iter()
        .all(|members| is_class_c(&component_tree(t, members)).member))
}

fn component_tree(t: &Tree, members: &[usize]) -> Tree {
    Tree::new(t.induced(members)).expect("eigen-components are connected")
}

/// A {0, 1, -1} eigenspace basis.
///
/// For eigenvalue 0 this is the alternating-path kernel basis. For eigenvalue
/// 1 every eigen-component gets its {1, -1} certificate, the skeleton's
/// kernel basis fixes which components each vector uses, and signs of whole
/// components are corrected breadth-first from the skeleton so the summation
/// rule holds at every boundary vertex. Eigenvalue -1 flips the eigenvalue 1
/// basis on one side of the bipartition.
pub fn simply_structured_basis(t: &Tree, lambda: i64) -> Result<Vec<SignVector>> {
    check_lambda(lambda)?;
    let basis = match lambda {
        0 => {
            let m = adjacency_matrix(t);
            if eigenspace_basis(&m, &Rational::zero()).dim() == 0 {
                return Err(Error::NotAnEigenvalue("0".into()));
            }
            kernel_basis(t)
        }
        1 => eigenvalue_one_basis(t)?,
        _ => eigenvalue_one_basis(t)?
            .iter()
            .map(|x| bipartition_flip(t, x))
            .collect(),
    };
    let m = adjacency_matrix(t);
    check_basis(&m, &int(lambda), &basis)?;
    Ok(basis)
}

fn eigenvalue_one_basis(t: &Tree) -> Result<Vec<SignVector>> {
    let m = adjacency_matrix(t);
    let d = Decomposition::new(&m, &Rational::one())?;
    let n = t.len();
    let mut pieces = Vec::with_capacity(d.support.eigen_components.len());
    for members in &d.support.eigen_components {
        let cert = is_class_c(&component_tree(t, members))
            .certificate
            .ok_or_else(|| {
                Error::Precondition("an eigen-component has no {1, -1} eigenvector".into())
            })?;
        let mut full = vec![Rational::zero(); n];
        for (&u, &s) in members.iter().zip(cert.entries()) {
            full[u] = int(i64::from(s));
        }
        pieces.push(full);
    }
    kernel_basis(&d.skeleton.forest)
        .iter()
        .map(|s| {
            let x = d.lift_with(&s.to_rationals(), &pieces)?;
            SignVector::from_rationals(&x).map_err(|_| {
                Error::Internal("sign correction left an entry outside {0, 1, -1}".into())
            })
        })
        .collect()
}

fn check_basis(m: &TreePatternMatrix, lambda: &Rational, basis: &[SignVector]) -> Result<()> {
    let vectors: Vec<Vec<Rational>> = basis.iter().map(SignVector::to_rationals).collect();
    for x in &vectors {
        if !verify_eigenvector(m, lambda, x)? {
            return Err(Error::Internal(
                "basis vector fails the eigen-equation".into(),
            ));
        }
    }
    let dim = eigenspace_basis(m, lambda).dim();
    if Matrix::rank_of_vectors(&vectors) != dim || vectors.len() != dim {
        return Err(Error::Internal(format!(
            "constructed {} vectors of rank {} for multiplicity {dim} at {}",
            vectors.len(),
            Matrix::rank_of_vectors(&vectors),
            format_rational(lambda)
        )));
    }
    Ok(())
}
