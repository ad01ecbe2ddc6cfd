//! Exact rational linear algebra for tree-patterned matrices.
//!
//! Null spaces come from fraction-free (Bareiss) forward elimination: every
//! row is first cleared of denominators, the echelon form is computed over
//! the integers, and the basis is read off by back substitution with the
//! free columns taken in index order. Elimination runs on `i128` with
//! checked arithmetic and restarts on `BigInt` if anything overflows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Forest, VertexId};
use crate::rational::{format_rational, int, normalize_leading, parse_rational, Rational};

/// Dense rational matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                actual: bad.len(),
            });
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `self - shift * I` for square matrices.
    pub fn shifted(&self, shift: &Rational) -> Matrix {
        let mut out = self.clone();
        if !shift.is_zero() {
            for i in 0..self.rows.min(self.cols) {
                let v = out.get(i, i) - shift;
                out.set(i, i, v);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Canonical null space basis: one vector per free column in index order,
    /// each scaled so that its first non-zero entry is one.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        Echelon::of(self).null_space()
    }

    /// Rows given as vectors; the matrix whose columns are `vectors` has this rank.
    pub fn rank_of_vectors(vectors: &[Vec<Rational>]) -> usize {
        if vectors.is_empty() {
            return 0;
        }
        Matrix::from_rows(vectors.to_vec()).map_or(0, |m| m.rank())
    }
}

/// Integer row echelon form of a rational matrix.
struct Echelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn of(m: &Matrix) -> Self {
        let int_rows: Vec<Vec<BigInt>> =
            (0..m.rows).map(|r| clear_denominators(m.row(r))).collect();
        let small: Option<Vec<Vec<i128>>> = int_rows
            .iter()
            .map(|row| row.iter().map(ToPrimitive::to_i128).collect())
            .collect();
        if let Some(mut small) = small {
            if let Some(pivots) = bareiss_i128(&mut small, m.cols) {
                let rows = small
                    .into_iter()
                    .map(|row| row.into_iter().map(BigInt::from).collect())
                    .collect();
                return Echelon {
                    cols: m.cols,
                    rows,
                    pivots,
                };
            }
        }
        let mut rows = int_rows;
        let pivots = bareiss_big(&mut rows, m.cols);
        Echelon {
            cols: m.cols,
            rows,
            pivots,
        }
    }

    fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &pc) in self.pivots.iter().enumerate().rev() {
                let row = &self.rows[r];
                let mut acc = Rational::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                if !acc.is_zero() {
                    x[pc] = -acc / Rational::from_integer(row[pc].clone());
                }
            }
            normalize_leading(&mut x);
            basis.push(x);
        }
        basis
    }
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Fraction-free forward elimination in place. Returns the pivot columns,
/// or `None` if an intermediate value overflowed.
fn bareiss_i128(a: &mut [Vec<i128>], cols: usize) -> Option<Vec<usize>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let v = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = v / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Some(pivots)
}

fn bareiss_big(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let v = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Square rational matrix whose off-diagonal non-zero pattern is
/// combinatorially symmetric and forms a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePatternMatrix {
    entries: Matrix,
    pattern: Forest,
}

impl TreePatternMatrix {
    pub fn new(vertices: Vec<VertexId>, entries: Matrix) -> Result<Self> {
        let n = vertices.len();
        if entries.rows() != n || entries.cols() != n {
            return Err(Error::InvalidMatrix(format!(
                "expected a {n}x{n} matrix, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (entries.get(i, j).is_zero(), entries.get(j, i).is_zero());
                if a != b {
                    return Err(Error::InvalidMatrix(format!(
                        "pattern not symmetric at ({}, {})",
                        vertices[i], vertices[j]
                    )));
                }
                if !a {
                    edges.push((i, j));
                }
            }
        }
        let pattern = Forest::from_parts(vertices, edges)
            .map_err(|e| Error::InvalidMatrix(format!("pattern graph is not a forest: {e}")))?;
        Ok(TreePatternMatrix { entries, pattern })
    }

    /// The 0/1 adjacency matrix of `forest`, rows in vertex order.
    pub fn adjacency(forest: &Forest) -> Self {
        let n = forest.len();
        let mut entries = Matrix::zeros(n, n);
        for &(u, v) in forest.edges() {
            entries.set(u, v, Rational::one());
            entries.set(v, u, Rational::one());
        }
        TreePatternMatrix {
            entries,
            pattern: forest.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.pattern.len()
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.entries.get(i, j)
    }

    pub fn pattern(&self) -> &Forest {
        &self.pattern
    }

    pub fn vertex_order(&self) -> &[VertexId] {
        self.pattern.labels()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.order()).all(|i| self.entry(i, i).is_zero())
    }

    pub fn is_value_symmetric(&self) -> bool {
        self.pattern
            .edges()
            .iter()
            .all(|&(u, v)| self.entry(u, v) == self.entry(v, u))
    }

    /// Principal submatrix on `vertices` (in the given order).
    pub fn principal_submatrix(&self, vertices: &[usize]) -> TreePatternMatrix {
        let k = vertices.len();
        let mut entries = Matrix::zeros(k, k);
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate() {
                entries.set(a, b, self.entry(i, j).clone());
            }
        }
        TreePatternMatrix {
            entries,
            pattern: self.pattern.induced(vertices),
        }
    }

    pub fn to_document(&self) -> MatrixDocument {
        let n = self.order();
        MatrixDocument {
            order: n,
            vertex_order: self.vertex_order().iter().map(|v| v.to_string()).collect(),
            entries: (0..n)
                .map(|i| self.entries.row(i).iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn from_document(doc: &MatrixDocument) -> Result<Self> {
        if doc.vertex_order.len() != doc.order || doc.entries.len() != doc.order {
            return Err(Error::InvalidMatrix(format!(
                "order {} disagrees with {} labels and {} rows",
                doc.order,
                doc.vertex_order.len(),
                doc.entries.len()
            )));
        }
        let vertices = doc
            .vertex_order
            .iter()
            .map(|l| VertexId::new(l.clone()))
            .collect::<Result<Vec<_>>>()?;
        let rows = doc
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|s| {
                        parse_rational(s)
                            .map_err(|e| Error::InvalidMatrix(format!("row {}: {e}", i + 1)))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TreePatternMatrix::new(vertices, Matrix::from_rows(rows)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("matrix document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        TreePatternMatrix::from_document(&doc)
    }
}

/// Matrix exchange document. Entries are `p/q` or integer strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub order: usize,
    pub vertex_order: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

/// A basis of one eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalBasis {
    pub lambda: Rational,
    pub vectors: Vec<Vec<Rational>>,
    /// Witness eigen-components (indices in discovery order) when the basis
    /// is known to be straight.
    pub straight_order: Option<Vec<usize>>,
}

impl RationalBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Vertices where some basis vector is non-zero.
    pub fn support_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in &self.vectors {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    mask[i] = true;
                }
            }
        }
        mask
    }
}

pub fn adjacency_matrix(forest: &Forest) -> TreePatternMatrix {
    TreePatternMatrix::adjacency(forest)
}

/// Exact basis of the null space of `m - lambda I`; empty iff `lambda` is not
/// an eigenvalue.
pub fn eigenspace_basis(m: &TreePatternMatrix, lambda: &Rational) -> RationalBasis {
    RationalBasis {
        lambda: lambda.clone(),
        vectors: m.entries.shifted(lambda).null_space(),
        straight_order: None,
    }
}

pub fn eigenspace_dim(m: &TreePatternMatrix, lambda: &Rational) -> usize {
    m.order() - m.entries.shifted(lambda).rank()
}

/// True iff `x` is non-zero and `m x = lambda x` exactly.
pub fn verify_eigenvector(
    m: &TreePatternMatrix,
    lambda: &Rational,
    x: &[Rational],
) -> Result<bool> {
    if x.len() != m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            actual: x.len(),
        });
    }
    if x.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    let mx = m.entries.mul_vec(x)?;
    Ok(mx.iter().zip(x).all(|(a, b)| *a == lambda * b))
}

/// Integer eigenvalues of the adjacency matrix with their multiplicities.
/// Scans `|k| <= max degree`, which bounds the spectral radius of a forest.
pub fn integer_spectrum(forest: &Forest) -> BTreeMap<i64, usize> {
    let a = TreePatternMatrix::adjacency(forest);
    let bound = forest.max_degree() as i64;
    (-bound..=bound)
        .filter_map(|k| {
            let dim = eigenspace_dim(&a, &int(k));
            (dim > 0).then_some((k, dim))
        })
        .collect()
}

/// Components of the subgraph induced by the support of `basis`.
pub fn eigen_components(m: &TreePatternMatrix, basis: &RationalBasis) -> Vec<Vec<usize>> {
    let mask = basis.support_mask(m.order());
    m.pattern.component_sets_within(&mask)
}

fn check_full_basis(m: &TreePatternMatrix, b: &RationalBasis) -> Result<()> {
    for (i, v) in b.vectors.iter().enumerate() {
        if !verify_eigenvector(m, &b.lambda, v)? {
            return Err(Error::InvalidBasis(format!(
                "vector {} is not an eigenvector for {}",
                i + 1,
                format_rational(&b.lambda)
            )));
        }
    }
    if Matrix::rank_of_vectors(&b.vectors) != b.vectors.len() {
        return Err(Error::InvalidBasis("vectors are linearly dependent".into()));
    }
    let dim = eigenspace_dim(m, &b.lambda);
    if dim != b.vectors.len() {
        return Err(Error::InvalidBasis(format!(
            "{} vectors for an eigenspace of dimension {dim}",
            b.vectors.len()
        )));
    }
    Ok(())
}

/// Rewrites an eigenspace basis into a straight one.
///
/// Each vector in turn picks the first unused eigen-component (discovery
/// order) on which it is non-zero as its witness, and that component is
/// eliminated from every later vector. Afterwards vector `i` is zero-free on
/// its witness and vanishes on the witnesses of all earlier vectors.
pub fn straighten_basis(m: &TreePatternMatrix, b: &RationalBasis) -> Result<RationalBasis> {
    check_full_basis(m, b)?;
    let components = eigen_components(m, b);
    let mut vectors = b.vectors.clone();
    let mut used = vec![false; components.len()];
    let mut witnesses = Vec::with_capacity(vectors.len());
    for j in 0..vectors.len() {
        let (k, anchor) = components
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .find_map(|(k, comp)| {
                comp.iter()
                    .find(|&&u| !vectors[j][u].is_zero())
                    .map(|&u| (k, u))
            })
            .ok_or_else(|| Error::Internal("straightening ran out of components".into()))?;
        used[k] = true;
        witnesses.push(k);
        let (head, tail) = vectors.split_at_mut(j + 1);
        let pivot = &head[j];
        for later in tail.iter_mut() {
            if later[anchor].is_zero() {
                continue;
            }
            let factor = &later[anchor] / &pivot[anchor];
            for (x, p) in later.iter_mut().zip(pivot.iter()) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }
    let out = RationalBasis {
        lambda: b.lambda.clone(),
        vectors,
        straight_order: Some(witnesses),
    };
    if !is_straight(
        &out.vectors,
        &components,
        out.straight_order.as_deref().unwrap(),
    ) {
        return Err(Error::Internal(
            "straightened basis failed the straightness check".into(),
        ));
    }
    Ok(out)
}

/// Straightness check: witnesses are distinct, vector `i` is non-zero on
/// every vertex of `components[witnesses[i]]` and zero on the witnesses of
/// all earlier vectors.
pub fn is_straight(
    vectors: &[Vec<Rational>],
    components: &[Vec<usize>],
    witnesses: &[usize],
) -> bool {
    if vectors.len() != witnesses.len() {
        return false;
    }
    let mut seen = vec![false; components.len()];
    for &w in witnesses {
        if w >= components.len() || std::mem::replace(&mut seen[w], true) {
            return false;
        }
    }
    vectors.iter().enumerate().all(|(i, v)| {
        components[witnesses[i]].iter().all(|&u| !v[u].is_zero())
            && witnesses[..i]
                .iter()
                .all(|&w| components[w].iter().all(|&u| v[u].is_zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn forest(text: &str) -> Forest {
        Forest::parse(text).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    const P3: &str = "a b\nb c";
    const P4: &str = "a b\nb c\nc d";
    const P5: &str = "a b\nb c\nc d\nd e";
    const STAR: &str = "h a\nh b\nh c";

    #[test]
    fn adjacency_small_cases() {
        let k2 = adjacency_matrix(&forest("a b"));
        assert_eq!(
            k2.entries(),
            &Matrix::from_rows(vec![ints(&[0, 1]), ints(&[1, 0])]).unwrap()
        );
        let p3 = adjacency_matrix(&forest(P3));
        assert_eq!(
            p3.entries(),
            &Matrix::from_rows(vec![ints(&[0, 1, 0]), ints(&[1, 0, 1]), ints(&[0, 1, 0])]).unwrap()
        );
        let k1 = adjacency_matrix(&forest("v"));
        assert_eq!(k1.entries(), &Matrix::from_rows(vec![ints(&[0])]).unwrap());
    }

    #[test]
    fn eigenspace_examples() {
        let k2 = adjacency_matrix(&forest("a b"));
        assert_eq!(eigenspace_basis(&k2, &int(1)).vectors, vec![ints(&[1, 1])]);
        let star = adjacency_matrix(&forest(STAR));
        assert!(eigenspace_basis(&star, &int(1)).vectors.is_empty());
        let p3 = adjacency_matrix(&forest(P3));
        assert_eq!(
            eigenspace_basis(&p3, &int(0)).vectors,
            vec![ints(&[1, 0, -1])]
        );
    }

    #[test]
    fn verify_examples() {
        let p5 = adjacency_matrix(&forest(P5));
        assert!(verify_eigenvector(&p5, &int(1), &ints(&[1, 1, 0, -1, -1])).unwrap());
        assert!(!verify_eigenvector(&p5, &int(1), &ints(&[0, 0, 0, 0, 0])).unwrap());
        let p3 = adjacency_matrix(&forest(P3));
        assert!(!verify_eigenvector(&p3, &int(0), &ints(&[1, 1, -1])).unwrap());
        assert!(matches!(
            verify_eigenvector(&p3, &int(0), &ints(&[1, 1])),
            Err(Error::DimensionMismatch {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn spectrum_examples() {
        let k2 = integer_spectrum(&forest("a b"));
        assert_eq!(k2, BTreeMap::from([(-1, 1), (1, 1)]));
        assert_eq!(integer_spectrum(&forest(STAR)), BTreeMap::from([(0, 2)]));
        assert!(integer_spectrum(&forest(P4)).is_empty());
    }

    #[test]
    fn straighten_star_null_space() {
        // Center first, then three leaves.
        let star = adjacency_matrix(&forest(STAR));
        let b = RationalBasis {
            lambda: int(0),
            vectors: vec![ints(&[0, 1, -1, 0]), ints(&[0, 1, 0, -1])],
            straight_order: None,
        };
        let s = straighten_basis(&star, &b).unwrap();
        assert_eq!(s.straight_order, Some(vec![0, 1]));
        assert_eq!(s.vectors, vec![ints(&[0, 1, -1, 0]), ints(&[0, 0, 1, -1])]);
    }

    #[test]
    fn straighten_leaves_straight_input_alone() {
        let p5 = adjacency_matrix(&forest(P5));
        let b = eigenspace_basis(&p5, &int(1));
        let s = straighten_basis(&p5, &b).unwrap();
        assert_eq!(s.vectors, b.vectors);

        let star = adjacency_matrix(&forest(STAR));
        let b = RationalBasis {
            lambda: int(0),
            vectors: vec![ints(&[0, 1, -1, 0]), ints(&[0, 0, 1, -1])],
            straight_order: None,
        };
        assert_eq!(straighten_basis(&star, &b).unwrap().vectors, b.vectors);
    }

    #[test]
    fn straighten_rejects_bad_bases() {
        let star = adjacency_matrix(&forest(STAR));
        let dependent = RationalBasis {
            lambda: int(0),
            vectors: vec![ints(&[0, 1, -1, 0]), ints(&[0, 2, -2, 0])],
            straight_order: None,
        };
        assert!(matches!(
            straighten_basis(&star, &dependent),
            Err(Error::InvalidBasis(_))
        ));
        let partial = RationalBasis {
            lambda: int(0),
            vectors: vec![ints(&[0, 1, -1, 0])],
            straight_order: None,
        };
        assert!(matches!(
            straighten_basis(&star, &partial),
            Err(Error::InvalidBasis(_))
        ));
        let wrong = RationalBasis {
            lambda: int(0),
            vectors: vec![ints(&[1, 0, 0, 0])],
            straight_order: None,
        };
        assert!(straighten_basis(&star, &wrong).is_err());
    }

    #[test]
    fn pattern_validation() {
        let ids: Vec<VertexId> = ["x", "y"]
            .iter()
            .map(|s| VertexId::new(*s).unwrap())
            .collect();
        let asym = Matrix::from_rows(vec![ints(&[0, 1]), ints(&[0, 0])]).unwrap();
        assert!(TreePatternMatrix::new(ids.clone(), asym).is_err());
        let ids3: Vec<VertexId> = ["x", "y", "z"]
            .iter()
            .map(|s| VertexId::new(*s).unwrap())
            .collect();
        let triangle =
            Matrix::from_rows(vec![ints(&[0, 1, 1]), ints(&[1, 0, 1]), ints(&[1, 1, 0])]).unwrap();
        assert!(TreePatternMatrix::new(ids3, triangle).is_err());
    }

    #[test]
    fn bigint_fallback_matches() {
        // Entries large enough to overflow i128 during elimination.
        let big = Rational::from_integer(BigInt::from(10).pow(30));
        let m = Matrix::from_rows(vec![
            vec![big.clone(), big.clone() + int(1), int(0)],
            vec![big.clone() - int(1), big.clone(), int(0)],
            vec![int(0), int(0), int(0)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.null_space(), vec![ints(&[0, 0, 1])]);
    }

    #[test]
    fn document_round_trip() {
        let ids: Vec<VertexId> = ["p", "q", "r"]
            .iter()
            .map(|s| VertexId::new(*s).unwrap())
            .collect();
        let m = Matrix::from_rows(vec![
            vec![frac(1, 2), int(2), int(0)],
            vec![int(3), int(0), frac(-7, 3)],
            vec![int(0), int(5), int(0)],
        ])
        .unwrap();
        let tpm = TreePatternMatrix::new(ids, m).unwrap();
        let json = tpm.to_json();
        assert!(json.contains("\"-7/3\""));
        assert_eq!(TreePatternMatrix::from_json(&json).unwrap(), tpm);
    }
}
