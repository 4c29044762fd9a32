//! Order complexes and their integer (co)chain complexes.
//!
//! A face of an order complex is a chain of the poset. It is stored as a
//! vertex sequence in ascending order along the chain, which fixes its
//! orientation. Within a dimension faces are sorted lexicographically by that
//! sequence, so boundary matrices are reproducible.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::order::{antisymmetry_violation, strictify};
use crate::space::Preorder;

/// Oriented simplex: vertices in orientation order.
pub type Face = Vec<String>;

/// Basis element label of a chain group.
pub type Label = Vec<String>;

pub const COMPLEX_FORMAT: &str = "prehom.complex/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("relation is not antisymmetric on the chosen points: {0:?} and {1:?} are related both ways")]
    NotAPoset(String, String),
    #[error("degree {degree}: basis element {label:?} of the subcomplex is not in the ambient complex")]
    NotASubcomplex { degree: usize, label: Label },
    #[error("complexes have different directions")]
    DirectionMismatch,
    #[error("expected a homological (chain) complex")]
    NotHomological,
    #[error("differential {index} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        index: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("expected {expected} differentials for {degrees} degrees, found {found}")]
    WrongDifferentialCount {
        degrees: usize,
        expected: usize,
        found: usize,
    },
    #[error("consecutive differentials at degree {0} do not compose to zero")]
    NotAComplex(usize),
    #[error("unsupported complex format {0:?}")]
    UnsupportedFormat(String),
    #[error("malformed complex file: {0}")]
    Malformed(String),
}

/// Which relation an order complex is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// The preorder as given (the specialisation preorder `≤`).
    Given,
    /// Its strictification `⪯`.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// The downward closure of `maximal`, with each face oriented by the
    /// position of its vertices in `vertex_order`.
    pub fn from_maximal_faces(vertex_order: &[String], maximal: &[Vec<String>]) -> Result<Self, ComplexError> {
        let rank: HashMap<&str, usize> = vertex_order.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut by_dim: Vec<BTreeSet<Face>> = Vec::new();
        for v in vertex_order {
            insert_face(&mut by_dim, vec![v.clone()]);
        }
        for face in maximal {
            let mut positions = face
                .iter()
                .map(|v| {
                    rank.get(v.as_str())
                        .copied()
                        .ok_or_else(|| ComplexError::UnknownPoint(v.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            positions.sort_unstable();
            positions.dedup();
            let k = positions.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Face = (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| vertex_order[positions[i]].clone())
                    .collect();
                insert_face(&mut by_dim, sub);
            }
        }
        let mut vertices = vertex_order.to_vec();
        vertices.sort();
        Ok(Self {
            vertices,
            faces: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, dim: usize) -> &[Face] {
        self.faces.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.face_counts())
    }

    /// Faces as unordered vertex sets, for orientation-free comparisons.
    pub fn face_sets(&self) -> BTreeSet<BTreeSet<String>> {
        self.faces
            .iter()
            .flatten()
            .map(|f| f.iter().cloned().collect())
            .collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        let all = self.face_sets();
        all.iter().all(|f| {
            f.len() == 1
                || f.iter().all(|v| {
                    let mut g = f.clone();
                    g.remove(v);
                    all.contains(&g)
                })
        }) && self.vertices.iter().all(|v| all.contains(&BTreeSet::from([v.clone()])))
    }
}

fn insert_face(by_dim: &mut Vec<BTreeSet<Face>>, face: Face) {
    let d = face.len() - 1;
    if by_dim.len() <= d {
        by_dim.resize_with(d + 1, BTreeSet::new);
    }
    by_dim[d].insert(face);
}

pub(crate) fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// The order complex of `preorder` (or of its strictification) restricted to
/// `subset`: every nonempty chain is a face.
pub fn order_complex(
    preorder: &Preorder,
    subset: &[String],
    relation: Relation,
) -> Result<SimplicialComplex, ComplexError> {
    let strict;
    let rel = match relation {
        Relation::Given => preorder,
        Relation::Strict => {
            strict = strictify(preorder);
            &strict
        }
    };
    let mut idx = subset
        .iter()
        .map(|p| rel.index_of(p).ok_or_else(|| ComplexError::UnknownPoint(p.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    idx.sort_unstable();
    idx.dedup();
    if let Some((x, y)) = antisymmetry_violation(rel, &idx) {
        let pts = rel.points();
        return Err(ComplexError::NotAPoset(pts[x].clone(), pts[y].clone()));
    }
    let ext = linear_extension(rel, &idx);
    let pts = rel.points();
    let mut by_dim: Vec<BTreeSet<Face>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    extend_chains(rel, &ext, 0, &mut stack, &mut |chain| {
        insert_face(&mut by_dim, chain.iter().map(|&i| pts[i].clone()).collect());
    });
    let vertices = idx.iter().map(|&i| pts[i].clone()).collect();
    Ok(SimplicialComplex {
        vertices,
        faces: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
    })
}

/// Topological order of `subset` with lexicographic tie-break.
fn linear_extension(rel: &Preorder, subset: &[usize]) -> Vec<usize> {
    let mut remaining: BTreeSet<usize> = subset.iter().copied().collect();
    let mut out = Vec::with_capacity(subset.len());
    while !remaining.is_empty() {
        let next = *remaining
            .iter()
            .find(|&&y| !remaining.iter().any(|&x| x != y && rel.leq(x, y)))
            .expect("antisymmetric relation has a minimal element");
        remaining.remove(&next);
        out.push(next);
    }
    out
}

fn extend_chains(rel: &Preorder, ext: &[usize], from: usize, stack: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    for pos in from..ext.len() {
        let v = ext[pos];
        if stack.last().is_some_and(|&top| !rel.leq(top, v)) {
            continue;
        }
        stack.push(v);
        emit(stack);
        extend_chains(rel, ext, pos + 1, stack, emit);
        stack.pop();
    }
}

/// True iff every face of `candidate` is a face of `ambient`.
pub fn is_subcomplex(candidate: &SimplicialComplex, ambient: &SimplicialComplex) -> bool {
    let amb = ambient.face_sets();
    candidate.face_sets().iter().all(|f| amb.contains(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Differentials lower degree.
    Homological,
    /// Differentials raise degree.
    Cohomological,
}

/// A bounded integer (co)chain complex.
///
/// `maps[k]` is the differential between degrees `k` and `k + 1`: for a chain
/// complex it is `∂_{k+1}: C_{k+1} → C_k` (shape `|C_k| × |C_{k+1}|`), for a
/// cochain complex `d^k: C^k → C^{k+1}` (shape `|C^{k+1}| × |C^k|`). Trailing
/// zero groups are trimmed, so `basis.len() - 1` is the top degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    direction: Direction,
    basis: Vec<Vec<Label>>,
    maps: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(direction: Direction, basis: Vec<Vec<Label>>, maps: Vec<IntMatrix>) -> Result<Self, ComplexError> {
        let expected = basis.len().saturating_sub(1);
        if maps.len() != expected {
            return Err(ComplexError::WrongDifferentialCount {
                degrees: basis.len(),
                expected,
                found: maps.len(),
            });
        }
        for (k, m) in maps.iter().enumerate() {
            let shape = map_shape(direction, basis[k].len(), basis[k + 1].len());
            if m.shape() != shape {
                return Err(ComplexError::ShapeMismatch {
                    index: k,
                    expected: shape,
                    found: m.shape(),
                });
            }
        }
        let c = Self::trimmed(direction, basis, maps);
        if let Some(k) = c.first_nonzero_composite() {
            return Err(ComplexError::NotAComplex(k));
        }
        Ok(c)
    }

    fn trimmed(direction: Direction, mut basis: Vec<Vec<Label>>, mut maps: Vec<IntMatrix>) -> Self {
        while basis.last().is_some_and(Vec::is_empty) {
            basis.pop();
            maps.pop();
        }
        maps.truncate(basis.len().saturating_sub(1));
        Self { direction, basis, maps }
    }

    pub fn zero(direction: Direction) -> Self {
        Self {
            direction,
            basis: Vec::new(),
            maps: Vec::new(),
        }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Largest degree with a nonzero group; `None` for the zero complex.
    pub fn top_degree(&self) -> Option<usize> {
        self.basis.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Rank of the free group in degree `k`.
    pub fn rank_at(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis_labels(&self, k: usize) -> &[Label] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    /// The differential between degrees `k` and `k + 1`, if both are in range.
    pub fn map_between(&self, k: usize) -> Option<&IntMatrix> {
        self.maps.get(k)
    }

    /// `map_between(k)`, or the zero map of the right shape.
    pub fn map_between_or_zero(&self, k: usize) -> IntMatrix {
        self.maps.get(k).cloned().unwrap_or_else(|| {
            let (r, c) = map_shape(self.direction, self.rank_at(k), self.rank_at(k + 1));
            IntMatrix::zeros(r, c)
        })
    }

    /// Differential leaving degree `k`.
    pub fn outgoing(&self, k: usize) -> Option<&IntMatrix> {
        match self.direction {
            Direction::Cohomological => self.maps.get(k),
            Direction::Homological => k.checked_sub(1).and_then(|j| self.maps.get(j)),
        }
    }

    /// Differential arriving at degree `k`.
    pub fn incoming(&self, k: usize) -> Option<&IntMatrix> {
        match self.direction {
            Direction::Cohomological => k.checked_sub(1).and_then(|j| self.maps.get(j)),
            Direction::Homological => self.maps.get(k),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.ranks())
    }

    /// Lowest degree at which two consecutive differentials fail to compose to zero.
    pub fn first_nonzero_composite(&self) -> Option<usize> {
        for k in 0..self.maps.len().saturating_sub(1) {
            let composite = match self.direction {
                Direction::Homological => &self.maps[k] * &self.maps[k + 1],
                Direction::Cohomological => &self.maps[k + 1] * &self.maps[k],
            };
            if !composite.is_zero() {
                return Some(k);
            }
        }
        None
    }

    pub fn squares_to_zero(&self) -> bool {
        self.first_nonzero_composite().is_none()
    }

    pub(crate) fn from_parts_unchecked(direction: Direction, basis: Vec<Vec<Label>>, maps: Vec<IntMatrix>) -> Self {
        Self::trimmed(direction, basis, maps)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = ComplexFile {
            format: COMPLEX_FORMAT.to_string(),
            direction: self.direction,
            basis: self.basis.clone(),
            differentials: self
                .maps
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let (from, to) = match self.direction {
                        Direction::Homological => (k + 1, k),
                        Direction::Cohomological => (k, k + 1),
                    };
                    DifferentialFile {
                        from,
                        to,
                        rows: m.rows(),
                        cols: m.cols(),
                        matrix: m.to_rows(),
                    }
                })
                .collect(),
        };
        serde_json::to_value(wire).expect("complex serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ComplexError> {
        let wire: ComplexFile =
            serde_json::from_value(value.clone()).map_err(|e| ComplexError::Malformed(e.to_string()))?;
        if wire.format != COMPLEX_FORMAT {
            return Err(ComplexError::UnsupportedFormat(wire.format));
        }
        let mut maps = Vec::with_capacity(wire.differentials.len());
        for (k, d) in wire.differentials.into_iter().enumerate() {
            let expected = match wire.direction {
                Direction::Homological => (k + 1, k),
                Direction::Cohomological => (k, k + 1),
            };
            if (d.from, d.to) != expected {
                return Err(ComplexError::Malformed(format!(
                    "differential {k} goes {} -> {}, expected {} -> {}",
                    d.from, d.to, expected.0, expected.1
                )));
            }
            if d.matrix.len() != d.rows || d.matrix.iter().any(|r| r.len() != d.cols) {
                return Err(ComplexError::Malformed(format!(
                    "differential {k} does not match its stated shape"
                )));
            }
            maps.push(IntMatrix::from_vec(
                d.rows,
                d.cols,
                d.matrix.into_iter().flatten().collect(),
            ));
        }
        Self::new(wire.direction, wire.basis, maps)
    }
}

fn map_shape(direction: Direction, lower: usize, upper: usize) -> (usize, usize) {
    match direction {
        Direction::Homological => (lower, upper),
        Direction::Cohomological => (upper, lower),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    format: String,
    direction: Direction,
    basis: Vec<Vec<Label>>,
    differentials: Vec<DifferentialFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DifferentialFile {
    from: usize,
    to: usize,
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<i64>>,
}

/// Simplicial chain complex: degree-`k` basis is the `k`-faces, and
/// `∂[v_0 … v_k] = Σ (−1)^i [v_0 … v̂_i … v_k]`.
pub fn chain_complex(complex: &SimplicialComplex) -> ChainComplex {
    let basis: Vec<Vec<Label>> = complex.faces.clone();
    let mut maps = Vec::new();
    for k in 1..basis.len() {
        let lower: HashMap<&Face, usize> = basis[k - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = IntMatrix::zeros(basis[k - 1].len(), basis[k].len());
        for (j, face) in basis[k].iter().enumerate() {
            for i in 0..face.len() {
                let mut facet = face.clone();
                facet.remove(i);
                let row = lower[&facet];
                m[(row, j)] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        maps.push(m);
    }
    ChainComplex::trimmed(Direction::Homological, basis, maps)
}

/// The quotient of `ambient` by `sub`: basis elements of `sub` are deleted
/// together with their rows and columns. Works for either direction, since
/// dualizing commutes with the deletion.
pub fn relative_chain_complex(ambient: &ChainComplex, sub: &ChainComplex) -> Result<ChainComplex, ComplexError> {
    if ambient.direction != sub.direction {
        return Err(ComplexError::DirectionMismatch);
    }
    let key = |l: &Label| -> BTreeSet<String> { l.iter().cloned().collect() };
    let mut kept: Vec<Vec<usize>> = Vec::with_capacity(ambient.basis.len());
    for (k, labels) in ambient.basis.iter().enumerate() {
        let amb: HashMap<BTreeSet<String>, usize> = labels.iter().enumerate().map(|(i, l)| (key(l), i)).collect();
        let mut deleted = vec![false; labels.len()];
        for l in sub.basis_labels(k) {
            match amb.get(&key(l)) {
                Some(&i) => deleted[i] = true,
                None => {
                    return Err(ComplexError::NotASubcomplex {
                        degree: k,
                        label: l.clone(),
                    })
                }
            }
        }
        kept.push((0..labels.len()).filter(|&i| !deleted[i]).collect());
    }
    if let Some(k) = (ambient.basis.len()..sub.basis.len()).find(|&k| !sub.basis[k].is_empty()) {
        return Err(ComplexError::NotASubcomplex {
            degree: k,
            label: sub.basis[k][0].clone(),
        });
    }
    let basis: Vec<Vec<Label>> = ambient
        .basis
        .iter()
        .zip(&kept)
        .map(|(labels, keep)| keep.iter().map(|&i| labels[i].clone()).collect())
        .collect();
    let maps = ambient
        .maps
        .iter()
        .enumerate()
        .map(|(k, m)| match ambient.direction {
            Direction::Homological => m.select(&kept[k], &kept[k + 1]),
            Direction::Cohomological => m.select(&kept[k + 1], &kept[k]),
        })
        .collect();
    Ok(ChainComplex::trimmed(ambient.direction, basis, maps))
}

/// `Hom(·, ℤ)`: same bases, `d^k = ∂_{k+1}ᵀ`.
pub fn cochain(chain: &ChainComplex) -> Result<ChainComplex, ComplexError> {
    if chain.direction != Direction::Homological {
        return Err(ComplexError::NotHomological);
    }
    Ok(ChainComplex {
        direction: Direction::Cohomological,
        basis: chain.basis.clone(),
        maps: chain.maps.iter().map(IntMatrix::transpose).collect(),
    })
}
