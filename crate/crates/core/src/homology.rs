//! Smith normal form over ℤ and the finitely generated abelian groups it yields.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::ChainComplex;
use crate::matrix::{IntMatrix, Matrix};

pub type BigMatrix = Matrix<BigInt>;

/// Invariant factors of a matrix, plus `U`, `V` with `U·M·V = S` when requested.
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | … | d_r`, all positive.
    pub diagonal: Vec<BigInt>,
    pub transforms: Option<SmithTransforms>,
}

#[derive(Debug, Clone)]
pub struct SmithTransforms {
    pub left: BigMatrix,
    pub right: BigMatrix,
    pub normal: BigMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    smith_normal_form_big(&m.map(|&x| BigInt::from(x)), with_transforms)
}

/// Elimination with the smallest-magnitude nonzero pivot (ties broken by row,
/// then column index) over arbitrary-precision integers.
pub fn smith_normal_form_big(m: &BigMatrix, with_transforms: bool) -> SmithForm {
    let mut calc = SnfCalc {
        a: m.clone(),
        u: with_transforms.then(|| BigMatrix::identity(m.rows())),
        v: with_transforms.then(|| BigMatrix::identity(m.cols())),
    };
    let diagonal = calc.run();
    let transforms = match (calc.u, calc.v) {
        (Some(left), Some(right)) => Some(SmithTransforms {
            left,
            right,
            normal: calc.a,
        }),
        _ => None,
    };
    SmithForm { diagonal, transforms }
}

struct SnfCalc {
    a: BigMatrix,
    u: Option<BigMatrix>,
    v: Option<BigMatrix>,
}

impl SnfCalc {
    fn run(&mut self) -> Vec<BigInt> {
        let (rows, cols) = self.a.shape();
        let mut diagonal = Vec::new();
        for t in 0..rows.min(cols) {
            let Some((pr, pc)) = self.pivot(t) else { break };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                if !self.clear_column(t) {
                    continue;
                }
                if !self.clear_row(t) {
                    continue;
                }
                // Pivot must divide everything remaining; otherwise fold the
                // offending row into row t and go again.
                match self.non_divisible_row(t) {
                    Some(i) => self.add_row(i, t, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.a[(t, t)].clone());
        }
        diagonal
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (rows, cols) = self.a.shape();
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Reduces column `t` below the pivot. Returns false if a smaller
    /// remainder was swapped into the pivot position and the caller must retry.
    fn clear_column(&mut self, t: usize) -> bool {
        let rows = self.a.rows();
        for i in t + 1..rows {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
            self.add_row(t, i, &-q);
            if !self.a[(i, t)].is_zero() {
                self.swap_rows(t, i);
                return false;
            }
        }
        true
    }

    fn clear_row(&mut self, t: usize) -> bool {
        let cols = self.a.cols();
        for j in t + 1..cols {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
            self.add_col(t, j, &-q);
            if !self.a[(t, j)].is_zero() {
                self.swap_cols(t, j);
                return false;
            }
        }
        true
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let (rows, cols) = self.a.shape();
        let p = &self.a[(t, t)];
        (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(p)))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row[dst] += c · row[src]
    fn add_row(&mut self, src: usize, dst: usize, c: &BigInt) {
        add_row(&mut self.a, src, dst, c);
        if let Some(u) = &mut self.u {
            add_row(u, src, dst, c);
        }
    }

    /// col[dst] += c · col[src]
    fn add_col(&mut self, src: usize, dst: usize, c: &BigInt) {
        add_col(&mut self.a, src, dst, c);
        if let Some(v) = &mut self.v {
            add_col(v, src, dst, c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        add_row(&mut self.a, i, i, &BigInt::from(-2));
        if let Some(u) = &mut self.u {
            add_row(u, i, i, &BigInt::from(-2));
        }
    }
}

fn add_row(m: &mut BigMatrix, src: usize, dst: usize, c: &BigInt) {
    for j in 0..m.cols() {
        let delta = &m[(src, j)] * c;
        if !delta.is_zero() {
            m[(dst, j)] += delta;
        }
    }
}

fn add_col(m: &mut BigMatrix, src: usize, dst: usize, c: &BigInt) {
    for i in 0..m.rows() {
        let delta = &m[(i, src)] * c;
        if !delta.is_zero() {
            m[(i, dst)] += delta;
        }
    }
}

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/t_1 ⊕ … ⊕ ℤ/t_m`
/// with `1 < t_1 | t_2 | … | t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupPresentation {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl GroupPresentation {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Keeps the invariant factors greater than one.
    pub fn new(rank: usize, invariant_factors: &[BigInt]) -> Self {
        let torsion = invariant_factors
            .iter()
            .map(|d| d.magnitude().clone())
            .filter(|d| *d > BigUint::one())
            .collect();
        Self { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Factor {
            Small(u64),
            Big(String),
        }
        let torsion: Vec<Factor> = self
            .torsion
            .iter()
            .map(|t| t.to_u64().map_or_else(|| Factor::Big(t.to_string()), Factor::Small))
            .collect();
        let mut s = serializer.serialize_struct("GroupPresentation", 3)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("torsion", &torsion)?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}

fn rank_of(m: Option<&IntMatrix>) -> usize {
    m.map_or(0, |m| smith_normal_form(m, false).rank())
}

/// `ker(outgoing) / im(incoming)` at degree `k`.
///
/// The kernel is a saturated sublattice, so the torsion of the quotient is
/// the torsion of `ℤ^n / im(incoming)`: the invariant factors above one.
pub fn group_at(complex: &ChainComplex, k: usize) -> GroupPresentation {
    let n = complex.rank_at(k);
    if n == 0 {
        return GroupPresentation::trivial();
    }
    let out_rank = rank_of(complex.outgoing(k));
    let incoming = complex.incoming(k).map(|m| smith_normal_form(m, false));
    let in_rank = incoming.as_ref().map_or(0, SmithForm::rank);
    GroupPresentation::new(n - out_rank - in_rank, incoming.as_ref().map_or(&[], |s| &s.diagonal))
}

/// `group_at` for every degree `0..=top_degree`; empty for the zero complex.
pub fn all_groups(complex: &ChainComplex) -> Vec<GroupPresentation> {
    complex
        .top_degree()
        .map_or_else(Vec::new, |top| (0..=top).map(|k| group_at(complex, k)).collect())
}

/// Kernel of a map out of a free group of rank `domain`; always free.
pub fn kernel_group(map: Option<&IntMatrix>, domain: usize) -> GroupPresentation {
    GroupPresentation::free(domain - rank_of(map))
}

/// `ℤ^codomain / im(map)`.
pub fn cokernel_group(map: Option<&IntMatrix>, codomain: usize) -> GroupPresentation {
    match map {
        None => GroupPresentation::free(codomain),
        Some(m) => {
            let s = smith_normal_form(m, false);
            GroupPresentation::new(codomain - s.rank(), &s.diagonal)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{chain_complex, cochain, order_complex, relative_chain_complex, Relation};
    use crate::fixtures;
    use crate::order::decompose;

    fn big(rows: Vec<Vec<i64>>) -> BigMatrix {
        IntMatrix::from_rows(rows).map(|&x| BigInt::from(x))
    }

    fn diag(m: Vec<Vec<i64>>) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(m), false)
            .diagonal
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    fn check_transforms(rows: Vec<Vec<i64>>) {
        let m = IntMatrix::from_rows(rows.clone());
        let s = smith_normal_form(&m, true);
        let t = s.transforms.unwrap();
        let prod = &(&t.left * &big(rows)) * &t.right;
        assert_eq!(prod, t.normal);
        for i in 0..t.normal.rows() {
            for j in 0..t.normal.cols() {
                let expected = if i == j && i < s.diagonal.len() {
                    s.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(t.normal[(i, j)], expected);
            }
        }
    }

    #[test]
    fn snf_examples() {
        assert_eq!(diag(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(diag(vec![vec![-1], vec![-1]]), vec![1]);
        assert_eq!(
            diag(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert!(smith_normal_form(&IntMatrix::zeros(0, 3), true).diagonal.is_empty());
        assert!(smith_normal_form(&IntMatrix::zeros(2, 2), false).diagonal.is_empty());
    }

    #[test]
    fn snf_transforms_are_exact() {
        check_transforms(vec![vec![2, 0], vec![0, 3]]);
        check_transforms(vec![vec![-1], vec![-1]]);
        check_transforms(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check_transforms(vec![vec![0, 0, 5], vec![0, 7, 0]]);
    }

    #[test]
    fn snf_survives_large_entries() {
        let m = IntMatrix::from_rows(vec![vec![i64::MAX, i64::MAX - 1], vec![i64::MAX - 2, i64::MAX]]);
        let s = smith_normal_form(&m, true);
        assert_eq!(s.rank(), 2);
        let t = s.transforms.unwrap();
        assert_eq!(&(&t.left * &m.map(|&x| BigInt::from(x))) * &t.right, t.normal);
    }

    #[test]
    fn group_display() {
        assert_eq!(GroupPresentation::trivial().to_string(), "0");
        assert_eq!(GroupPresentation::free(1).to_string(), "Z");
        assert_eq!(GroupPresentation::free(2).to_string(), "Z^2");
        let g = GroupPresentation::new(1, &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(g.to_string(), "Z + Z/2");
        let json = serde_json::to_value(&g).unwrap();
        assert_eq!(json, serde_json::json!({"rank": 1, "torsion": [2], "text": "Z + Z/2"}));
    }

    fn all(points: &crate::space::Preorder) -> Vec<String> {
        points.points().to_vec()
    }

    #[test]
    fn circle_homology() {
        let p = fixtures::pseudo_s1().specialisation_preorder();
        let c = chain_complex(&order_complex(&p, &all(&p), Relation::Strict).unwrap());
        assert_eq!(
            all_groups(&c),
            vec![GroupPresentation::free(1), GroupPresentation::free(1)]
        );
        assert!(group_at(&c, 1 + 5).is_trivial());
    }

    #[test]
    fn relative_cohomology_of_duplicated_circle() {
        let p = fixtures::pseudo_s1_dup().specialisation_preorder();
        let d = decompose(&p);
        let full = chain_complex(&order_complex(&p, &all(&p), Relation::Strict).unwrap());
        let part = chain_complex(&order_complex(&p, &d.representatives, Relation::Strict).unwrap());
        let rel = cochain(&relative_chain_complex(&full, &part).unwrap()).unwrap();
        assert!(group_at(&rel, 0).is_trivial());
        assert_eq!(group_at(&rel, 1), GroupPresentation::free(1));
        assert_eq!(
            all_groups(&full),
            vec![GroupPresentation::free(1), GroupPresentation::free(2)]
        );
    }

    #[test]
    fn single_vertex_groups() {
        let p = crate::space::Preorder::generated_by(vec!["v".into()], &[]).unwrap();
        let c = chain_complex(&order_complex(&p, &all(&p), Relation::Given).unwrap());
        assert_eq!(all_groups(&c), vec![GroupPresentation::free(1)]);
    }

    #[test]
    fn torsion_from_a_cokernel() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let g = cokernel_group(Some(&m), 2);
        assert_eq!(g.to_string(), "Z/6");
        assert_eq!(kernel_group(Some(&m), 2), GroupPresentation::trivial());
        assert_eq!(kernel_group(None, 3), GroupPresentation::free(3));
    }
}
