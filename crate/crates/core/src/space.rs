//! Finite topological spaces, closures and the specialisation preorder.
//!
//! Points are opaque string identifiers. Every constructor sorts them
//! lexicographically, and that order is the tie-breaker used everywhere
//! downstream (representatives, face orderings, matrix layouts).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A set of point indices into the owning space's sorted point list.
pub type PointSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("a space needs at least one point")]
    NoPoints,
    #[error("point {0:?} is listed twice")]
    DuplicatePoint(String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("the empty set is not open")]
    MissingEmptySet,
    #[error("the whole point set is not open")]
    MissingWholeSet,
    #[error("opens are not closed under union: {} ∪ {} is missing", fmt_set(.0), fmt_set(.1))]
    NotClosedUnderUnion(Vec<String>, Vec<String>),
    #[error("opens are not closed under intersection: {} ∩ {} is missing", fmt_set(.0), fmt_set(.1))]
    NotClosedUnderIntersection(Vec<String>, Vec<String>),
    #[error("minimal open set given for {0:?} does not contain it")]
    MinimalOpenMissingPoint(String),
    #[error("relation is not reflexive at {0:?}")]
    NotReflexive(String),
    #[error("relation is not transitive: {0:?} <= {1:?} <= {2:?} but not {0:?} <= {2:?}")]
    NotTransitive(String, String, String),
}

fn fmt_set(ids: &[String]) -> String {
    format!("{{{}}}", ids.join(", "))
}

fn sorted_points(points: Vec<String>) -> Result<Vec<String>, SpaceError> {
    if points.is_empty() {
        return Err(SpaceError::NoPoints);
    }
    let mut sorted = points;
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(SpaceError::DuplicatePoint(w[0].clone()));
        }
    }
    Ok(sorted)
}

fn index_of(points: &[String]) -> BTreeMap<&str, usize> {
    points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect()
}

fn resolve<'a, I>(index: &BTreeMap<&str, usize>, ids: I) -> Result<PointSet, SpaceError>
where
    I: IntoIterator<Item = &'a String>,
{
    ids.into_iter()
        .map(|id| {
            index
                .get(id.as_str())
                .copied()
                .ok_or_else(|| SpaceError::UnknownPoint(id.clone()))
        })
        .collect()
}

/// A finite point set with a validated topology.
///
/// The topology is held as the smallest open neighbourhood `U_x` of every
/// point; the opens are exactly the unions of these. Two spaces are equal iff
/// they have the same points and the same minimal opens.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: Vec<String>,
    minimal_opens: Vec<PointSet>,
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("points", &self.points)
            .field("minimal_opens", &self.minimal_opens_as_ids())
            .finish()
    }
}

impl FiniteSpace {
    /// Validates `opens` as a topology on `points`.
    pub fn validate_topology(points: Vec<String>, opens: Vec<Vec<String>>) -> Result<Self, SpaceError> {
        let points = sorted_points(points)?;
        let index = index_of(&points);
        let family: BTreeSet<PointSet> = opens.iter().map(|o| resolve(&index, o)).collect::<Result<_, _>>()?;
        let whole: PointSet = (0..points.len()).collect();
        if !family.contains(&PointSet::new()) {
            return Err(SpaceError::MissingEmptySet);
        }
        if !family.contains(&whole) {
            return Err(SpaceError::MissingWholeSet);
        }
        let names = |s: &PointSet| s.iter().map(|&i| points[i].clone()).collect::<Vec<_>>();
        let members: Vec<&PointSet> = family.iter().collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let union: PointSet = a.union(b).copied().collect();
                if !family.contains(&union) {
                    return Err(SpaceError::NotClosedUnderUnion(names(a), names(b)));
                }
                let meet: PointSet = a.intersection(b).copied().collect();
                if !family.contains(&meet) {
                    return Err(SpaceError::NotClosedUnderIntersection(names(a), names(b)));
                }
            }
        }
        let minimal_opens = smallest_members(points.len(), family.iter());
        Ok(Self { points, minimal_opens })
    }

    /// The topology generated by the sets `U_p` (closing under union and
    /// intersection, with `∅` and `X` added). Each `U_p` must contain `p`;
    /// points without an entry get no generator of their own.
    pub fn from_minimal_opens(
        points: Vec<String>,
        minimal: &BTreeMap<String, Vec<String>>,
    ) -> Result<Self, SpaceError> {
        let points = sorted_points(points)?;
        let index = index_of(&points);
        let mut generators = Vec::with_capacity(minimal.len());
        for (owner, members) in minimal {
            let owner_idx = *index
                .get(owner.as_str())
                .ok_or_else(|| SpaceError::UnknownPoint(owner.clone()))?;
            let set = resolve(&index, members)?;
            if !set.contains(&owner_idx) {
                return Err(SpaceError::MinimalOpenMissingPoint(owner.clone()));
            }
            generators.push(set);
        }
        // The smallest open around x in the generated topology is the
        // intersection of the generators containing x.
        let minimal_opens = smallest_members(points.len(), generators.iter());
        Ok(Self { points, minimal_opens })
    }

    /// The Alexandrov space of a preorder: opens are the up-closed sets, so
    /// that the specialisation preorder of the result is `preorder` again.
    pub fn from_preorder(preorder: &Preorder) -> Self {
        let n = preorder.len();
        let minimal_opens = (0..n)
            .map(|x| (0..n).filter(|&y| preorder.leq(x, y)).collect())
            .collect();
        Self {
            points: preorder.points().to_vec(),
            minimal_opens,
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_str().cmp(id)).ok()
    }

    /// Every open set. This enumerates all unions of minimal opens, which
    /// grows exponentially with the width of the space.
    pub fn opens(&self) -> BTreeSet<PointSet> {
        let mut family = BTreeSet::new();
        family.insert(PointSet::new());
        let mut frontier = vec![PointSet::new()];
        while let Some(s) = frontier.pop() {
            for u in &self.minimal_opens {
                let next: PointSet = s.union(u).copied().collect();
                if family.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        family
    }

    /// Opens as sorted identifier lists, shortest first.
    pub fn opens_as_ids(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self.opens().iter().map(|o| self.names(o)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn minimal_opens_as_ids(&self) -> BTreeMap<String, Vec<String>> {
        self.points
            .iter()
            .cloned()
            .zip(self.minimal_opens.iter().map(|u| self.names(u)))
            .collect()
    }

    pub fn minimal_open(&self, point: usize) -> &PointSet {
        &self.minimal_opens[point]
    }

    pub fn names(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|&i| self.points[i].clone()).collect()
    }

    /// Smallest closed set containing `subset`.
    ///
    /// A point lies in the closure of `A` exactly when its smallest open
    /// neighbourhood meets `A`.
    pub fn closure(&self, subset: &[String]) -> Result<Vec<String>, SpaceError> {
        let index = index_of(&self.points);
        let a = resolve(&index, subset)?;
        Ok(self.names(&self.closure_of(&a)))
    }

    pub fn closure_of(&self, subset: &PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.minimal_opens[x].iter().any(|y| subset.contains(y)))
            .collect()
    }

    /// `x ≤ y` iff `x` lies in the closure of `{y}`.
    pub fn specialisation_preorder(&self) -> Preorder {
        let n = self.len();
        let leq = (0..n)
            .map(|x| (0..n).map(|y| self.minimal_opens[x].contains(&y)).collect())
            .collect();
        Preorder {
            points: self.points.clone(),
            leq,
        }
    }

    /// Kolmogorov (T0) check: distinct points have distinct closures.
    pub fn is_t0(&self) -> bool {
        crate::order::is_poset(&self.specialisation_preorder())
    }
}

/// For each point, the intersection of the listed sets that contain it
/// (the whole space if none does).
fn smallest_members<'a>(n: usize, sets: impl Iterator<Item = &'a PointSet> + Clone) -> Vec<PointSet> {
    (0..n)
        .map(|x| {
            sets.clone()
                .filter(|s| s.contains(&x))
                .fold((0..n).collect::<PointSet>(), |acc, s| {
                    acc.intersection(s).copied().collect()
                })
        })
        .collect()
}

/// A reflexive, transitive relation on a lexicographically sorted point list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    points: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Preorder")
            .field("points", &self.points)
            .field("strict_pairs", &self.nontrivial_pairs())
            .finish()
    }
}

impl Preorder {
    /// Validates `pairs` as a preorder; `(x, y)` means `x ≤ y`.
    pub fn new(points: Vec<String>, pairs: &[(String, String)]) -> Result<Self, SpaceError> {
        let points = sorted_points(points)?;
        let leq = relation_matrix(&points, pairs)?;
        Self::from_matrix(points, leq)
    }

    /// Reflexive-transitive closure of an arbitrary relation.
    pub fn generated_by(points: Vec<String>, pairs: &[(String, String)]) -> Result<Self, SpaceError> {
        let points = sorted_points(points)?;
        let mut leq = relation_matrix(&points, pairs)?;
        reflexive_transitive_closure(&mut leq);
        Ok(Self { points, leq })
    }

    /// Validates a relation matrix indexed by the (already sorted) points.
    pub fn from_matrix(points: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, SpaceError> {
        let n = points.len();
        assert!(
            leq.len() == n && leq.iter().all(|r| r.len() == n),
            "relation matrix shape"
        );
        for x in 0..n {
            if !leq[x][x] {
                return Err(SpaceError::NotReflexive(points[x].clone()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x][y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y][z] && !leq[x][z] {
                        return Err(SpaceError::NotTransitive(
                            points[x].clone(),
                            points[y].clone(),
                            points[z].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self { points, leq })
    }

    /// Builds from a matrix that is already known to be a preorder.
    pub(crate) fn from_matrix_unchecked(points: Vec<String>, leq: Vec<Vec<bool>>) -> Self {
        debug_assert!(Self::from_matrix(points.clone(), leq.clone()).is_ok());
        Self { points, leq }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_str().cmp(id)).ok()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// `leq` by identifier; unknown identifiers compare as unrelated.
    pub fn leq_ids(&self, x: &str, y: &str) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.leq[i][j],
            _ => false,
        }
    }

    /// All related pairs `(x, y)` with `x ≤ y`, reflexive ones included.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq[x][y] {
                    out.push((self.points[x].clone(), self.points[y].clone()));
                }
            }
        }
        out
    }

    /// Related pairs with `x ≠ y`.
    pub fn nontrivial_pairs(&self) -> Vec<(String, String)> {
        self.pairs().into_iter().filter(|(x, y)| x != y).collect()
    }
}

fn relation_matrix(points: &[String], pairs: &[(String, String)]) -> Result<Vec<Vec<bool>>, SpaceError> {
    let index = index_of(points);
    let n = points.len();
    let mut leq = vec![vec![false; n]; n];
    for (x, y) in pairs {
        let i = *index
            .get(x.as_str())
            .ok_or_else(|| SpaceError::UnknownPoint(x.clone()))?;
        let j = *index
            .get(y.as_str())
            .ok_or_else(|| SpaceError::UnknownPoint(y.clone()))?;
        leq[i][j] = true;
    }
    Ok(leq)
}

/// Warshall's algorithm plus the diagonal.
pub(crate) fn reflexive_transitive_closure(leq: &mut [Vec<bool>]) {
    let n = leq.len();
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if i == k || !leq[i][k] {
                continue;
            }
            let through = leq[k].clone();
            for (cell, via) in leq[i].iter_mut().zip(through) {
                *cell |= via;
            }
        }
    }
}
