//! Strictification, the indistinguishability equivalence, and the split of a
//! preordered space into its poset part and complementary part.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::space::Preorder;

/// Which member of each equivalence class stands in for the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepresentativePolicy {
    /// Lexicographically least member (the canonical choice).
    #[default]
    Least,
    /// Lexicographically greatest member; used to check that nothing
    /// downstream depends on the choice.
    Greatest,
}

/// The poset part, the complementary part, and the class map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Equivalence classes, each sorted, listed in order of their least member.
    pub classes: Vec<Vec<String>>,
    /// One point per class (the poset part), sorted.
    pub representatives: Vec<String>,
    /// Every point that is not a representative, sorted.
    pub complementary: Vec<String>,
    /// Point to the representative of its class.
    pub class_of: BTreeMap<String, String>,
}

impl Decomposition {
    pub fn representative_of(&self, point: &str) -> Option<&str> {
        self.class_of.get(point).map(String::as_str)
    }
}

/// `x ⪯ y` iff `x = y` or (`x ≤ y` and not `y ≤ x`).
pub fn strictify(preorder: &Preorder) -> Preorder {
    let n = preorder.len();
    let leq = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| x == y || (preorder.leq(x, y) && !preorder.leq(y, x)))
                .collect()
        })
        .collect();
    Preorder::from_matrix_unchecked(preorder.points().to_vec(), leq)
}

/// Classes of `x ∼ y ⇔ x ≤ y ∧ y ≤ x`, as index lists in order of least member.
pub(crate) fn class_indices(preorder: &Preorder) -> Vec<Vec<usize>> {
    let n = preorder.len();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let class: Vec<usize> = (x..n).filter(|&y| preorder.leq(x, y) && preorder.leq(y, x)).collect();
        for &y in &class {
            assigned[y] = true;
        }
        classes.push(class);
    }
    classes
}

pub fn equivalence_classes(preorder: &Preorder) -> Vec<Vec<String>> {
    let pts = preorder.points();
    class_indices(preorder)
        .into_iter()
        .map(|c| c.into_iter().map(|i| pts[i].clone()).collect())
        .collect()
}

pub fn decompose(preorder: &Preorder) -> Decomposition {
    decompose_with(preorder, RepresentativePolicy::Least)
}

pub fn decompose_with(preorder: &Preorder, policy: RepresentativePolicy) -> Decomposition {
    let pts = preorder.points();
    let classes = class_indices(preorder);
    let mut is_rep = vec![false; pts.len()];
    let mut class_of = BTreeMap::new();
    for class in &classes {
        let rep = match policy {
            RepresentativePolicy::Least => class[0],
            RepresentativePolicy::Greatest => class[class.len() - 1],
        };
        is_rep[rep] = true;
        for &x in class {
            class_of.insert(pts[x].clone(), pts[rep].clone());
        }
    }
    let (reps, rest): (Vec<usize>, Vec<usize>) = (0..pts.len()).partition(|&i| is_rep[i]);
    Decomposition {
        classes: classes
            .iter()
            .map(|c| c.iter().map(|&i| pts[i].clone()).collect())
            .collect(),
        representatives: reps.into_iter().map(|i| pts[i].clone()).collect(),
        complementary: rest.into_iter().map(|i| pts[i].clone()).collect(),
        class_of,
    }
}

/// True iff the preorder is antisymmetric.
pub fn is_poset(preorder: &Preorder) -> bool {
    antisymmetry_violation(preorder, &(0..preorder.len()).collect::<Vec<_>>()).is_none()
}

/// First pair of distinct points in `subset` related both ways, if any.
pub(crate) fn antisymmetry_violation(preorder: &Preorder, subset: &[usize]) -> Option<(usize, usize)> {
    for (i, &x) in subset.iter().enumerate() {
        for &y in &subset[i + 1..] {
            if x != y && preorder.leq(x, y) && preorder.leq(y, x) {
                return Some((x.min(y), x.max(y)));
            }
        }
    }
    None
}
