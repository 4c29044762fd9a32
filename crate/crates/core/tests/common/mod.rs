//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; only its data types are read.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use prehom::matrix::IntMatrix;
use prehom::space::{FiniteSpace, PointSet, Preorder};
use prehom::ChainComplex;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(m[(i, j)])).collect())
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Absolute value of the determinant of a square matrix, by Bareiss
/// elimination (the last pivot is the determinant up to sign).
pub fn abs_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = rows.to_vec();
    let mut prev = BigInt::from(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        a.swap(c, p);
        for r in c + 1..n {
            for j in c + 1..n {
                let v = (&a[c][c] * &a[r][j] - &a[r][c] * &a[c][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    num_traits::Signed::abs(&a[n - 1][n - 1])
}

/// Betti numbers over the rationals by rank-nullity, for degrees `0..=top`.
pub fn rational_betti(c: &ChainComplex) -> Vec<usize> {
    let Some(top) = c.top_degree() else {
        return Vec::new();
    };
    (0..=top)
        .map(|k| {
            let out = c.outgoing(k).map_or(0, rational_rank);
            let inc = c.incoming(k).map_or(0, rational_rank);
            c.rank_at(k) - out - inc
        })
        .collect()
}

pub fn euler_from_betti(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

/// Closure as the intersection of every closed set containing `subset`.
pub fn brute_closure(space: &FiniteSpace, subset: &PointSet) -> PointSet {
    let all: PointSet = (0..space.len()).collect();
    space
        .opens()
        .iter()
        .map(|o| all.difference(o).copied().collect::<PointSet>())
        .filter(|closed| subset.is_subset(closed))
        .fold(all.clone(), |acc, c| acc.intersection(&c).copied().collect())
}

/// Every nonempty subset of `subset` that is totally ordered by `rel`, as a
/// set of names. Subsets are enumerated by bitmask.
pub fn brute_chains(
    points: &[String],
    subset: &[usize],
    rel: impl Fn(usize, usize) -> bool,
) -> BTreeSet<BTreeSet<String>> {
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << subset.len()) {
        let members: Vec<usize> = (0..subset.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| subset[i])
            .collect();
        let total = members.iter().all(|&x| members.iter().all(|&y| rel(x, y) || rel(y, x)));
        if total {
            out.insert(members.iter().map(|&i| points[i].clone()).collect());
        }
    }
    out
}

/// Index positions of the named points.
pub fn indices(preorder: &Preorder, names: &[String]) -> Vec<usize> {
    names
        .iter()
        .map(|n| preorder.index_of(n).expect("known point"))
        .collect()
}

/// Product of two matrices over the integers in i128, checked for zero.
pub fn composes_to_zero(first: &IntMatrix, second: &IntMatrix) -> bool {
    let (r, inner) = second.shape();
    let (inner2, c) = first.shape();
    assert_eq!(inner, inner2, "shapes do not compose");
    (0..r).all(|i| {
        (0..c).all(|j| {
            (0..inner)
                .map(|t| second[(i, t)] as i128 * first[(t, j)] as i128)
                .sum::<i128>()
                == 0
        })
    })
}

/// Product of two `BigInt` matrices given as row lists.
pub fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, t| acc + &row[t] * &b[t][j]))
                .collect()
        })
        .collect()
}
