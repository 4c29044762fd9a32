//! Seeded random finite spaces: a random relation, closed reflexively and
//! transitively, then turned into its Alexandrov space.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::space::{reflexive_transitive_closure, FiniteSpace, Preorder};

/// Relation density used when none is given.
pub const DEFAULT_DENSITY: f64 = 0.25;

fn point_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("p{i:0width$}")).collect()
}

/// Each ordered pair of distinct points is related with probability `density`.
pub fn random_preorder<R: Rng>(rng: &mut R, points: usize, density: f64) -> Preorder {
    let mut leq = vec![vec![false; points]; points];
    for (i, row) in leq.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = i == j || rng.gen_bool(density);
        }
    }
    reflexive_transitive_closure(&mut leq);
    Preorder::from_matrix_unchecked(point_names(points), leq)
}

pub fn random_space(seed: u64, points: usize, density: f64) -> FiniteSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    FiniteSpace::from_preorder(&random_preorder(&mut rng, points.max(1), density))
}

/// `count` spaces on `1..=max_points` points with densities spread over
/// `[0.05, 0.5)`, so the corpus mixes posets, large classes and everything between.
pub fn corpus(seed: u64, count: usize, max_points: usize) -> Vec<FiniteSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_points.max(1));
            let density = rng.gen_range(0.05..0.5);
            FiniteSpace::from_preorder(&random_preorder(&mut rng, n, density))
        })
        .collect()
}
