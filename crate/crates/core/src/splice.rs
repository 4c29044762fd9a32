//! Spliced complexes: several source complexes cut into blocks of `n`
//! consecutive degrees, laid end to end, with zero maps between blocks.
//!
//! With two sources and `n = 3` this is the complex
//!
//! ```text
//! G1^0 → G1^1 → G1^2 -0→ G2^0 → G2^1 → G2^2 -0→ G1^3 → G1^4 → …
//! ```
//!
//! whose cohomology is computed directly here and compared against the
//! closed-form list of six groups per period (see [`theorem_claimed_groups`]).

use std::collections::BTreeMap;
use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{ChainComplex, Direction, Label};
use crate::homology::{all_groups, cokernel_group, group_at, kernel_group, GroupPresentation};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpliceError {
    #[error("invalid block length {0}")]
    InvalidLength(i64),
    #[error("at least one source complex is required")]
    NoSources,
    #[error("negative lengths need exactly two sources, got {0}")]
    WrongSourceCount(usize),
    #[error("sources mix homological and cohomological complexes")]
    MixedDirections,
    #[error("invalid block schedule: {0}")]
    InvalidPattern(String),
    #[error("block length {length} is too small; the limit comparison needs |n| >= {required}")]
    LengthTooSmall { length: i64, required: usize },
}

/// Order in which sources take turns filling blocks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Pattern {
    /// Source 0, 1, …, s−1, 0, 1, …
    #[default]
    RoundRobin,
    /// An explicit cyclic schedule of source indices, repeated forever.
    /// Every source must appear at least once.
    Cyclic(Vec<usize>),
}

impl Pattern {
    fn schedule(&self, sources: usize) -> Result<Vec<usize>, SpliceError> {
        match self {
            Pattern::RoundRobin => Ok((0..sources).collect()),
            Pattern::Cyclic(s) => {
                if s.is_empty() {
                    return Err(SpliceError::InvalidPattern("empty schedule".into()));
                }
                if let Some(&bad) = s.iter().find(|&&i| i >= sources) {
                    return Err(SpliceError::InvalidPattern(format!("source index {bad} out of range")));
                }
                if let Some(missing) = (0..sources).find(|i| !s.contains(i)) {
                    return Err(SpliceError::InvalidPattern(format!("source {missing} never scheduled")));
                }
                Ok(s.clone())
            }
        }
    }
}

/// One block: a run of consecutive source degrees copied into the spliced complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub source: usize,
    pub source_degrees: Range<usize>,
    pub spliced_degrees: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplicedComplex {
    /// Sources in the order they were spliced (already swapped for negative lengths).
    pub sources: Vec<ChainComplex>,
    pub length: i64,
    pub blocks: Vec<Block>,
    /// Cyclic order in which sources take turns.
    pub schedule: Vec<usize>,
    pub assembled: ChainComplex,
}

impl SplicedComplex {
    /// Block containing spliced degree `k`, if `k` lies inside the assembled range.
    pub fn block_of(&self, k: usize) -> Option<&Block> {
        self.blocks.iter().find(|b| b.spliced_degrees.contains(&k))
    }

    /// Spliced degree at which `source`'s degree `degree` sits.
    pub fn spliced_degree_of(&self, source: usize, degree: usize) -> Option<usize> {
        self.blocks
            .iter()
            .find(|b| b.source == source && b.source_degrees.contains(&degree))
            .map(|b| b.spliced_degrees.start + (degree - b.source_degrees.start))
    }

    /// `(source, source degree)` feeding spliced degree `k`, following the
    /// schedule past the assembled range as well.
    pub fn origin_of(&self, k: usize) -> (usize, usize) {
        let n = self.length.unsigned_abs() as usize;
        let block = k / n;
        let cycle = self.schedule.len();
        let source = self.schedule[block % cycle];
        let per_cycle = self.schedule.iter().filter(|&&s| s == source).count();
        let earlier =
            (block / cycle) * per_cycle + self.schedule[..block % cycle].iter().filter(|&&s| s == source).count();
        (source, earlier * n + k % n)
    }
}

/// Splices `sources` in blocks of `length` degrees.
///
/// After an interruption each source resumes at its next unconsumed degree.
/// Consecutive blocks of the same source are joined by its own map, so a
/// single source is laid out unchanged. Sources past their top degree keep
/// their turn but contribute zero groups.
/// Homological sources are laid out the same way; the copied maps simply
/// point downward.
pub fn splice(sources: &[ChainComplex], length: i64, pattern: &Pattern) -> Result<SplicedComplex, SpliceError> {
    if length < 1 {
        return Err(SpliceError::InvalidLength(length));
    }
    assemble(sources.to_vec(), length as usize, length, pattern)
}

/// Negative lengths swap the two sources (second one first) and use `|length|`.
pub fn splice_negative(
    first: &ChainComplex,
    second: &ChainComplex,
    length: i64,
) -> Result<SplicedComplex, SpliceError> {
    if length >= 0 {
        return Err(SpliceError::InvalidLength(length));
    }
    assemble(
        vec![second.clone(), first.clone()],
        length.unsigned_abs() as usize,
        length,
        &Pattern::RoundRobin,
    )
}

/// Dispatches on the sign of `length`; `0` is rejected. Negative lengths need
/// exactly two sources.
pub fn splice_signed(sources: &[ChainComplex], length: i64) -> Result<SplicedComplex, SpliceError> {
    match length {
        0 => Err(SpliceError::InvalidLength(0)),
        n if n > 0 => splice(sources, n, &Pattern::RoundRobin),
        n => match sources {
            [a, b] => splice_negative(a, b, n),
            _ => Err(SpliceError::WrongSourceCount(sources.len())),
        },
    }
}

fn assemble(
    sources: Vec<ChainComplex>,
    n: usize,
    length: i64,
    pattern: &Pattern,
) -> Result<SplicedComplex, SpliceError> {
    let direction = sources.first().ok_or(SpliceError::NoSources)?.direction();
    if sources.iter().any(|s| s.direction() != direction) {
        return Err(SpliceError::MixedDirections);
    }
    let schedule = pattern.schedule(sources.len())?;
    let needed: Vec<usize> = sources.iter().map(|s| s.top_degree().map_or(0, |t| t + 1)).collect();
    let mut consumed = vec![0usize; sources.len()];

    let mut blocks = Vec::new();
    let mut spliced = 0usize;
    let mut turn = 0usize;
    while consumed.iter().zip(&needed).any(|(c, n)| c < n) {
        let source = schedule[turn % schedule.len()];
        turn += 1;
        let start = consumed[source];
        consumed[source] += n;
        blocks.push(Block {
            source,
            source_degrees: start..start + n,
            spliced_degrees: spliced..spliced + n,
        });
        spliced += n;
    }

    let mut basis: Vec<Vec<Label>> = Vec::with_capacity(spliced);
    let mut maps: Vec<IntMatrix> = Vec::with_capacity(spliced.saturating_sub(1));
    for (b, block) in blocks.iter().enumerate() {
        let src = &sources[block.source];
        for (offset, d) in block.source_degrees.clone().enumerate() {
            let tag = format!("G{}^{}", block.source + 1, d);
            basis.push(
                src.basis_labels(d)
                    .iter()
                    .map(|l| std::iter::once(tag.clone()).chain(l.iter().cloned()).collect())
                    .collect(),
            );
            let last_in_block = offset + 1 == n;
            if last_in_block {
                if let Some(next) = blocks.get(b + 1) {
                    if continues(block, next) {
                        maps.push(src.map_between_or_zero(d));
                    } else {
                        let lower = src.rank_at(d);
                        let upper = sources[next.source].rank_at(next.source_degrees.start);
                        maps.push(zero_map(direction, lower, upper));
                    }
                }
            } else {
                maps.push(src.map_between_or_zero(d));
            }
        }
    }
    let assembled = ChainComplex::from_parts_unchecked(direction, basis, maps);
    Ok(SplicedComplex {
        sources,
        length,
        blocks,
        schedule,
        assembled,
    })
}

/// A block followed by the next stretch of the same source is not an
/// interruption; the source's own map joins them.
pub fn continues(block: &Block, next: &Block) -> bool {
    block.source == next.source && block.source_degrees.end == next.source_degrees.start
}

fn zero_map(direction: Direction, lower: usize, upper: usize) -> IntMatrix {
    match direction {
        Direction::Homological => IntMatrix::zeros(lower, upper),
        Direction::Cohomological => IntMatrix::zeros(upper, lower),
    }
}

/// Groups of the assembled complex at degrees `0..=max_degree`.
pub fn spliced_cohomology(spliced: &SplicedComplex, max_degree: usize) -> Vec<GroupPresentation> {
    (0..=max_degree).map(|k| group_at(&spliced.assembled, k)).collect()
}

/// One entry of the closed-form list: which expression produced the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimedGroup {
    pub formula: String,
    pub group: GroupPresentation,
}

/// The six closed-form groups per period `p` for the length-3 splice of
/// `first` (the poset part) and `second` (the relative complex):
///
/// | degree | group |
/// |---|---|
/// | 6p   | `H^{3p}(first)` |
/// | 6p+1 | `G1^{3p+2} / im d1^{3p+1}` |
/// | 6p+2 | `ker d2^{3p}` |
/// | 6p+3 | `H^{3p}(second)` |
/// | 6p+4 | `G2^{3p+2} / im d2^{3p+1}` |
/// | 6p+5 | `ker d1^{3p+3}` |
pub fn theorem_claimed_groups(
    first: &ChainComplex,
    second: &ChainComplex,
    p_max: usize,
) -> BTreeMap<usize, ClaimedGroup> {
    let mut out = BTreeMap::new();
    for p in 0..=p_max {
        let q = 3 * p;
        let entries = [
            (format!("H^{q}(poset part)"), group_at(first, q)),
            (
                format!("G1^{} / Im d1^{}", q + 2, q + 1),
                cokernel_group(first.map_between(q + 1), first.rank_at(q + 2)),
            ),
            (
                format!("ker d2^{q}"),
                kernel_group(second.map_between(q), second.rank_at(q)),
            ),
            (format!("H^{q}(relative)"), group_at(second, q)),
            (
                format!("G2^{} / Im d2^{}", q + 2, q + 1),
                cokernel_group(second.map_between(q + 1), second.rank_at(q + 2)),
            ),
            (
                format!("ker d1^{}", q + 3),
                kernel_group(first.map_between(q + 3), first.rank_at(q + 3)),
            ),
        ];
        for (i, (formula, group)) in entries.into_iter().enumerate() {
            out.insert(6 * p + i, ClaimedGroup { formula, group });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Uncovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub degree: usize,
    pub direct: GroupPresentation,
    pub claimed: Option<GroupPresentation>,
    pub formula: Option<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub matches: usize,
    pub mismatches: usize,
    pub uncovered: usize,
}

impl ComparisonReport {
    pub fn summary(&self) -> String {
        format!(
            "{} match / {} mismatch / {} uncovered",
            self.matches, self.mismatches, self.uncovered
        )
    }

    pub fn verdicts(&self) -> Vec<Verdict> {
        self.rows.iter().map(|r| r.verdict).collect()
    }
}

/// Row per degree in `degrees`; a degree missing from `direct` counts as trivial.
pub fn compare(
    direct: &[GroupPresentation],
    claimed: &BTreeMap<usize, ClaimedGroup>,
    degrees: Range<usize>,
) -> ComparisonReport {
    let rows: Vec<ComparisonRow> = degrees
        .map(|k| {
            let direct = direct.get(k).cloned().unwrap_or_default();
            let claim = claimed.get(&k);
            let verdict = match claim {
                None => Verdict::Uncovered,
                Some(c) if c.group == direct => Verdict::Match,
                Some(_) => Verdict::Mismatch,
            };
            ComparisonRow {
                degree: k,
                direct,
                claimed: claim.map(|c| c.group.clone()),
                formula: claim.map(|c| c.formula.clone()),
                verdict,
            }
        })
        .collect();
    let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    ComparisonReport {
        matches: count(Verdict::Match),
        mismatches: count(Verdict::Mismatch),
        uncovered: count(Verdict::Uncovered),
        rows,
    }
}

/// One precise reading of the long-length limit: once `|n|` exceeds the
/// leading source's top degree, the first block carries that whole source
/// uninterrupted, so the spliced groups at degrees `0..=top` are the source's
/// own groups. Positive `n` leads with `first`, negative `n` with `second`.
pub fn limit_check(first: &ChainComplex, second: &ChainComplex, length: i64) -> Result<bool, SpliceError> {
    if length == 0 {
        return Err(SpliceError::InvalidLength(0));
    }
    let lead = if length > 0 { first } else { second };
    let required = lead.top_degree().map_or(1, |t| t + 1);
    if (length.unsigned_abs() as usize) < required {
        return Err(SpliceError::LengthTooSmall { length, required });
    }
    let spliced = splice_signed(&[first.clone(), second.clone()], length)?;
    let expected = all_groups(lead);
    let Some(top) = lead.top_degree() else {
        return Ok(true);
    };
    Ok(spliced_cohomology(&spliced, top) == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Pipeline;
    use crate::{fixtures, homology::GroupPresentation as G};

    fn z(r: usize) -> G {
        G::free(r)
    }

    fn dup() -> Pipeline {
        Pipeline::new(&fixtures::pseudo_s1_dup())
    }

    #[test]
    fn layout_of_duplicated_circle() {
        let p = dup();
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        assert_eq!(s.assembled.ranks(), vec![4, 4, 0, 1, 2]);
        assert_eq!(s.blocks.len(), 2);
        assert_eq!(s.blocks[1].source, 1);
        assert_eq!(s.blocks[1].spliced_degrees, 3..6);
        assert_eq!(s.spliced_degree_of(1, 1), Some(4));
        assert!(s.assembled.squares_to_zero());
        assert!(s.assembled.map_between(2).unwrap().is_zero());
    }

    #[test]
    fn single_source_is_the_identity_layout() {
        let p = dup();
        let src = &p.ambient_cochain;
        for n in 1..5 {
            let s = splice(std::slice::from_ref(src), n, &Pattern::RoundRobin).unwrap();
            assert_eq!(s.assembled.ranks(), src.ranks());
            for k in 0..3 {
                assert_eq!(s.assembled.map_between_or_zero(k), src.map_between_or_zero(k));
            }
        }
    }

    #[test]
    fn repeated_source_is_not_interrupted() {
        let p = dup();
        let srcs = [p.poset_cochain.clone(), p.relative_cochain.clone()];
        let s = splice(&srcs, 1, &Pattern::Cyclic(vec![0, 0, 1])).unwrap();
        assert_eq!(s.assembled.map_between(0), p.poset_cochain.map_between(0));
        assert!(s.assembled.map_between_or_zero(1).is_zero());
        assert!(s.assembled.squares_to_zero());
    }

    #[test]
    fn zero_sources_give_zero() {
        let zero = ChainComplex::zero(Direction::Cohomological);
        let s = splice(&[zero.clone(), zero.clone()], 3, &Pattern::RoundRobin).unwrap();
        assert!(s.assembled.is_zero());
        assert!(spliced_cohomology(&s, 4).iter().all(G::is_trivial));
    }

    #[test]
    fn errors() {
        let zero = ChainComplex::zero(Direction::Cohomological);
        assert_eq!(
            splice(&[], 3, &Pattern::RoundRobin).unwrap_err(),
            SpliceError::NoSources
        );
        assert_eq!(
            splice(std::slice::from_ref(&zero), 0, &Pattern::RoundRobin).unwrap_err(),
            SpliceError::InvalidLength(0)
        );
        assert_eq!(
            splice_negative(&zero, &zero, 0).unwrap_err(),
            SpliceError::InvalidLength(0)
        );
        assert_eq!(
            splice_negative(&zero, &zero, 2).unwrap_err(),
            SpliceError::InvalidLength(2)
        );
        assert_eq!(
            splice_signed(std::slice::from_ref(&zero), -2).unwrap_err(),
            SpliceError::WrongSourceCount(1)
        );
        let hom = ChainComplex::zero(Direction::Homological);
        assert_eq!(
            splice(&[zero.clone(), hom], 2, &Pattern::RoundRobin).unwrap_err(),
            SpliceError::MixedDirections
        );
        assert!(matches!(
            splice(&[zero.clone(), zero.clone()], 2, &Pattern::Cyclic(vec![0])),
            Err(SpliceError::InvalidPattern(_))
        ));
    }

    #[test]
    fn negative_length_swaps_sources() {
        let p = dup();
        let s = splice_negative(&p.poset_cochain, &p.relative_cochain, -3).unwrap();
        assert_eq!(s.length, -3);
        assert_eq!(s.assembled.ranks(), vec![1, 2, 0, 4, 4]);
        assert_eq!(s.blocks[0].source, 0);
        assert_eq!(s.sources[0], p.relative_cochain);

        let both = splice_negative(&p.poset_cochain, &p.poset_cochain, -3).unwrap();
        let pos = splice(
            &[p.poset_cochain.clone(), p.poset_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        assert_eq!(both.assembled, pos.assembled);
    }

    #[test]
    fn direct_groups_of_duplicated_circle() {
        let p = dup();
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        assert_eq!(spliced_cohomology(&s, 5), vec![z(1), z(1), z(0), z(0), z(1), z(0)]);
    }

    #[test]
    fn claimed_groups_of_duplicated_circle() {
        let p = dup();
        let claimed = theorem_claimed_groups(&p.poset_cochain, &p.relative_cochain, 0);
        let groups: Vec<G> = claimed.values().map(|c| c.group.clone()).collect();
        assert_eq!(groups, vec![z(1), z(0), z(0), z(0), z(0), z(0)]);
        assert_eq!(claimed[&1].formula, "G1^2 / Im d1^1");
    }

    #[test]
    fn comparison_of_duplicated_circle() {
        let p = dup();
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        let direct = spliced_cohomology(&s, 5);
        let claimed = theorem_claimed_groups(&p.poset_cochain, &p.relative_cochain, 0);
        let report = compare(&direct, &claimed, 0..6);
        use Verdict::*;
        assert_eq!(report.verdicts(), vec![Match, Mismatch, Match, Match, Mismatch, Match]);
        assert_eq!(report.summary(), "4 match / 2 mismatch / 0 uncovered");
        assert_eq!(report.rows[1].direct, z(1));
        assert_eq!(report.rows[1].claimed, Some(z(0)));

        assert!(compare(&direct, &claimed, 0..0).rows.is_empty());
        assert_eq!(compare(&direct, &claimed, 5..8).uncovered, 2);
    }

    #[test]
    fn sierpinski_matches_everywhere() {
        let p = Pipeline::new(&fixtures::sierp());
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        let direct = spliced_cohomology(&s, 5);
        assert_eq!(direct, vec![z(1), z(0), z(0), z(0), z(0), z(0)]);
        let claimed = theorem_claimed_groups(&p.poset_cochain, &p.relative_cochain, 0);
        assert_eq!(compare(&direct, &claimed, 0..6).matches, 6);
    }

    #[test]
    fn pseudo_circle_mismatches_at_degree_one() {
        // Poset input with nonzero first cohomology: the spliced complex keeps
        // H^1 of the circle at degree 1, the closed form puts a cokernel of a
        // map into the zero group there.
        let p = Pipeline::new(&fixtures::pseudo_s1());
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        let report = compare(
            &spliced_cohomology(&s, 5),
            &theorem_claimed_groups(&p.poset_cochain, &p.relative_cochain, 0),
            0..6,
        );
        assert_eq!(report.rows[1].verdict, Verdict::Mismatch);
        assert_eq!(report.mismatches, 1);
    }

    #[test]
    fn poset_input_has_trivial_second_block() {
        let p = Pipeline::new(&fixtures::sierp());
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        let direct = spliced_cohomology(&s, 5);
        assert_eq!(&direct[..2], all_groups(&p.poset_cochain).as_slice());
        assert!(direct[2..].iter().all(G::is_trivial));
    }

    #[test]
    fn origins_follow_the_schedule() {
        let p = dup();
        let s = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        assert_eq!(s.origin_of(0), (0, 0));
        assert_eq!(s.origin_of(4), (1, 1));
        assert_eq!(s.origin_of(6), (0, 3));
        assert_eq!(s.origin_of(11), (1, 5));
        let c = splice(
            &[p.poset_cochain.clone(), p.relative_cochain.clone()],
            2,
            &Pattern::Cyclic(vec![0, 0, 1]),
        )
        .unwrap();
        assert_eq!(c.origin_of(2), (0, 2));
        assert_eq!(c.origin_of(5), (1, 1));
        assert_eq!(c.origin_of(6), (0, 4));
    }

    #[test]
    fn limit_examples() {
        let p = dup();
        assert_eq!(limit_check(&p.poset_cochain, &p.relative_cochain, 2), Ok(true));
        assert_eq!(limit_check(&p.poset_cochain, &p.relative_cochain, -2), Ok(true));
        assert_eq!(
            limit_check(&p.poset_cochain, &p.relative_cochain, 1),
            Err(SpliceError::LengthTooSmall { length: 1, required: 2 })
        );
        assert_eq!(
            limit_check(&p.poset_cochain, &p.relative_cochain, 0),
            Err(SpliceError::InvalidLength(0))
        );
        let s = Pipeline::new(&fixtures::sierp());
        for n in [2, 3, 7, -1, -4] {
            assert_eq!(
                limit_check(&s.poset_cochain, &s.relative_cochain, n),
                Ok(true),
                "n = {n}"
            );
        }
    }

    #[test]
    fn cyclic_two_source_schedule_matches_round_robin() {
        let p = dup();
        let srcs = [p.poset_cochain.clone(), p.relative_cochain.clone()];
        let a = splice(&srcs, 3, &Pattern::RoundRobin).unwrap();
        let b = splice(&srcs, 3, &Pattern::Cyclic(vec![0, 1])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn four_source_schedule() {
        let p = dup();
        let srcs = [
            p.poset_cochain.clone(),
            p.relative_cochain.clone(),
            p.ambient_cochain.clone(),
            p.poset_cochain.clone(),
        ];
        let s = splice(&srcs, 1, &Pattern::Cyclic(vec![0, 1, 2, 3, 2])).unwrap();
        let order: Vec<usize> = s.blocks.iter().map(|b| b.source).collect();
        assert_eq!(&order[..5], &[0, 1, 2, 3, 2]);
        assert_eq!(s.blocks[4].source_degrees, 1..2);
        assert!(s.assembled.squares_to_zero());
    }

    #[test]
    fn homological_splice_uses_the_same_layout() {
        let p = dup();
        let s = splice(
            &[p.poset_chain.clone(), p.relative_chain.clone()],
            3,
            &Pattern::RoundRobin,
        )
        .unwrap();
        assert_eq!(s.assembled.direction(), Direction::Homological);
        assert_eq!(s.assembled.ranks(), vec![4, 4, 0, 1, 2]);
        assert!(s.assembled.squares_to_zero());
        // H_0 and H_1 of the circle survive inside the first block.
        let g = spliced_cohomology(&s, 1);
        assert_eq!(g, vec![z(1), z(1)]);
    }
}
