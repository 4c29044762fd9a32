//! Pipeline reports: what the CLI prints, as JSON or as aligned text.

use std::fmt::Write as _;

use serde::Serialize;

use crate::homology::{all_groups, GroupPresentation};
use crate::order::Decomposition;
use crate::pipeline::Pipeline;
use crate::splice::{
    compare, splice_signed, spliced_cohomology, theorem_claimed_groups, ComparisonReport, SpliceError,
};

pub const REPORT_SCHEMA: &str = "prehom.report/1";

pub const POSET_WARNING: &str =
    "input is already a poset: the complementary part is empty and the relative complex is zero, so the spliced theory degenerates";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexChoice {
    /// Order complex of the poset part under `≤`.
    Poset,
    /// Order complex of the whole space under `⪯`.
    Ambient,
    /// Ambient modulo the poset part.
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Homology,
    Cohomology,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub points: Vec<String>,
    pub point_count: usize,
    pub t0: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSizes {
    pub poset: Vec<usize>,
    pub ambient: Vec<usize>,
    pub relative: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupTable {
    pub complex: ComplexChoice,
    pub theory: Theory,
    pub groups: Vec<GroupPresentation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutEntry {
    pub degree: usize,
    /// `poset` or `relative`.
    pub source: String,
    pub source_degree: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplicedSummary {
    pub length: i64,
    pub max_degree: usize,
    pub layout: Vec<LayoutEntry>,
    pub groups: Vec<GroupPresentation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub schema: &'static str,
    pub space: SpaceSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complexes: Option<ComplexSizes>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<GroupTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spliced: Option<SplicedSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<ComparisonReport>,
}

impl PipelineReport {
    fn empty(p: &Pipeline) -> Self {
        let mut warnings = Vec::new();
        if p.is_poset {
            warnings.push(POSET_WARNING.to_string());
        }
        Self {
            schema: REPORT_SCHEMA,
            space: SpaceSummary {
                points: p.space.points().to_vec(),
                point_count: p.space.len(),
                t0: p.is_poset,
                warnings,
            },
            decomposition: None,
            complexes: None,
            tables: Vec::new(),
            spliced: None,
            comparison: None,
        }
    }

    pub fn decompose(p: &Pipeline) -> Self {
        Self {
            decomposition: Some(p.decomposition.clone()),
            ..Self::empty(p)
        }
    }

    pub fn homology(p: &Pipeline, complex: ComplexChoice, theory: Theory) -> Self {
        Self {
            tables: vec![group_table(p, complex, theory)],
            ..Self::empty(p)
        }
    }

    /// Spliced groups at `0..=max_degree`; with `verify`, the comparison
    /// against the closed-form list. That list only exists for length 3, so
    /// other lengths come out entirely uncovered.
    pub fn spliced(p: &Pipeline, length: i64, max_degree: usize, verify: bool) -> Result<Self, SpliceError> {
        let (spliced, comparison) = spliced_parts(p, length, max_degree, verify)?;
        Ok(Self {
            spliced: Some(spliced),
            comparison,
            ..Self::empty(p)
        })
    }

    /// Every section at once.
    pub fn full(p: &Pipeline, length: i64, max_degree: usize) -> Result<Self, SpliceError> {
        let (spliced, comparison) = spliced_parts(p, length, max_degree, true)?;
        let tables = [
            (ComplexChoice::Poset, Theory::Homology),
            (ComplexChoice::Poset, Theory::Cohomology),
            (ComplexChoice::Ambient, Theory::Homology),
            (ComplexChoice::Relative, Theory::Homology),
            (ComplexChoice::Relative, Theory::Cohomology),
        ]
        .into_iter()
        .map(|(c, t)| group_table(p, c, t))
        .collect();
        Ok(Self {
            decomposition: Some(p.decomposition.clone()),
            complexes: Some(ComplexSizes {
                poset: p.poset_chain.ranks(),
                ambient: p.ambient_chain.ranks(),
                relative: p.relative_chain.ranks(),
            }),
            tables,
            spliced: Some(spliced),
            comparison,
            ..Self::empty(p)
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sp = &self.space;
        let _ = writeln!(out, "space: {} points, T0: {}", sp.point_count, yes_no(sp.t0));
        for w in &sp.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(d) = &self.decomposition {
            let classes: Vec<String> = d.classes.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
            let _ = writeln!(out, "\nclasses:         {}", classes.join(" "));
            let _ = writeln!(out, "representatives: {}", list_or_none(&d.representatives));
            let _ = writeln!(out, "complementary:   {}", list_or_none(&d.complementary));
        }
        if let Some(c) = &self.complexes {
            let _ = writeln!(out, "\nfaces per degree");
            for (name, sizes) in [("poset", &c.poset), ("ambient", &c.ambient), ("relative", &c.relative)] {
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    out,
                    "  {name:<9}{}",
                    if sizes.is_empty() {
                        "(zero)".into()
                    } else {
                        sizes.join(" ")
                    }
                );
            }
        }
        for t in &self.tables {
            let _ = writeln!(
                out,
                "\n{} of the {} complex",
                theory_name(t.theory),
                complex_name(t.complex)
            );
            if t.groups.is_empty() {
                let _ = writeln!(out, "  (zero complex)");
            }
            for (k, g) in t.groups.iter().enumerate() {
                let _ = writeln!(out, "  degree {k:<3} {g}");
            }
        }
        if let Some(s) = &self.spliced {
            let _ = writeln!(out, "\nspliced complex, length {}", s.length);
            let _ = writeln!(out, "  {:<7}{:<16}{:<6}group", "degree", "source", "rank");
            for (entry, g) in s.layout.iter().zip(&s.groups) {
                let src = format!("{}^{}", entry.source, entry.source_degree);
                let _ = writeln!(out, "  {:<7}{:<16}{:<6}{}", entry.degree, src, entry.rank, g);
            }
        }
        if let Some(c) = &self.comparison {
            let _ = writeln!(out, "\nclosed-form comparison");
            let _ = writeln!(
                out,
                "  {:<7}{:<12}{:<12}{:<22}verdict",
                "degree", "direct", "claimed", "formula"
            );
            for r in &c.rows {
                let claimed = r.claimed.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
                let formula = r.formula.clone().unwrap_or_else(|| "(not in list)".into());
                let verdict = serde_json::to_value(r.verdict).expect("verdict serializes");
                let _ = writeln!(
                    out,
                    "  {:<7}{:<12}{:<12}{:<22}{}",
                    r.degree,
                    r.direct.to_string(),
                    claimed,
                    formula,
                    verdict.as_str().unwrap_or_default()
                );
            }
            let _ = writeln!(out, "{}", c.summary());
        }
        out
    }
}

fn spliced_parts(
    p: &Pipeline,
    length: i64,
    max_degree: usize,
    verify: bool,
) -> Result<(SplicedSummary, Option<ComparisonReport>), SpliceError> {
    let spliced = splice_signed(&[p.poset_cochain.clone(), p.relative_cochain.clone()], length)?;
    let groups = spliced_cohomology(&spliced, max_degree);
    let names = if length > 0 {
        ["poset", "relative"]
    } else {
        ["relative", "poset"]
    };
    let layout = (0..=max_degree)
        .map(|k| {
            let (source, source_degree) = spliced.origin_of(k);
            LayoutEntry {
                degree: k,
                source: names[source].to_string(),
                source_degree,
                rank: spliced.assembled.rank_at(k),
            }
        })
        .collect();
    let comparison = verify.then(|| {
        let claimed = if length == 3 {
            theorem_claimed_groups(&p.poset_cochain, &p.relative_cochain, max_degree / 6)
        } else {
            Default::default()
        };
        compare(&groups, &claimed, 0..max_degree + 1)
    });
    Ok((
        SplicedSummary {
            length,
            max_degree,
            layout,
            groups,
        },
        comparison,
    ))
}

fn group_table(p: &Pipeline, complex: ComplexChoice, theory: Theory) -> GroupTable {
    let c = match (complex, theory) {
        (ComplexChoice::Poset, Theory::Homology) => &p.poset_chain,
        (ComplexChoice::Poset, Theory::Cohomology) => &p.poset_cochain,
        (ComplexChoice::Ambient, Theory::Homology) => &p.ambient_chain,
        (ComplexChoice::Ambient, Theory::Cohomology) => &p.ambient_cochain,
        (ComplexChoice::Relative, Theory::Homology) => &p.relative_chain,
        (ComplexChoice::Relative, Theory::Cohomology) => &p.relative_cochain,
    };
    GroupTable {
        complex,
        theory,
        groups: all_groups(c),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(", ")
    }
}

fn theory_name(t: Theory) -> &'static str {
    match t {
        Theory::Homology => "homology",
        Theory::Cohomology => "cohomology",
    }
}

fn complex_name(c: ComplexChoice) -> &'static str {
    match c {
        ComplexChoice::Poset => "poset-part",
        ComplexChoice::Ambient => "ambient",
        ComplexChoice::Relative => "relative",
    }
}
