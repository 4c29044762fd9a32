//! Bundled example spaces.

use crate::space::FiniteSpace;
use crate::spacefile::parse_space;

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub source: &'static str,
}

impl Fixture {
    pub fn space(&self) -> FiniteSpace {
        parse_space(self.source).expect("bundled fixture is valid")
    }
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "SIERP",
        description: "Sierpinski space: opens {}, {b}, {a,b}",
        source: include_str!("../fixtures/sierp.json"),
    },
    Fixture {
        name: "INDISC2",
        description: "two-point indiscrete space",
        source: include_str!("../fixtures/indisc2.json"),
    },
    Fixture {
        name: "PSEUDO_S1",
        description: "four-point finite model of the circle",
        source: include_str!("../fixtures/pseudo_s1.json"),
    },
    Fixture {
        name: "PSEUDO_S1_DUP",
        description: "pseudocircle with c doubled into indistinguishable c and c'",
        source: include_str!("../fixtures/pseudo_s1_dup.json"),
    },
    Fixture {
        name: "RP2",
        description: "face poset of the six-vertex projective plane (H_1 = Z/2)",
        source: include_str!("../fixtures/rp2.json"),
    },
];

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

/// Looks a fixture up by name, ignoring ASCII case.
pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name.eq_ignore_ascii_case(name))
}

pub fn sierp() -> FiniteSpace {
    FIXTURES[0].space()
}

pub fn indisc2() -> FiniteSpace {
    FIXTURES[1].space()
}

pub fn pseudo_s1() -> FiniteSpace {
    FIXTURES[2].space()
}

pub fn pseudo_s1_dup() -> FiniteSpace {
    FIXTURES[3].space()
}

pub fn rp2() -> FiniteSpace {
    FIXTURES[4].space()
}
