//! Bundled example algebras with their documented class-H verdicts.

use crate::algebra::GradedAlgebra;
use crate::io::{parse_algebra, IoError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    InClass,
    /// First nonzero negative-degree derivation space.
    Certificate { degree: i64 },
}

impl Expected {
    pub fn describe(self) -> String {
        match self {
            Expected::InClass => "in class H".to_owned(),
            Expected::Certificate { degree } => format!("not in class H, certificate at degree {degree}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub description: &'static str,
    pub contents: &'static str,
    pub expected: Expected,
}

impl CorpusEntry {
    pub fn load(&self) -> Result<GradedAlgebra, IoError> {
        parse_algebra(self.contents)
    }
}

macro_rules! entry {
    ($name:literal, $desc:literal, $expected:expr) => {
        CorpusEntry {
            name: $name,
            file: concat!("data/", $name, ".alg"),
            description: $desc,
            contents: include_str!(concat!("../data/", $name, ".alg")),
            expected: $expected,
        }
    };
}

const fn cert(degree: i64) -> Expected {
    Expected::Certificate { degree }
}

pub const CORPUS: &[CorpusEntry] = &[
    entry!("cp1", "complex projective line", Expected::InClass),
    entry!("cp2", "complex projective plane", Expected::InClass),
    entry!("cp3", "complex projective 3-space", Expected::InClass),
    entry!("cp4", "complex projective 4-space", Expected::InClass),
    entry!("s2", "2-sphere", Expected::InClass),
    entry!("s3", "3-sphere", cert(-3)),
    entry!("s4", "4-sphere", Expected::InClass),
    entry!("s5", "5-sphere", cert(-5)),
    entry!("s6", "6-sphere", Expected::InClass),
    entry!("s7", "7-sphere", cert(-7)),
    entry!("t1", "circle (structure-constant table)", cert(-1)),
    entry!("t2", "2-torus (structure-constant table)", cert(-1)),
    entry!("t3", "3-torus (structure-constant table)", cert(-1)),
    entry!("cp1xcp1", "product of two projective lines", Expected::InClass),
    entry!("cp2xs4", "projective plane times 4-sphere", Expected::InClass),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
