//! Serializable report documents for `--json` output.
//!
//! Field order is fixed by the struct definitions and every list follows the
//! canonical basis order, so identical inputs give byte-identical output.

use serde::Serialize;

use crate::algebra::{GradedAlgebra, ValidationReport};
use crate::derivations::{ClassHVerdict, GradedLinearMap};
use crate::rigidity::{CharSubspace, ProofTrace, RigidityVerdict};

#[derive(Serialize)]
pub struct BasisEntry {
    pub label: String,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dimension: usize,
    pub top_degree: u32,
    pub basis: Vec<BasisEntry>,
}

impl AlgebraSummary {
    pub fn new(a: &GradedAlgebra) -> Self {
        Self {
            name: a.name().to_owned(),
            dimension: a.dim(),
            top_degree: a.top_degree(),
            basis: a
                .basis()
                .iter()
                .map(|b| BasisEntry {
                    label: b.label.clone(),
                    degree: b.degree,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct BlockJson {
    pub source_degree: u32,
    pub target_degree: i64,
    pub source_basis: Vec<String>,
    pub target_basis: Vec<String>,
    /// Rows indexed by target basis, columns by source basis; exact `p/q`.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct MapJson {
    pub shift: i64,
    pub text: String,
    pub blocks: Vec<BlockJson>,
}

impl MapJson {
    pub fn new(a: &GradedAlgebra, m: &GradedLinearMap) -> Self {
        let labels = |idx: &[usize]| idx.iter().map(|&i| a.label(i).to_owned()).collect();
        Self {
            shift: m.shift(),
            text: m.render(a),
            blocks: m
                .blocks()
                .iter()
                .map(|(n, block)| {
                    let target_degree = i64::from(*n) + m.shift();
                    BlockJson {
                        source_degree: *n,
                        target_degree,
                        source_basis: labels(a.graded_piece((*n).into())),
                        target_basis: labels(a.graded_piece(target_degree)),
                        matrix: (0..block.rows())
                            .map(|r| block.row(r).iter().map(ToString::to_string).collect())
                            .collect(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub command: &'static str,
    pub algebra: AlgebraSummary,
    pub valid: bool,
    pub violations: Vec<ViolationJson>,
}

impl ValidateReport {
    pub fn new(a: &GradedAlgebra, report: &ValidationReport) -> Self {
        Self {
            command: "validate",
            algebra: AlgebraSummary::new(a),
            valid: report.is_valid(),
            violations: report
                .violations
                .iter()
                .map(|v| ViolationJson {
                    kind: v.kind(),
                    message: v.render(a),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct DegreeDimension {
    pub degree: i64,
    pub dimension: usize,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub degree: i64,
    pub derivation: MapJson,
}

#[derive(Serialize)]
pub struct CheckHReport {
    pub command: &'static str,
    pub algebra: AlgebraSummary,
    pub in_class: bool,
    pub connectivity_ok: bool,
    pub degrees_checked: Vec<DegreeDimension>,
    pub certificate: Option<CertificateJson>,
}

impl CheckHReport {
    pub fn new(a: &GradedAlgebra, v: &ClassHVerdict) -> Self {
        Self {
            command: "check-h",
            algebra: AlgebraSummary::new(a),
            in_class: v.in_class,
            connectivity_ok: v.connectivity_ok,
            degrees_checked: v
                .dimensions
                .iter()
                .map(|&(degree, dimension)| DegreeDimension { degree, dimension })
                .collect(),
            certificate: v.certificate.as_ref().map(|c| CertificateJson {
                degree: c.degree,
                derivation: MapJson::new(a, &c.derivation),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct DerivationsReport {
    pub command: &'static str,
    pub algebra: AlgebraSummary,
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<MapJson>,
}

impl DerivationsReport {
    pub fn new(a: &GradedAlgebra, degree: i64, space: &[GradedLinearMap]) -> Self {
        Self {
            command: "derivations",
            algebra: AlgebraSummary::new(a),
            degree,
            dimension: space.len(),
            basis: space.iter().map(|m| MapJson::new(a, m)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PieceJson {
    pub degree: u32,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct CharReport {
    pub command: &'static str,
    pub algebra: AlgebraSummary,
    pub rank: u32,
    pub degrees: Vec<u32>,
    pub pieces: Vec<PieceJson>,
    pub dimension: usize,
}

impl CharReport {
    pub fn new(a: &GradedAlgebra, c: &CharSubspace) -> Self {
        Self {
            command: "char",
            algebra: AlgebraSummary::new(a),
            rank: c.rank,
            degrees: c.degrees.clone(),
            pieces: c
                .basis_indices
                .iter()
                .map(|(degree, idx)| PieceJson {
                    degree: *degree,
                    basis: idx.iter().map(|&i| a.label(i).to_owned()).collect(),
                })
                .collect(),
            dimension: c.dimension,
        }
    }
}

#[derive(Serialize)]
pub struct LevelJson {
    pub level: usize,
    pub degree: i64,
    pub dimension: usize,
    pub certificate: Option<MapJson>,
}

#[derive(Serialize)]
pub struct RigidityReport {
    pub command: &'static str,
    pub algebra: AlgebraSummary,
    pub torus_rank: usize,
    pub top_degree: u32,
    pub level_cap: usize,
    pub levels: Vec<LevelJson>,
    pub verdict: &'static str,
    pub failed_level: Option<usize>,
}

impl RigidityReport {
    pub fn new(a: &GradedAlgebra, t: &ProofTrace) -> Self {
        let (verdict, failed_level) = match t.verdict {
            RigidityVerdict::Established => ("established", None),
            RigidityVerdict::NotEstablished { level } => ("not_established", Some(level)),
        };
        Self {
            command: "rigidity",
            algebra: AlgebraSummary::new(a),
            torus_rank: t.torus_rank,
            top_degree: t.top_degree,
            level_cap: t.level_cap,
            levels: t
                .levels
                .iter()
                .map(|l| LevelJson {
                    level: l.level,
                    degree: l.degree,
                    dimension: l.dimension,
                    certificate: l.certificate.as_ref().map(|m| MapJson::new(a, m)),
                })
                .collect(),
            verdict,
            failed_level,
        }
    }
}

#[derive(Serialize)]
pub struct ExampleEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub description: &'static str,
    pub expected: String,
}

#[derive(Serialize)]
pub struct ExamplesListReport {
    pub command: &'static str,
    pub examples: Vec<ExampleEntry>,
}

#[derive(Serialize)]
pub struct ExampleShowReport {
    pub command: &'static str,
    pub name: &'static str,
    pub content: &'static str,
}
