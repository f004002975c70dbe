//! Input formats and report serialization.

mod presentation;
pub mod report;
mod structure;

use std::path::Path;

use thiserror::Error;

use crate::algebra::{build_monomial_algebra, AlgebraError, GradedAlgebra};

pub use presentation::parse_presentation;
pub use structure::{parse_structure_constants, parse_structure_constants_unvalidated, to_structure_constants};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{}{source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Algebra {
        line: Option<usize>,
        source: AlgebraError,
    },
    #[error("missing `{0}` section")]
    Missing(&'static str),
    #[error("algebra violates {} axiom(s):\n  {}", .0.len(), .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraFormat {
    Presentation,
    StructureConstants,
}

impl AlgebraFormat {
    /// Structure-constant files are recognized by their `basis:` line.
    pub fn detect(text: &str) -> Self {
        let has_basis = text
            .lines()
            .any(|l| l.split('#').next().unwrap_or("").trim() == "basis:");
        if has_basis {
            AlgebraFormat::StructureConstants
        } else {
            AlgebraFormat::Presentation
        }
    }
}

/// An algebra input in either format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub format: AlgebraFormat,
    pub payload: String,
}

impl AlgebraFile {
    pub fn new(payload: impl Into<String>) -> Self {
        let payload = payload.into();
        Self {
            format: AlgebraFormat::detect(&payload),
            payload,
        }
    }

    pub fn read(path: &Path) -> Result<Self, IoError> {
        std::fs::read_to_string(path)
            .map(Self::new)
            .map_err(|source| IoError::Read {
                path: path.display().to_string(),
                source,
            })
    }

    /// Builds the algebra; structure-constant tables must pass validation.
    pub fn load(&self) -> Result<GradedAlgebra, IoError> {
        match self.format {
            AlgebraFormat::Presentation => {
                let p = parse_presentation(&self.payload)?;
                build_monomial_algebra(&p).map_err(|source| IoError::Algebra { line: None, source })
            }
            AlgebraFormat::StructureConstants => parse_structure_constants(&self.payload),
        }
    }

    /// Builds the algebra without rejecting axiom violations.
    pub fn load_unvalidated(&self) -> Result<GradedAlgebra, IoError> {
        match self.format {
            AlgebraFormat::Presentation => self.load(),
            AlgebraFormat::StructureConstants => parse_structure_constants_unvalidated(&self.payload),
        }
    }
}

/// Parses either format.
pub fn parse_algebra(text: &str) -> Result<GradedAlgebra, IoError> {
    AlgebraFile::new(text).load()
}
