//! Command-line front end.
//!
//! Exit codes: 0 when the property holds (valid / in class H / established),
//! 1 when it fails (a certificate is printed), 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::GradedAlgebra;
use crate::corpus::{self, CORPUS};
use crate::derivations::{check_class_h_with, derivation_space};
use crate::io::report::{
    CharReport, CheckHReport, DerivationsReport, ExampleEntry, ExampleShowReport, ExamplesListReport,
    RigidityReport, ValidateReport,
};
use crate::io::AlgebraFile;
use crate::par::Strategy;
use crate::rigidity::{char_subspace, prove_rigidity, RigidityVerdict, MAX_TORUS_RANK};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "graded-rigidity", version)]
#[command(about = "Negative-degree derivations, class H membership and splitting-rigidity traces for graded-commutative algebras")]
#[command(after_help = "EXAMPLES:
    graded-rigidity check-h crates/core/data/cp2.alg
    graded-rigidity derivations crates/core/data/s3.alg --degree -3 --json
    graded-rigidity char crates/core/data/cp4.alg --rank 5
    graded-rigidity rigidity crates/core/data/cp2.alg --torus 2
    graded-rigidity examples show s3")]
struct Cli {
    /// Emit a machine-readable JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra axioms exhaustively
    Validate { file: PathBuf },
    /// Decide membership in class H (no nonzero negative-degree derivations)
    CheckH {
        file: PathBuf,
        /// Check degrees -1 ..= -N (default: top degree)
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Basis of the derivations of one degree
    Derivations {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
    },
    /// Characteristic subspace for bundles of the given rank
    Char {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
    },
    /// Level-by-level rigidity trace over a torus of the given rank
    Rigidity {
        file: PathBuf,
        #[arg(long)]
        torus: usize,
    },
    /// Bundled example algebras
    Examples {
        #[command(subcommand)]
        action: Option<ExamplesAction>,
    },
}

#[derive(Subcommand, Debug)]
enum ExamplesAction {
    /// List bundled examples
    List,
    /// Print one bundled example file
    Show { name: String },
}

fn minus(d: i64) -> String {
    if d < 0 {
        format!("−{}", -d)
    } else {
        d.to_string()
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("reports serialize");
    writeln!(out, "{text}")
}

fn load(path: &Path, validated: bool) -> Result<GradedAlgebra, String> {
    let file = AlgebraFile::read(path).map_err(|e| e.to_string())?;
    let loaded = if validated {
        file.load()
    } else {
        file.load_unvalidated()
    };
    loaded.map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs the CLI on `argv` (including the program name), writing to stdout and
/// stderr, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_HOLDS
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_ERROR
                }
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    let io_err = |e: std::io::Error| e.to_string();
    match &cli.command {
        Command::Validate { file } => {
            let a = load(file, false)?;
            let report = a.validate();
            if cli.json {
                emit(out, &ValidateReport::new(&a, &report)).map_err(io_err)?;
            } else if report.is_valid() {
                writeln!(
                    out,
                    "valid: {} (dimension {}, top degree {})",
                    a.name(),
                    a.dim(),
                    a.top_degree()
                )
                .map_err(io_err)?;
            } else {
                writeln!(out, "invalid: {} violation(s)", report.violations.len()).map_err(io_err)?;
                for line in report.render(&a) {
                    writeln!(out, "  {line}").map_err(io_err)?;
                }
            }
            Ok(if report.is_valid() { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::CheckH { file, max_degree } => {
            let a = load(file, true)?;
            let v = check_class_h_with(&a, *max_degree, Strategy::default());
            if cli.json {
                emit(out, &CheckHReport::new(&a, &v)).map_err(io_err)?;
            } else {
                let checked = v.dimensions.len() as i64;
                if v.in_class {
                    if checked == 0 {
                        writeln!(out, "in class H; no negative degrees to check").map_err(io_err)?;
                    } else {
                        writeln!(out, "in class H; degrees checked −1..{}", minus(-checked)).map_err(io_err)?;
                    }
                } else {
                    writeln!(out, "not in class H").map_err(io_err)?;
                }
                if let Some(c) = &v.certificate {
                    writeln!(out, "degree {}: {}", minus(c.degree), c.derivation.render(&a)).map_err(io_err)?;
                }
                writeln!(
                    out,
                    "connectivity: {} (dim H^0 = {}, dim H^1 = {})",
                    if v.connectivity_ok { "ok" } else { "fails" },
                    a.piece_dim(0),
                    a.piece_dim(1)
                )
                .map_err(io_err)?;
            }
            Ok(if v.in_class { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::Derivations { file, degree } => {
            let a = load(file, true)?;
            let space = derivation_space(&a, *degree);
            if cli.json {
                emit(out, &DerivationsReport::new(&a, *degree, &space)).map_err(io_err)?;
            } else {
                writeln!(out, "degree {}: dimension {}", minus(*degree), space.len()).map_err(io_err)?;
                for (i, m) in space.iter().enumerate() {
                    writeln!(out, "  [{}] {}", i + 1, m.render(&a)).map_err(io_err)?;
                }
            }
            Ok(EXIT_HOLDS)
        }
        Command::Char { file, rank } => {
            let a = load(file, true)?;
            let c = char_subspace(&a, *rank).map_err(|e| e.to_string())?;
            if cli.json {
                emit(out, &CharReport::new(&a, &c)).map_err(io_err)?;
            } else {
                let degrees: Vec<String> = c.degrees.iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "Char(rank {}): degrees {{{}}}, dimension {}",
                    c.rank,
                    degrees.join(", "),
                    c.dimension
                )
                .map_err(io_err)?;
                for (d, idx) in &c.basis_indices {
                    let labels: Vec<&str> = idx.iter().map(|&i| a.label(i)).collect();
                    let shown = if labels.is_empty() { "0".to_owned() } else { labels.join(", ") };
                    writeln!(out, "  H^{d}: {shown}").map_err(io_err)?;
                }
            }
            Ok(EXIT_HOLDS)
        }
        Command::Rigidity { file, torus } => {
            if *torus > MAX_TORUS_RANK {
                return Err(format!("--torus must be at most {MAX_TORUS_RANK}"));
            }
            let a = load(file, true)?;
            let t = prove_rigidity(&a, *torus);
            if cli.json {
                emit(out, &RigidityReport::new(&a, &t)).map_err(io_err)?;
            } else {
                writeln!(out, "{}", t.summary()).map_err(io_err)?;
                if let Some(cert) = t.levels.last().and_then(|l| l.certificate.as_ref()) {
                    writeln!(out, "degree {}: {}", minus(cert.shift()), cert.render(&a)).map_err(io_err)?;
                }
                writeln!(
                    out,
                    "levels checked: min(torus rank {}, top degree {}) = {}",
                    t.torus_rank, t.top_degree, t.level_cap
                )
                .map_err(io_err)?;
            }
            Ok(match t.verdict {
                RigidityVerdict::Established => EXIT_HOLDS,
                RigidityVerdict::NotEstablished { .. } => EXIT_FAILS,
            })
        }
        Command::Examples { action } => match action {
            None | Some(ExamplesAction::List) => {
                if cli.json {
                    let doc = ExamplesListReport {
                        command: "examples",
                        examples: CORPUS
                            .iter()
                            .map(|e| ExampleEntry {
                                name: e.name,
                                file: e.file,
                                description: e.description,
                                expected: e.expected.describe(),
                            })
                            .collect(),
                    };
                    emit(out, &doc).map_err(io_err)?;
                } else {
                    for e in CORPUS {
                        writeln!(
                            out,
                            "{:<8} {:<20} {:<38} [{}]",
                            e.name,
                            e.file,
                            e.description,
                            e.expected.describe()
                        )
                        .map_err(io_err)?;
                    }
                }
                Ok(EXIT_HOLDS)
            }
            Some(ExamplesAction::Show { name }) => {
                let e = corpus::find(name).ok_or_else(|| format!("no bundled example named `{name}`"))?;
                if cli.json {
                    emit(
                        out,
                        &ExampleShowReport {
                            command: "examples",
                            name: e.name,
                            content: e.contents,
                        },
                    )
                    .map_err(io_err)?;
                } else {
                    write!(out, "{}", e.contents).map_err(io_err)?;
                }
                Ok(EXIT_HOLDS)
            }
        },
    }
}
