//! The `coxstar` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
//! 3 disagreement between the inductive and direct routes.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use coxstar::demazure;
use coxstar::emit::{emit_table, OutputFormat};
use coxstar::facemonoid::{self, table, Checks};
use coxstar::oracle::{self, DEFAULT_GUARD};
use coxstar::{CoxeterGroup, Error, SubsetJ};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "coxstar", version, about = "Demazure products and the face monoid of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full J1 ⋆ J2 table with verification flags.
    Table {
        /// Diagram, e.g. A3, B4xA1, I2(7).
        r#type: String,
        #[arg(long, default_value = "json")]
        format: String,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Canonical word of the Demazure product x * y.
    Star {
        r#type: String,
        /// Space-separated generator labels; "-" for the identity.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Canonical word of the downward action x |> y.
    Tri {
        r#type: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Longest element of a parabolic subgroup.
    Longest {
        r#type: String,
        /// Comma-separated labels; "-" for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
    },
    /// J1 ⋆ J2.
    Starsets {
        r#type: String,
        #[arg(long, allow_hyphen_values = true)]
        j1: String,
        #[arg(long, allow_hyphen_values = true)]
        j2: String,
    },
    /// Check closure, commutativity, closed forms, the inductive route and
    /// the property suites on every subset pair.
    Verify {
        r#type: String,
        /// all, theorem, lemmas, closedform or inductive.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Compare the fast routines against brute-force enumeration.
    OracleCheck {
        r#type: String,
        /// Largest group order to enumerate.
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Failure::Core(Error::InternalMismatch { .. }) => EXIT_MISMATCH,
                Failure::Io(_) => EXIT_USAGE,
                Failure::Core(_) => EXIT_USAGE,
            }
        }
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => e.fmt(f),
            Failure::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Table { r#type, format, out: path } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let format: OutputFormat = format.parse()?;
            let t = facemonoid::full_table(&group, table::rank_bound_from_env())?;
            let text = emit_table(&t, format);
            match path {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    writeln!(err, "wrote {}", path.display())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            let f = t.flags();
            Ok(if f.closure && f.commutative && f.containment && f.closed_form_match { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Star { r#type, x, y } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let z = demazure::star(&group.parse_word(&x)?, &group.parse_word(&y)?)?;
            writeln!(out, "{}", z.canonical_word())?;
            Ok(EXIT_OK)
        }
        Command::Tri { r#type, x, y } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let z = demazure::down(&group.parse_word(&x)?, &group.parse_word(&y)?)?;
            writeln!(out, "{}", z.canonical_word())?;
            Ok(EXIT_OK)
        }
        Command::Longest { r#type, subset } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let j = SubsetJ::parse(&subset, group.rank())?;
            let w = demazure::longest(&group, j)?;
            writeln!(out, "{}", w.canonical_word())?;
            writeln!(out, "length {}", w.len())?;
            Ok(EXIT_OK)
        }
        Command::Starsets { r#type, j1, j2 } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let j1 = SubsetJ::parse(&j1, group.rank())?;
            let j2 = SubsetJ::parse(&j2, group.rank())?;
            writeln!(out, "{}", facemonoid::star_sets(&group, j1, j2)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { r#type, checks } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let checks: Checks = checks.parse()?;
            let report = facemonoid::verify(&group, checks)?;
            writeln!(out, "{report}")?;
            Ok(if report.passed() {
                EXIT_OK
            } else if report.has_internal_mismatch() {
                EXIT_MISMATCH
            } else {
                EXIT_VERIFY
            })
        }
        Command::OracleCheck { r#type, guard } => {
            let group = CoxeterGroup::parse(&r#type)?;
            let r = oracle::cross_check(&group, guard)?;
            writeln!(out, "diagram: {}", r.diagram)?;
            writeln!(out, "order: {}", r.order)?;
            writeln!(out, "pairs: {}", r.pairs)?;
            writeln!(out, "length mismatches: {}", r.length_mismatches)?;
            writeln!(out, "bruhat mismatches: {}", r.bruhat_mismatches)?;
            writeln!(out, "star mismatches: {}", r.star_mismatches)?;
            writeln!(out, "down mismatches: {}", r.down_mismatches)?;
            writeln!(out, "witness failures: {}", r.witness_failures)?;
            for e in &r.examples {
                writeln!(out, "  {e}")?;
            }
            writeln!(out, "result: {}", if r.is_clean() { "PASS" } else { "FAIL" })?;
            Ok(if r.is_clean() { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}
