//! `stonekit` command line: document loading, compute commands, the law
//! suite runner and Graphviz export.
//!
//! Exit codes: 0 success, 1 a law or verdict failed, 2 usage or input error.

pub mod commands;
pub mod doc;
pub mod dot;
pub mod laws;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::doc::{DocError, Document};
use crate::laws::{LawOptions, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocError),
    #[error("`{command}` needs a {expected} document")]
    WrongKind { command: String, expected: &'static str },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{0}")]
    Core(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    LawFailure,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::LawFailure => 1,
        }
    }
}

/// Finite Stone duality toolkit.
#[derive(Debug, Parser)]
#[command(name = "stonekit", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a document and print its canonical form.
    Validate { file: PathBuf },
    /// Prime spectrum of a lattice.
    Spectrum { file: PathBuf },
    /// Ideal lattice of a lattice.
    Ideals { file: PathBuf },
    /// Open prime filters of a space.
    Filters { file: PathBuf },
    /// Sobrification of a space.
    Sobrify { file: PathBuf },
    /// Kolmogorov (T0) quotient of a space.
    T0 { file: PathBuf },
    /// Hausdorff reflection (quasi-component quotient) of a space.
    Hausdorff { file: PathBuf },
    /// Boolean center (compact regular coreflection) of a lattice.
    Center { file: PathBuf },
    /// Way-below relation of a lattice.
    Waybelow { file: PathBuf },
    /// Both sides of the Čech–Stone square for a space.
    Cechstone { file: PathBuf },
    /// Run a law suite over an enumerated universe.
    Laws {
        #[arg(long)]
        suite: Suite,
        /// Largest space size (≤ 4 exhaustive, 5 and above sampled).
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        /// Largest lattice size.
        #[arg(long, default_value_t = laws::MAX_LATTICE)]
        max_lattice: usize,
        /// Sampled topologies per point count above 4.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = stonekit::enumerate::DEFAULT_SEED)]
        seed: u64,
        /// Allow limits beyond the guard rails.
        #[arg(long)]
        force: bool,
    },
    /// Export a document as a graph.
    Export {
        #[command(subcommand)]
        format: ExportFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExportFormat {
    /// Graphviz DOT: Hasse diagram of a lattice, specialization order of a space.
    Dot { file: PathBuf },
}

/// Loads from a path, or from stdin when the path is `-`.
pub fn load_input(path: &Path) -> Result<Document, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(doc::parse(&text)?);
    }
    Ok(doc::load(path)?)
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<Status, CliError> {
    let compute = |file: &Path, f: fn(&Document) -> Result<commands::Output, CliError>| f(&load_input(file)?);
    let result = match command {
        Command::Validate { file } => {
            let d = load_input(&file)?;
            write!(out, "{d}")?;
            return Ok(Status::Ok);
        }
        Command::Spectrum { file } => compute(&file, commands::spectrum)?,
        Command::Ideals { file } => compute(&file, commands::ideals)?,
        Command::Filters { file } => compute(&file, commands::filters)?,
        Command::Sobrify { file } => compute(&file, commands::sobrify)?,
        Command::T0 { file } => compute(&file, commands::t0)?,
        Command::Hausdorff { file } => compute(&file, commands::hausdorff)?,
        Command::Center { file } => compute(&file, commands::center)?,
        Command::Waybelow { file } => compute(&file, commands::waybelow)?,
        Command::Cechstone { file } => compute(&file, commands::cechstone)?,
        Command::Laws {
            suite,
            max_points,
            max_lattice,
            samples,
            seed,
            force,
        } => {
            let opts = LawOptions {
                suite,
                max_points,
                max_lattice,
                samples,
                seed,
                force,
            };
            let rep = laws::run(&opts)?;
            for line in &rep.lines {
                writeln!(out, "{line}")?;
            }
            let failed = rep.failures().count();
            writeln!(out, "# {suite}: {} lines, {failed} FAIL", rep.lines.len())?;
            return Ok(if failed == 0 { Status::Ok } else { Status::LawFailure });
        }
        Command::Export {
            format: ExportFormat::Dot { file },
        } => {
            let d = load_input(&file)?;
            write!(out, "{}", dot::export(&d))?;
            return Ok(Status::Ok);
        }
    };
    write!(out, "{}", result.text)?;
    Ok(if result.ok { Status::Ok } else { Status::LawFailure })
}
