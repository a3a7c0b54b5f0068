//! Command-line front end: matrix-set files in, plain-text reports and CSV
//! out, with exit codes 0 (pass), 1 (fail), 2 (infeasible), 3 (usage or
//! input error).

pub mod commands;
pub mod file;
pub mod grid;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use file::{parse_matrix_file, parse_matrix_str, to_json, FileError};
pub use report::{RunReport, Section, Status, Verdict};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Requirement(#[from] dirac_core::dispersion::RequirementError),
    #[error(transparent)]
    Grid(#[from] grid::GridError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

#[derive(Parser, Debug)]
#[command(name = "dirac", version, about = "Exact checks of Dirac matrix sets and the degeneracy conditions behind them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full audit of a matrix-set file: dispersion, anticommutation, trace/det, structure.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        multiplicity: usize,
        /// Freeze the mass to zero in the hamiltonian and in E_p.
        #[arg(long)]
        massless: bool,
    },
    /// Forced characteristic-polynomial coefficients, or an infeasibility certificate.
    Solve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        multiplicity: usize,
    },
    /// Step-by-step consequences of the double-root condition for a four-component set.
    Derive { file: PathBuf },
    /// Eigenvalues over a momentum grid, written as CSV.
    Spectrum {
        file: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        mass: f64,
        /// `lin:lo:hi:count`, or three of them separated by commas.
        #[arg(long, default_value = "lin:-2:2:11")]
        grid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Prints or writes a standard representation (dirac-pauli, weyl-chiral, majorana).
    Catalog {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                Verdict::Error.exit_code()
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { file, multiplicity, massless } => commands::verify(&file, multiplicity, massless),
        Command::Solve { n, multiplicity } => commands::solve(n, multiplicity),
        Command::Derive { file } => commands::derive(&file),
        Command::Spectrum { file, mass, grid, out } => commands::spectrum(&file, mass, &grid, &out),
        Command::Catalog { name, out } => {
            return match commands::catalog_file(&name, out.as_deref()) {
                Ok(text) => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                Err(e) => fail(stderr, &e),
            };
        }
    };
    match result {
        Ok(report) => {
            let _ = write!(stdout, "{report}");
            report.verdict.exit_code()
        }
        Err(e) => fail(stderr, &e),
    }
}

fn fail(stderr: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(stderr, "error: {e}");
    Verdict::Error.exit_code()
}
