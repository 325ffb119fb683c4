//! Thin CLI over the `albert` library: load or construct a Hermitian
//! matrix, run the solvers, and emit machine-readable reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use albert::jordan::JordanMatrix;
use albert::octonion::Octonion;
use albert::{catalog, eigen, report};

#[derive(Parser)]
#[command(
    name = "albert",
    version,
    about = "Octonionic Hermitian matrices and their right eigenvalues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct MatrixSource {
    /// JSON matrix file: either {"p","m","n","a","b","c"} with octonions
    /// as 8-number arrays, or {"example":1..3,"p":..,"q":..,"theta":..}
    #[arg(long, conflicts_with = "example")]
    file: Option<PathBuf>,
    /// Built-in worked matrix (1, 2, or 3)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    example: Option<u8>,
    /// Diagonal parameter for --example
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// Off-diagonal scale for --example
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    /// Angle for --example 1 (ignored by 2 and 3)
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the complete verification battery and print the report
    VerifyPaper {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Real-eigenvalue families (and optionally a non-real eigen-search)
    Eigs {
        #[command(flatten)]
        source: MatrixSource,
        /// Also search for non-real eigenvalues from random seeds
        #[arg(long)]
        search_nonreal: bool,
        /// Number of random search starts
        #[arg(long, default_value_t = 16)]
        seeds: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Residual tolerance for accepting a found pair
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Real dimension of the eigenspace at a given eigenvalue
    Nullity {
        #[command(flatten)]
        source: MatrixSource,
        /// Eigenvalue as a JSON array of 8 coefficients [1,i,j,k,kl,jl,il,l]
        #[arg(long)]
        lambda: String,
    },
    /// Randomized identity suites with deterministic seeding
    PropertySuite {
        #[arg(long, default_value_t = 10000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Accepted shapes of a matrix file.
#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Example {
        example: u8,
        #[serde(default)]
        p: f64,
        #[serde(default = "default_q")]
        q: f64,
        #[serde(default)]
        theta: f64,
    },
    Plain(JordanMatrix),
}

fn default_q() -> f64 {
    1.0
}

#[derive(Debug)]
struct CliError {
    message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn parse_error(message: String) -> CliError {
    CliError { message }
}

fn built_in(example: u8, p: f64, q: f64, theta: f64) -> Result<JordanMatrix, CliError> {
    match example {
        1 => Ok(catalog::example1(p, q, theta)),
        2 => Ok(catalog::example2(p, q)),
        3 => Ok(catalog::example3(p, q)),
        other => Err(parse_error(format!(
            "unknown example {other} (use 1, 2, or 3)"
        ))),
    }
}

fn load_matrix(source: &MatrixSource) -> Result<JordanMatrix, CliError> {
    if let Some(example) = source.example {
        return built_in(example, source.p, source.q, source.theta);
    }
    let Some(path) = &source.file else {
        return Err(parse_error(
            "no matrix given: pass --file PATH or --example {1|2|3}".into(),
        ));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_error(format!("cannot read {}: {e}", path.display())))?;
    let parsed: MatrixFile = serde_json::from_str(&text).map_err(|e| {
        parse_error(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    let matrix = match parsed {
        MatrixFile::Plain(m) => m,
        MatrixFile::Example {
            example,
            p,
            q,
            theta,
        } => built_in(example, p, q, theta)?,
    };
    let finite = matrix.a.is_finite() && matrix.b.is_finite() && matrix.c.is_finite();
    if !finite || !matrix.p.is_finite() || !matrix.m.is_finite() || !matrix.n.is_finite() {
        return Err(parse_error(format!(
            "{}: matrix has non-finite entries",
            path.display()
        )));
    }
    Ok(matrix)
}

fn parse_lambda(text: &str) -> Result<Octonion, CliError> {
    serde_json::from_str(text)
        .map_err(|e| parse_error(format!("--lambda: expected a JSON array of 8 numbers: {e}")))
}

fn run() -> Result<ExitCode, CliError> {
    match Cli::parse().command {
        Command::VerifyPaper { seed, format } => {
            let rep = report::verify_paper(seed);
            match format {
                Format::Json => println!("{}", rep.to_json_string()),
                Format::Text => print!("{}", rep.render_text()),
            }
            Ok(if rep.has_failures() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Eigs {
            source,
            search_nonreal,
            seeds,
            seed,
            tol,
            format,
        } => {
            let matrix = load_matrix(&source)?;
            let rep = report::eigs_report(&matrix, search_nonreal, seeds, seed, tol)
                .map_err(|e| parse_error(format!("solver error: {e}")))?;
            match format {
                Format::Json => println!("{}", rep.to_json_string()),
                Format::Text => print!("{}", rep.render_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nullity { source, lambda } => {
            let matrix = load_matrix(&source)?;
            let lambda = parse_lambda(&lambda)?;
            println!("{}", eigen::eigenspace_dim(&matrix, lambda));
            Ok(ExitCode::SUCCESS)
        }
        Command::PropertySuite {
            trials,
            seed,
            format,
        } => {
            if trials < 1 {
                return Err(parse_error("--trials must be at least 1".into()));
            }
            let rep = report::property_suite(trials, seed);
            match format {
                Format::Json => println!("{}", rep.to_json_string()),
                Format::Text => print!("{}", rep.render_text()),
            }
            Ok(if rep.all_within_tolerance() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
