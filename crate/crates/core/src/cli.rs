//! Command-line front end.
//!
//! Exit codes: `0` success, `1` usage error, `2` verification failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::cohomology::{bg_series, Determinant};
use crate::error::{Error, Result};
use crate::report::{BettiReport, Check, Format, Route, StrataReport};
use crate::strata::{default_truncation, moduli_series, stratum_chain, ModuliSpec};
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "higgs-betti",
    version,
    about = "Betti numbers of rank-2 Higgs bundle moduli spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Poincaré series of the moduli space (degree 1) or the
    /// equivariant series of the semistable locus (degree 0).
    Betti(RequestArgs),
    /// Run every cross-route identity for the given moduli problem.
    Verify(RequestArgs),
    /// Dump the equivariant series of each space in the stratification.
    Strata(RequestArgs),
}

#[derive(Args, Debug)]
struct RequestArgs {
    /// Genus of the curve (at least 2).
    #[arg(short = 'g', long)]
    genus: u32,
    /// Degree of the rank-2 bundle, 0 or 1.
    #[arg(short = 'd', long)]
    degree: u8,
    /// `fixed` or `non-fixed`.
    #[arg(long)]
    determinant: Determinant,
    /// Highest power of t to compute. Defaults to 6g+10 (degree 0) or
    /// 12g-8 (degree 1).
    #[arg(short = 'N', long = "truncate")]
    truncate: Option<usize>,
    /// `table`, `json` or `csv`.
    #[arg(short = 'f', long, default_value = "table")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Betti,
    Verify,
    Strata,
}

/// A parsed, not yet validated command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliRequest {
    pub action: Action,
    pub genus: u32,
    pub degree: u8,
    pub determinant: Determinant,
    pub truncation: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl CliRequest {
    pub fn spec(&self) -> Result<ModuliSpec> {
        if self.genus < 2 {
            return Err(Error::Usage(format!("genus must be at least 2, got {}", self.genus)));
        }
        if self.degree > 1 {
            return Err(Error::Usage(format!("degree must be 0 or 1, got {}", self.degree)));
        }
        let n = self
            .truncation
            .unwrap_or_else(|| default_truncation(self.genus, self.degree));
        if n < 1 {
            return Err(Error::Usage("truncation must be at least 1".into()));
        }
        ModuliSpec::new(self.genus, self.degree, self.determinant, n)
    }
}

/// What a run produced: the exit code and the text for each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses arguments (including the program name) into a request. Help and
/// version requests come back as an `Outcome` with exit code 0.
pub fn parse<I, T>(args: I) -> std::result::Result<CliRequest, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        let rendered = e.render().to_string();
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                code: EXIT_OK,
                stdout: rendered,
                stderr: String::new(),
            },
            _ => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: rendered,
            },
        }
    })?;
    let (action, a) = match cli.command {
        Command::Betti(a) => (Action::Betti, a),
        Command::Verify(a) => (Action::Verify, a),
        Command::Strata(a) => (Action::Strata, a),
    };
    Ok(CliRequest {
        action,
        genus: a.genus,
        degree: a.degree,
        determinant: a.determinant,
        truncation: a.truncate,
        format: a.format,
        output: a.output,
    })
}

/// Parses and runs a full command line.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse(args) {
        Ok(req) => run(&req),
        Err(outcome) => outcome,
    }
}

pub fn run(req: &CliRequest) -> Outcome {
    let mut outcome = match req.action {
        Action::Betti => run_betti(req),
        Action::Verify => run_verify(req),
        Action::Strata => run_strata(req),
    };
    if let Some(path) = &req.output {
        if outcome.code != EXIT_USAGE {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                return Outcome::usage(format!("cannot write {}: {e}", path.display()));
            }
            outcome.stdout.clear();
        }
    }
    outcome
}

fn route_for(spec: &ModuliSpec) -> Route {
    if spec.degree() == 1 {
        Route::Moduli
    } else {
        Route::Equivariant
    }
}

pub fn run_betti(req: &CliRequest) -> Outcome {
    let spec = match req.spec() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    match moduli_series(&spec) {
        Ok(series) => {
            let report = BettiReport {
                spec,
                series,
                route: route_for(&spec),
                checks: Vec::new(),
            };
            Outcome {
                code: EXIT_OK,
                stdout: report.render(req.format),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_VERIFY,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn run_verify(req: &CliRequest) -> Outcome {
    let spec = match req.spec() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let checks = verify(&spec);
    let series = moduli_series(&spec).unwrap_or_else(|_| crate::series::TruncSeries::zero(spec.truncation()));
    let report = BettiReport {
        spec,
        series,
        route: Route::Stratified,
        checks,
    };
    let failed: Vec<&Check> = report.checks.iter().filter(|c| !c.passed).collect();
    let stderr: String = failed
        .iter()
        .map(|c| format!("FAIL {}: {}\n", c.name, c.detail))
        .collect();
    Outcome {
        code: if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY },
        stdout: report.render(req.format),
        stderr,
    }
}

pub fn run_strata(req: &CliRequest) -> Outcome {
    let spec = match req.spec() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    match stratum_chain(&spec) {
        Ok(chain) => {
            let bg = bg_series(spec.surface(), spec.determinant(), spec.truncation());
            Outcome {
                code: EXIT_OK,
                stdout: StrataReport::new(spec, &chain, &bg).render(req.format),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_VERIFY,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
