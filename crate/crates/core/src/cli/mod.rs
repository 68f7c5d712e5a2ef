//! The `simson` command-line tool.
//!
//! Exit codes: 0 on success, 2 for usage or parse errors, 3 for degenerate
//! geometry and 4 when a verification check fails. Errors writing output
//! files exit with 1.

mod approx;
mod construct;
mod limit;
mod verify;

pub use verify::{negative_control_offset, CheckKind};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand};

use crate::error::Error;
use crate::geom::Tolerance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "simson", version, about = "Construct and verify Simson polygons")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Tolerance as `eps` or `abs_eps,rel_eps`
    #[arg(long, global = true, value_parser = parse_tolerance)]
    pub tolerance: Option<Tolerance>,
    /// Write JSON output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write an SVG figure
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Input scene (JSON)
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Print nothing; report through the exit code only
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a polygon from its Simson point, Simson line and feet
    Construct(construct::ConstructArgs),
    /// Run checks on the polygon of a scene
    Verify(verify::VerifyArgs),
    /// Optimal piecewise-linear interpolation of a parabola
    Approx(approx::ApproxArgs),
    /// Convergence of equidistant chains to their limiting parabola
    Limit(limit::LimitArgs),
}

fn parse_tolerance(s: &str) -> Result<Tolerance, String> {
    let nums: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match nums[..] {
        [eps] => Tolerance::uniform(eps),
        [abs, rel] => Tolerance::new(abs, rel),
        _ => return Err("expected eps or abs_eps,rel_eps".into()),
    }
    .map_err(|e| e.to_string())
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidTolerance
            | Error::IndexOutOfRange(_)
            | Error::BadInterval(..)
            | Error::UnorderedKnots
            | Error::OutOfDomain(..) => EXIT_USAGE,
            _ => EXIT_DEGENERATE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Where results go.
pub(crate) struct Output<'a> {
    global: &'a GlobalArgs,
}

impl Output<'_> {
    pub(crate) fn tolerance(&self) -> Tolerance {
        self.global.tolerance.unwrap_or_default()
    }

    pub(crate) fn json<T: serde::Serialize>(&self, value: &T) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value).expect("output serialization cannot fail");
        text.push('\n');
        match &self.global.out {
            Some(path) => write_file(path, &text),
            None if self.global.quiet => Ok(()),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    pub(crate) fn svg(&self, render: impl FnOnce() -> String) -> Result<(), CliError> {
        match &self.global.svg {
            Some(path) => write_file(path, &render()),
            None => Ok(()),
        }
    }

    pub(crate) fn input(&self) -> Result<String, CliError> {
        let path = self
            .global
            .input
            .as_ref()
            .ok_or_else(|| CliError::usage("--in <scene.json> is required"))?;
        std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError {
        code: EXIT_IO,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let out = Output { global: &cli.global };
    let result = match &cli.command {
        Command::Construct(a) => construct::run(a, &out),
        Command::Verify(a) => verify::run(a, &out),
        Command::Approx(a) => approx::run(a, &out),
        Command::Limit(a) => limit::run(a, &out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            if !cli.global.quiet {
                eprintln!("error: {}", e.message);
            }
            e.code
        }
    }
}
