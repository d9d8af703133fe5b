//! `mazic`: regions, sum rates and verification suites for the Gaussian and
//! discrete multiple-access Z-interference channel.

mod commands;
mod error;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "mazic", version, about = "Rate regions of the multiple-access Z-interference channel")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the interference regime of a Gaussian channel.
    Classify,
    /// Emit a rate region (or a swept union of regions) as JSON or CSV.
    Region {
        #[arg(value_enum)]
        which: RegionKind,
    },
    /// Endpoints and validity of the strong-interference boundary segment.
    Segment,
    /// Sum capacity or sum-rate upper bound under weak interference.
    Sumrate {
        #[arg(value_enum)]
        which: SumrateKind,
    },
    /// Sample the achievable sum rate over P1 and its concave envelope.
    Sweep,
    /// Run a verification suite; exits 4 on any failure.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    Inner,
    InnerTs,
    Nosplit,
    StrongOuter,
    OneStrongOuter,
    VeryStrong,
    MixedOuter,
    MixedInner,
    WeakOuter,
    BLargeCapacity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumrateKind {
    Symmetric,
    Theorem6,
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Containment,
    FmEquivalence,
    DmcChecks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p1: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p2: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p3: Option<f64>,
    /// JSON channel file; a Gaussian `{a,b,p1,p2,p3}` object, or a discrete
    /// channel for `verify dmc-checks`. Inline flags override its fields.
    #[arg(long, global = true)]
    pub channel: Option<PathBuf>,
    /// Grid resolution: time-sharing or split grid, or sweep sample count.
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Comparison tolerance in bits for verification suites.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Private power fraction of user 1.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Private power fraction of user 2.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Number of random instances for verification suites.
    #[arg(long, global = true)]
    pub count: Option<usize>,
    /// Sweep range for P1.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub lo: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hi: Option<f64>,
}

impl Opts {
    pub fn grid_or(&self, default: usize) -> Result<usize, CliError> {
        let n = self.grid.unwrap_or(default);
        if n < 2 {
            return Err(CliError::Input(format!("--grid must be >= 2, got {n}")));
        }
        Ok(n)
    }

    pub fn tol_or(&self, default: f64) -> Result<f64, CliError> {
        let t = self.tol.unwrap_or(default);
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Input(format!("--tol must be positive, got {t}")));
        }
        Ok(t)
    }
}

/// Rendered command output and whether it reports a verification failure.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let o = &cli.opts;
    match cli.command {
        Command::Classify => commands::classify(o),
        Command::Region { which } => commands::region(o, which),
        Command::Segment => commands::segment(o),
        Command::Sumrate { which } => commands::sumrate(o, which),
        Command::Sweep => commands::sweep(o),
        Command::Verify { suite } => verify::run(o, suite),
    }
}

fn emit(opts: &Opts, text: &str) -> Result<(), CliError> {
    let mut body = text.to_owned();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &opts.out {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => match std::io::stdout().write_all(body.as_bytes()) {
            // A closed downstream pipe (e.g. `| head`) is not an error.
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Input(e.to_string())),
            _ => Ok(()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli.opts, &out.text).map(|_| out.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(4),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
