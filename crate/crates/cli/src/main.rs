use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use isospectra::spec_io::parse_complex;
use isospectra::{resolve, run, run_evolve, sweep, CliError, Exit, SpecOverrides, Stage, SweepConfig, Tolerances};
use isospectra_core::{tol, Family, C64};
use serde::Serialize;

/// Zeros, isospectral matrices and zero dynamics of hypergeometric and
/// Askey-scheme polynomials. Reports are JSON on stdout.
#[derive(Parser)]
#[command(name = "isospectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zeros of the polynomial.
    Zeros {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Zeros, isospectral matrix, spectra and their residuals.
    Matrix {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Everything `matrix` reports plus identity, equilibrium and defining-equation residuals.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Integrates the zero system from perturbed zeros and compares with the algebraic solution.
    Evolve {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        t1: f64,
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 1e-3)]
        perturb: f64,
    },
    /// Runs `verify` on seeded random specs and summarizes.
    Sweep {
        /// Families to sweep; all when omitted.
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
        #[arg(long, default_value_t = 20)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[command(flatten)]
        tol: TolArgs,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// ghyp, gbasic, jacobi, wilson, racah, askey-wilson or q-racah.
    #[arg(long)]
    family: Option<String>,
    /// Degree.
    #[arg(short = 'N', long = "N")]
    n: Option<usize>,
    /// Comma-separated, e.g. `2,0.5+1i`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_complex)]
    alphas: Option<Vec<C64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_complex)]
    betas: Option<Vec<C64>>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    q: Option<C64>,
    /// JSON spec; flags override its fields.
    #[arg(long)]
    spec_file: Option<PathBuf>,
}

#[derive(Args)]
struct TolArgs {
    #[arg(long, default_value_t = tol::SPECTRAL)]
    tol_spectral: f64,
    /// Bound on identity, equilibrium and defining-equation residuals.
    #[arg(long, default_value_t = tol::IDENTITY)]
    tol_identity: f64,
}

impl SpecArgs {
    fn resolve(&self) -> Result<isospectra_core::FamilySpec, CliError> {
        let o = SpecOverrides {
            family: self.family.clone(),
            n: self.n,
            alphas: self.alphas.clone(),
            betas: self.betas.clone(),
            q: self.q,
        };
        resolve(self.spec_file.as_deref(), &o)
    }
}

impl TolArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances { spectral: self.tol_spectral, identity: self.tol_identity, ..Tolerances::default() }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: String,
    exit_code: u8,
}

fn emit<T: Serialize>(value: &T) {
    let mut out = std::io::stdout().lock();
    if serde_json::to_writer_pretty(&mut out, value).is_ok() {
        let _ = writeln!(out);
    }
}

fn execute(command: Command) -> Result<Exit, CliError> {
    let verify = |spec: &SpecArgs, stage, tol| -> Result<Exit, CliError> {
        let report = run(&spec.resolve()?, stage, &tol)?;
        emit(&report);
        Ok(Exit::from_pass(report.pass))
    };
    match command {
        Command::Zeros { spec } => verify(&spec, Stage::Zeros, Tolerances::default()),
        Command::Matrix { spec, tol } => verify(&spec, Stage::Matrix, tol.tolerances()),
        Command::Verify { spec, tol } => verify(&spec, Stage::Verify, tol.tolerances()),
        Command::Evolve { spec, t1, steps, perturb } => {
            let report = run_evolve(&spec.resolve()?, t1, steps, perturb)?;
            emit(&report);
            Ok(Exit::from_pass(report.pass))
        }
        Command::Sweep { family, draws, seed, nmax, tol } => {
            let families = if family.is_empty() {
                Family::ALL.to_vec()
            } else {
                family.iter().map(|f| f.parse()).collect::<Result<Vec<Family>, _>>()?
            };
            let summary = sweep(&SweepConfig { families, draws, seed, nmax, tol: tol.tolerances() })?;
            emit(&summary);
            Ok(Exit::from_pass(summary.pass))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ISOSPECTRA_LOG", "warn")).init();
    let cli = Cli::parse();
    let exit = execute(cli.command).unwrap_or_else(|e| {
        log::error!("{e}");
        let exit = e.exit();
        emit(&ErrorReport { error: e.kind(), message: e.to_string(), exit_code: exit.code() });
        exit
    });
    ExitCode::from(exit.code())
}
