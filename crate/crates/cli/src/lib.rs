//! JSON reports, spec files and seeded sweeps on top of `isospectra-core`.
//!
//! The `isospectra` binary is a thin clap front end over this library.

pub mod error;
pub mod report;
pub mod spec_io;
pub mod sweep;

pub use error::{CliError, Exit};
pub use report::{run, run_evolve, EvolveReport, Residuals, RunReport, Stage, Tolerances};
pub use spec_io::{resolve, SpecFile, SpecOverrides};
pub use sweep::{sweep, SweepConfig, SweepSummary};
