//! Seeded random verification sweeps over the safe parameter box.

use isospectra_core::{Family, FamilySpec, C64};
use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::report::{run, Residuals, Stage, Tolerances};
use crate::spec_io::SpecFile;

pub const ALPHA_BOX: (f64, f64) = (0.5, 3.0);
pub const BETA_BOX: (f64, f64) = (1.5, 4.0);
pub const Q_BOX: (f64, f64) = (1.3, 2.5);
/// `(α count, β count)` drawn for the free-arity families.
pub const GHYP_ARITIES: [(usize, usize); 4] = [(1, 1), (2, 1), (2, 2), (3, 2)];
pub const GBASIC_ARITIES: [(usize, usize); 4] = [(1, 1), (2, 1), (2, 2), (3, 2)];

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub draws: usize,
    pub seed: u64,
    pub nmax: usize,
    pub tol: Tolerances,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrawFailure {
    pub draw: usize,
    pub spec: SpecFile,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilySummary {
    pub family: String,
    pub draws: usize,
    pub passed: usize,
    /// Runs that completed with a residual out of tolerance.
    pub failed: usize,
    /// Runs that stopped with an error.
    pub errored: usize,
    pub worst: Residuals,
    pub failures: Vec<DrawFailure>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub seed: u64,
    pub draws: usize,
    pub nmax: usize,
    pub families: Vec<FamilySummary>,
    pub total: usize,
    pub passed: usize,
    pub pass: bool,
}

/// Draw `index` for `family`. Each draw has its own ChaCha stream, so the
/// result does not depend on which other draws are run.
pub fn draw_spec(family: Family, seed: u64, index: usize, nmax: usize) -> Result<FamilySpec, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((family as u64) << 32) | index as u64);
    let n = rng.random_range(1..=nmax);
    let (r, s) = match family {
        Family::GHyp => GHYP_ARITIES[rng.random_range(0..GHYP_ARITIES.len())],
        Family::GBasicHyp => GBASIC_ARITIES[rng.random_range(0..GBASIC_ARITIES.len())],
        _ => (family.alpha_arity().unwrap_or(0), 0),
    };
    let mut uniform = |(lo, hi): (f64, f64)| C64::new(rng.random_range(lo..hi), 0.0);
    let alphas = (0..r).map(|_| uniform(ALPHA_BOX)).collect();
    let betas = (0..s).map(|_| uniform(BETA_BOX)).collect();
    let q = family.is_q_type().then(|| uniform(Q_BOX));
    Ok(FamilySpec::new(family, n, alphas, betas, q)?)
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepSummary, CliError> {
    if cfg.nmax == 0 {
        return Err(CliError::Input("--nmax must be at least 1".into()));
    }
    let mut families = Vec::new();
    if cfg.draws > 0 {
        for &family in &cfg.families {
            families.push(sweep_family(cfg, family)?);
        }
    }
    let total = families.iter().map(|f| f.draws).sum();
    let passed = families.iter().map(|f| f.passed).sum();
    Ok(SweepSummary {
        seed: cfg.seed,
        draws: cfg.draws,
        nmax: cfg.nmax,
        families,
        total,
        passed,
        pass: passed == total,
    })
}

fn sweep_family(cfg: &SweepConfig, family: Family) -> Result<FamilySummary, CliError> {
    let mut out = FamilySummary {
        family: family.name().to_owned(),
        draws: cfg.draws,
        passed: 0,
        failed: 0,
        errored: 0,
        worst: Residuals::default(),
        failures: Vec::new(),
    };
    for draw in 0..cfg.draws {
        let spec = draw_spec(family, cfg.seed, draw, cfg.nmax)?;
        let reason = match run(&spec, Stage::Verify, &cfg.tol) {
            Ok(rep) => {
                out.worst = out.worst.worst(&rep.residuals);
                if rep.pass {
                    out.passed += 1;
                    continue;
                }
                out.failed += 1;
                format!("residuals out of tolerance: {:?}", rep.residuals)
            }
            Err(e) => {
                out.errored += 1;
                e.to_string()
            }
        };
        warn!("{family} draw {draw}: {reason}");
        out.failures.push(DrawFailure { draw, spec: SpecFile::echo(&spec), reason });
    }
    Ok(out)
}
