//! Verification runs and their JSON reports.

use isospectra_core::dynamics::{dynamics_variables, equilibrium_residual, evolve, perturb};
use isospectra_core::families::{build_polynomial, compute_zeros, defining_equation_residual_of};
use isospectra_core::iso::{build_matrix, identity_residual};
use isospectra_core::{tol, Error, Family, FamilySpec, C64};
use log::{debug, info};
use serde::Serialize;

use crate::spec_io::{pairs, SpecFile};

/// Number of sample points for the defining-equation residual.
pub const DEFINING_SAMPLES: usize = 10;
/// Largest ODE-vs-oracle deviation an `evolve` run may show.
pub const DEVIATION_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub spectral: f64,
    pub trace_det: f64,
    /// Identity, equilibrium and defining-equation residuals.
    pub identity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { spectral: tol::SPECTRAL, trace_det: tol::TRACE_DET, identity: tol::IDENTITY }
    }
}

/// Residuals of one run; `null` where the stage did not compute them.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Residuals {
    pub spectral: Option<f64>,
    pub trace: Option<f64>,
    pub det: Option<f64>,
    pub identity: Option<f64>,
    pub equilibrium: Option<f64>,
    pub defining_eq: Option<f64>,
}

impl Residuals {
    pub fn within(&self, tol: &Tolerances) -> bool {
        let ok = |r: Option<f64>, t: f64| r.is_none_or(|v| v <= t);
        ok(self.spectral, tol.spectral)
            && ok(self.trace, tol.trace_det)
            && ok(self.det, tol.trace_det)
            && ok(self.identity, tol.identity)
            && ok(self.equilibrium, tol.identity)
            && ok(self.defining_eq, tol.identity)
    }

    /// Fieldwise maximum; NaN wins so that it stays visible.
    pub fn worst(&self, other: &Residuals) -> Residuals {
        let m = |a: Option<f64>, b: Option<f64>| match (a, b) {
            (Some(x), Some(y)) => Some(if x.is_nan() || y.is_nan() { f64::NAN } else { x.max(y) }),
            (x, None) => x,
            (None, y) => y,
        };
        Residuals {
            spectral: m(self.spectral, other.spectral),
            trace: m(self.trace, other.trace),
            det: m(self.det, other.det),
            identity: m(self.identity, other.identity),
            equilibrium: m(self.equilibrium, other.equilibrium),
            defining_eq: m(self.defining_eq, other.defining_eq),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Zeros,
    Matrix,
    Verify,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub spec: SpecFile,
    pub zeros: Vec<[f64; 2]>,
    /// Rows of `L`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed_spectrum: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_spectrum: Option<Vec<[f64; 2]>>,
    pub residuals: Residuals,
    pub pass: bool,
}

pub fn run(spec: &FamilySpec, stage: Stage, tol: &Tolerances) -> Result<RunReport, Error> {
    let zs = compute_zeros(spec)?;
    debug!("{} N={}: {} zeros, min separation {:e}", spec.family, spec.n, zs.len(), zs.min_separation);
    let mut report = RunReport {
        spec: SpecFile::echo(spec),
        zeros: pairs(&zs.zeros),
        matrix: None,
        computed_spectrum: None,
        reference_spectrum: None,
        residuals: Residuals::default(),
        pass: true,
    };
    if stage >= Stage::Matrix {
        let m = build_matrix(spec, &zs)?;
        report.matrix = Some(m.l.rows().iter().map(|r| pairs(r)).collect());
        report.computed_spectrum = Some(pairs(&m.computed_spectrum.values));
        report.reference_spectrum = Some(pairs(&m.reference_spectrum.values));
        report.residuals.spectral = Some(m.spectral_residual);
        report.residuals.trace = Some(m.trace_residual);
        report.residuals.det = Some(m.det_residual);
    }
    if stage >= Stage::Verify {
        let identity = identity_residual(spec, &zs)?.iter().map(|r| r.norm()).fold(0.0, f64::max);
        report.residuals.identity = Some(identity);
        // Jacobi has no zero system; its equilibrium is the mapped GHyp identity.
        report.residuals.equilibrium =
            Some(if spec.family == Family::Jacobi { identity } else { equilibrium_residual(spec, &zs)? });
        report.residuals.defining_eq = Some(defining_residual(spec)?);
    }
    report.pass = report.residuals.within(tol);
    info!("{} N={}: pass={}", spec.family, spec.n, report.pass);
    Ok(report)
}

/// Fixed sample points on `0.3 ≤ |z| < 2` along a golden-angle spiral.
pub fn sample_point(k: usize) -> C64 {
    const GOLDEN: f64 = 0.618_033_988_749_895;
    let u = (k as f64 * GOLDEN).fract();
    C64::from_polar(0.3 + 1.7 * u, 2.399_963_229_728_653 * k as f64 + 0.5)
}

/// Largest defining-equation residual over [`DEFINING_SAMPLES`] points,
/// skipping points next to a singularity of the equation.
pub fn defining_residual(spec: &FamilySpec) -> Result<f64, Error> {
    let p = build_polynomial(spec)?;
    let mut worst = 0.0f64;
    let mut taken = 0;
    for k in 0.. {
        if taken == DEFINING_SAMPLES {
            break;
        }
        if k == 50 * DEFINING_SAMPLES {
            return Err(Error::SingularSample);
        }
        match defining_equation_residual_of(spec, &p, sample_point(k)) {
            Ok(r) => {
                worst = worst.max(r.norm());
                taken += 1;
            }
            Err(Error::SingularSample) => debug!("sample {k} skipped"),
            Err(e) => return Err(e),
        }
    }
    Ok(worst)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvolveReport {
    pub spec: SpecFile,
    pub t1: f64,
    pub steps: usize,
    pub perturb: f64,
    pub times: Vec<f64>,
    pub ode_zeros: Vec<Vec<[f64; 2]>>,
    pub oracle_zeros: Vec<Vec<[f64; 2]>>,
    pub max_deviation: f64,
    pub pass: bool,
}

/// Integrates the zero system from the perturbed equilibrium and compares
/// with the algebraic solution.
pub fn run_evolve(spec: &FamilySpec, t1: f64, steps: usize, eps: f64) -> Result<EvolveReport, Error> {
    if !eps.is_finite() {
        return Err(Error::InvalidParameters("perturbation must be finite"));
    }
    let zs = compute_zeros(spec)?;
    let z0 = perturb(&dynamics_variables(spec, &zs)?, eps);
    let rec = evolve(spec, &z0, t1, steps)?;
    info!("{} N={}: max deviation {:e}", spec.family, spec.n, rec.max_deviation);
    Ok(EvolveReport {
        spec: SpecFile::echo(spec),
        t1,
        steps,
        perturb: eps,
        times: rec.times,
        ode_zeros: rec.ode_zeros.iter().map(|z| pairs(&z.zeros)).collect(),
        oracle_zeros: rec.oracle_zeros.iter().map(|z| pairs(&z.zeros)).collect(),
        max_deviation: rec.max_deviation,
        pass: rec.max_deviation <= DEVIATION_TOL,
    })
}
