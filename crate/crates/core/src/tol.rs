//! Fixed numerical thresholds.

/// Scaled residual accepted by the root finder.
pub const ROOT_TOL: f64 = 1e-12;
pub const ROOT_MAX_ITER: usize = 200;
/// Coefficients below this fraction of the largest are dropped from the top.
pub const TRIM_REL: f64 = 1e-14;
/// Zeros closer than this fraction of the zero scale are treated as repeated.
pub const REPEATED_REL: f64 = 1e-8;
/// Root pairs closer than this fraction of the zero scale get cluster refinement.
pub const CLUSTER_REL: f64 = 1e-6;
/// Largest relative move when refining double zeros in double-double.
pub const REFINE_REACH: f64 = 1e-12;
pub const BRANCH_POINT: f64 = 1e-10;
pub const SINGULAR_SAMPLE_RADIUS: f64 = 1e-3;
pub const SINGULAR_DENOMINATOR_REL: f64 = 1e-12;
pub const PARAM_INTEGER: f64 = 1e-10;
pub const PARAM_Q_FACTOR: f64 = 1e-12;
pub const Q_NEAR_ONE: f64 = 1e-9;
pub const COLLISION: f64 = 1e-9;
pub const ZERO_VARIABLE: f64 = 1e-6;
pub const BASIS_PIVOT_REL: f64 = 1e-12;
/// Step of the RK4 fallback in the coefficient solver.
pub const C_SYSTEM_STEP: f64 = 1e-4;

pub const SPECTRAL: f64 = 1e-6;
pub const TRACE_DET: f64 = 1e-8;
pub const IDENTITY: f64 = 1e-8;
