//! Family polynomials from their explicit finite sums, their zeros, variable
//! lifts and defining-equation residuals.

mod build;
mod equations;
mod qlimit;
mod spec;
mod zeros;

pub use build::{build_in, build_polynomial};
pub(crate) use equations::{aw_d, qracah_parts, racah_d};
pub use equations::{defining_equation_residual, defining_equation_residual_of};
pub use qlimit::q_to_one_limit_check;
pub use spec::{Family, FamilySpec};
pub use zeros::{aw_lift, compute_zeros, lift_zero_variables, LiftedZeros};
pub(crate) use zeros::{extended_roots, extended_zeros, qracah_root};
