//! Solvable dynamics: coefficient systems, nonlinear zero systems, their
//! integration and the algebraic solution.

mod csystem;
pub(crate) mod rhs;
mod trajectory;

use alloc::vec::Vec;

pub use csystem::{c_system, solve_c, CSystem};
pub use trajectory::{algebraic_solution, evolve, integrate, perturb, AlgebraicSolver, TrajectoryRecord};

use crate::dd::Cdd;
use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::families::{extended_zeros, lift_zero_variables, Family, FamilySpec};
use crate::iso::closed_form_spectrum;
use crate::numeric::{EigenMultiset, Matrix, ZeroSet};
use crate::scalar::{Field, C64, I};

/// `ż = F(z)` for the family's zero system.
///
/// Variables: z for GHyp, GBasicHyp and q-Racah; x for Wilson and
/// Askey–Wilson; y for Racah.
pub fn nonlinear_rhs(spec: &FamilySpec, z: &[C64]) -> Result<Vec<C64>> {
    Ok(rhs::evaluate::<C64>(spec, z)?.value)
}

/// The zero system evaluated at lifted variables: `x̄` (Wilson), `ȳ` (Racah)
/// or `z̄` (Askey–Wilson, where `ẋ` is returned).
pub fn lifted_rhs(spec: &FamilySpec, lifted: &[C64]) -> Result<Vec<C64>> {
    match spec.family {
        Family::Wilson | Family::Racah => nonlinear_rhs(spec, lifted),
        Family::AskeyWilson => {
            if lifted.len() != spec.n {
                return Err(Error::CardinalityMismatch { left: lifted.len(), right: spec.n });
            }
            Ok(rhs::askey_wilson_lifted::<C64>(spec, lifted).value)
        }
        _ => Err(Error::Unsupported("only Wilson, Racah and Askey-Wilson have lifted variables")),
    }
}

/// Per-component RHS divided by the largest term entering that component.
pub fn normalized_rhs(spec: &FamilySpec, z: &[C64]) -> Result<Vec<C64>> {
    let e = rhs::evaluate::<C64>(spec, z)?;
    Ok(e.value.iter().zip(&e.scale).map(|(&v, &s)| if s > 0.0 { v / s } else { v }).collect())
}

/// Natural-variable zeros mapped to the variables the zero system evolves.
pub fn dynamics_variables(spec: &FamilySpec, zs: &ZeroSet) -> Result<Vec<C64>> {
    match spec.family {
        Family::Wilson | Family::Racah => Ok(lift_zero_variables(spec, zs)?.values),
        Family::Jacobi => Err(Error::Unsupported("Jacobi has no zero dynamics")),
        _ => Ok(zs.zeros.clone()),
    }
}

/// `max_n |F_n(ζ)| / scale_n` at the family's zeros.
pub fn equilibrium_residual(spec: &FamilySpec, zs: &ZeroSet) -> Result<f64> {
    Ok(extended_normalized_rhs(spec, zs)?.iter().map(|r| r.norm()).fold(0.0, f64::max))
}

/// [`normalized_rhs`] at the zeros, with zeros, lifts and RHS carried in
/// double-double.
///
/// Some zeros sit close to a removable singularity of the RHS formulas,
/// where the terms of a component cancel to many digits. In double the
/// rounding of the zeros alone then sets the residual.
pub(crate) fn extended_normalized_rhs(spec: &FamilySpec, zs: &ZeroSet) -> Result<Vec<C64>> {
    dynamics_variables(spec, zs)?;
    let exact = extended_zeros(spec, zs)?;
    let v: Vec<Cdd> = match spec.family {
        Family::Wilson => exact.iter().map(|&z| z.sqrt()).collect(),
        Family::Racah => {
            let th = Cdd::from_c64(spec.theta());
            exact.iter().map(|&z| (z + th * th).sqrt()).collect()
        }
        _ => exact,
    };
    let e = rhs::evaluate::<Cdd>(spec, &v)?;
    Ok(e.value.iter().zip(&e.scale).map(|(&v, &s)| if s > 0.0 { v.value() / s } else { v.value() }).collect())
}

/// Exact Jacobian `∂F_n/∂z_m` by dual numbers.
pub fn rhs_jacobian(spec: &FamilySpec, z: &[C64]) -> Result<Matrix> {
    let n = z.len();
    let mut j = Matrix::zeros(n);
    for m in 0..n {
        let seeded: Vec<Dual> =
            z.iter().enumerate().map(|(k, &v)| if k == m { Dual::var(v) } else { Dual::constant(v) }).collect();
        let out = rhs::evaluate::<Dual>(spec, &seeded)?;
        for (a, d) in out.value.iter().enumerate() {
            j[(a, m)] = d.d;
        }
    }
    Ok(j)
}

/// Central-difference Jacobian with step `h·max(1, |z_m|)`.
pub fn fd_jacobian(spec: &FamilySpec, z: &[C64], h: f64) -> Result<Matrix> {
    let n = z.len();
    let mut j = Matrix::zeros(n);
    for m in 0..n {
        let step = h * z[m].norm().max(1.0);
        let mut zp = z.to_vec();
        let mut zm = z.to_vec();
        zp[m] += step;
        zm[m] -= step;
        let (fp, fm) = (nonlinear_rhs(spec, &zp)?, nonlinear_rhs(spec, &zm)?);
        for a in 0..n {
            j[(a, m)] = (fp[a] - fm[a]) / (2.0 * step);
        }
    }
    Ok(j)
}

/// Closed-form spectrum times the family's time factor: the eigenvalues the
/// linearization at the equilibrium must have.
pub fn linearization_spectrum(spec: &FamilySpec) -> EigenMultiset {
    let mut s = closed_form_spectrum(spec);
    if matches!(spec.family, Family::Wilson | Family::Racah) {
        for v in &mut s.values {
            *v *= I;
        }
    }
    s
}
