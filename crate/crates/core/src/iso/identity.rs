//! Algebraic identities satisfied by the zeros.

use alloc::vec::Vec;

use super::fg::require_distinct;
use crate::dd::Cdd;
use crate::dynamics::{extended_normalized_rhs, rhs};
use crate::error::{Error, Result};
use crate::families::{extended_zeros, Family, FamilySpec};
use crate::numeric::ZeroSet;
use crate::scalar::{Field, C64};

/// Per-zero residuals of the family's identity system, each divided by the
/// largest term entering it. Zeros and terms are carried in double-double.
///
/// GHyp: `Σ b_k f_n^{(k)} − Σ a_j g_n^{(j)} = 0`. GBasicHyp: the
/// basic-hypergeometric system of N equations. Jacobi: the GHyp (1,1)
/// identities in `w = 2/(1−x)` with `α₁ = N+α+β+1`, `β₁ = α+1`. The
/// Askey-scheme families: vanishing of the zero-system RHS.
pub fn identity_residual(spec: &FamilySpec, zs: &ZeroSet) -> Result<Vec<C64>> {
    if zs.len() != spec.n {
        return Err(Error::CardinalityMismatch { left: zs.len(), right: spec.n });
    }
    require_distinct(&zs.zeros)?;
    match spec.family {
        Family::Jacobi => {
            let (al, be) = (spec.alphas[0], spec.alphas[1]);
            let mut w = Vec::with_capacity(zs.len());
            for x in extended_zeros(spec, zs)? {
                let d = Cdd::one() - x;
                if d.value().norm() == 0.0 {
                    return Err(Error::SingularDenominator);
                }
                w.push(Cdd::from_f64(2.0) / d);
            }
            let a1 = al + be + (spec.n as f64 + 1.0);
            let e = rhs::ghyp(&[a1], &[al + 1.0], &w);
            Ok(e.value.iter().zip(&e.scale).map(|(&v, &s)| if s > 0.0 { v.value() / s } else { v.value() }).collect())
        }
        _ => extended_normalized_rhs(spec, zs),
    }
}
