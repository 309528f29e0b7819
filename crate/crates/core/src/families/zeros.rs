use alloc::vec::Vec;

use super::build::build_in;
use super::spec::{Family, FamilySpec};
use crate::dd::Cdd;
use crate::error::{Error, Result};
use crate::numeric::{aberth, finish, polish_roots, refine_close_pairs, Poly, ZeroSet};
use crate::scalar::{Field, C64};
use crate::tol;

/// Zeros of the family polynomial in its natural variable.
///
/// Coefficients are accumulated in double-double. The variable is rescaled
/// by the Cauchy radius so that the leading coefficient is the largest, roots
/// are located in double precision, and each root is Newton-polished against
/// the extended coefficients before the residual check.
pub fn compute_zeros(spec: &FamilySpec) -> Result<ZeroSet> {
    spec.validate()?;
    let exact = build_in::<Cdd>(spec)?;
    if exact.to_c64().coeff(spec.n).norm() == 0.0 {
        return Err(Error::InvalidParameters("leading coefficient vanishes"));
    }
    let zs = extended_roots(&exact).map_err(|e| match e {
        Error::DegenerateInput(_) => Error::InvalidParameters("leading coefficient vanishes"),
        other => other,
    })?;
    if zs.min_separation < tol::REPEATED_REL * zs.scale() {
        return Err(Error::RepeatedZeros { separation: zs.min_separation });
    }
    Ok(zs)
}

/// Roots of a polynomial held in double-double, without the distinctness check.
pub(crate) fn extended_roots(exact: &Poly<Cdd>) -> Result<ZeroSet> {
    let rounded = exact.to_c64();
    let n = exact.degree();
    let lead = rounded.coeff(n).norm();
    if lead == 0.0 || n == 0 {
        return Err(Error::DegenerateInput("leading coefficient vanishes"));
    }
    let rho = (0..n).map(|k| libm::pow(rounded.coeff(k).norm() / lead, 1.0 / (n - k) as f64)).fold(0.0, f64::max);
    let rho = if rho > 0.0 && rho.is_finite() { rho } else { 1.0 };
    let mut rk = Cdd::one();
    let scaled: Vec<Cdd> = exact
        .coeffs()
        .iter()
        .map(|&c| {
            let v = c * rk;
            rk = rk * Cdd::from_f64(rho);
            v
        })
        .collect();
    let scaled = Poly::new(scaled).to_c64();
    if scaled.trim().degree() < n {
        return Err(Error::DegenerateInput("leading coefficient vanishes"));
    }
    let mut zeros: Vec<C64> = aberth(&scaled, tol::ROOT_MAX_ITER).into_iter().map(|w| w * rho).collect();
    polish_roots(exact, &mut zeros);
    refine_close_pairs(exact, &mut zeros);
    finish(&rounded, zeros, tol::ROOT_TOL)
}

/// The zeros after Newton steps against the double-double polynomial, kept
/// in double-double. Only rounding-size corrections are made: a step longer
/// than `REFINE_REACH · max(1, |z|)`, or one that does not lower `|p|`, ends
/// the refinement of that zero.
pub(crate) fn extended_zeros(spec: &FamilySpec, zs: &ZeroSet) -> Result<Vec<Cdd>> {
    let p = build_in::<Cdd>(spec)?;
    let dp = p.derivative();
    Ok(zs
        .zeros
        .iter()
        .map(|&z| {
            let reach = tol::REFINE_REACH * z.norm().max(1.0);
            let mut x = Cdd::from_c64(z);
            let mut px = p.eval(x);
            for _ in 0..3 {
                let d = dp.eval(x);
                if d.value().norm() == 0.0 {
                    break;
                }
                let step = px / d;
                if !(step.value().norm() <= reach) {
                    break;
                }
                let cand = x - step;
                let pc = p.eval(cand);
                if !(pc.value().norm() < px.value().norm()) {
                    break;
                }
                (x, px) = (cand, pc);
            }
            x
        })
        .collect())
}

/// Zeros mapped to the variables the dynamics and matrices use.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedZeros {
    /// Wilson `x̄`, Racah `ȳ`, Askey–Wilson `z̄ = e^{iθ}`, q-Racah `z̄` unchanged.
    pub values: Vec<C64>,
    /// q-Racah shifted companions `(z⁺, z⁻)`.
    pub companions: Option<(Vec<C64>, Vec<C64>)>,
}

/// Principal-branch lifts of natural-variable zeros.
pub fn lift_zero_variables(spec: &FamilySpec, zs: &ZeroSet) -> Result<LiftedZeros> {
    let mut values = Vec::with_capacity(zs.len());
    let mut companions = None;
    match spec.family {
        Family::Wilson => {
            for (i, &z) in zs.zeros.iter().enumerate() {
                if z.norm() < tol::BRANCH_POINT {
                    return Err(Error::BranchPoint { index: i });
                }
                values.push(z.sqrt());
            }
        }
        Family::Racah => {
            let th2 = spec.theta() * spec.theta();
            for (i, &z) in zs.zeros.iter().enumerate() {
                if (z + th2).norm() < tol::BRANCH_POINT {
                    return Err(Error::BranchPoint { index: i });
                }
                values.push((z + th2).sqrt());
            }
        }
        Family::AskeyWilson => {
            values.extend(zs.zeros.iter().map(|&x| aw_lift(x)));
        }
        Family::QRacah => {
            let mut plus = Vec::with_capacity(zs.len());
            let mut minus = Vec::with_capacity(zs.len());
            for (i, &z) in zs.zeros.iter().enumerate() {
                let s = qracah_root(spec, z).ok_or(Error::BranchPoint { index: i })?;
                let (zp, zm) = qracah_shifts(spec.base(), z, s);
                plus.push(zp);
                minus.push(zm);
                values.push(z);
            }
            companions = Some((plus, minus));
        }
        _ => return Err(Error::Unsupported("variable lift is defined for Wilson, Racah, Askey-Wilson and q-Racah")),
    }
    Ok(LiftedZeros { values, companions })
}

/// `z = x + √(x²−1)`.
pub fn aw_lift<T: Field>(x: T) -> T {
    x + (x * x - T::one()).sqrt()
}

/// `√(z² − 4γδq)`, or `None` on the branch point.
pub(crate) fn qracah_root(spec: &FamilySpec, z: C64) -> Option<C64> {
    let arg = z * z - spec.alphas[2] * spec.alphas[3] * spec.base() * 4.0;
    (arg.norm() >= tol::BRANCH_POINT).then(|| arg.sqrt())
}

/// `z^{(±)} = q^{±1} z ± (1−q²)/(2q) (z − s)` with `s = √(z² − 4γδq)`.
pub(crate) fn qracah_shifts<T: Field>(q: T, z: T, s: T) -> (T, T) {
    let k = (T::one() - q * q) / (q + q);
    (q * z + k * (z - s), z / q - k * (z - s))
}
