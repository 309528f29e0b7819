//! The isospectral matrices `L(ζ)` and their closed-form spectra.

use alloc::vec;
use alloc::vec::Vec;

use super::fg::{fg_jacobians, require_distinct};
use crate::dd::Cdd;
use crate::dual::{derivative, Dual};
use crate::dynamics::rhs::{aw_g, aw_k, basic_weights, f_basic, wilson_quartic};
use crate::error::{Error, Result};
use crate::families::{aw_lift, compute_zeros, qracah_parts, racah_d, Family, FamilySpec};
use crate::families::{extended_zeros, lift_zero_variables, qracah_root};
use crate::numeric::{elementary_coeffs_hyp, matrix_eigenvalues, multiset_match, EigenMultiset, Matrix, ZeroSet};
use crate::scalar::{Field, C64, I};
use crate::tol;

/// Optional variations of the matrix construction.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MatrixOptions {
    /// Values `γ_j` appended to both the α- and β-lists of a GHyp spec. The
    /// polynomial is unchanged; the matrix and its spectrum are not.
    pub pad: Vec<C64>,
}

/// `L(ζ)` with its reference and computed spectra and residuals.
#[derive(Clone, Debug, PartialEq)]
pub struct IsospectralMatrix {
    pub l: Matrix,
    pub reference_spectrum: EigenMultiset,
    pub computed_spectrum: EigenMultiset,
    /// `multiset_match(eig(L), reference)`.
    pub spectral_residual: f64,
    /// `|tr L − Σλ| / Σ|λ|`.
    pub trace_residual: f64,
    /// `|det L − Πλ| / Π|λ|`.
    pub det_residual: f64,
}

impl IsospectralMatrix {
    /// Assembles the report for an already built matrix.
    pub fn assess(l: Matrix, reference: EigenMultiset) -> Result<Self> {
        let mut computed = matrix_eigenvalues(&l, tol::ROOT_TOL)?;
        let spectral_residual = multiset_match(&computed.values, &reference.values)?;
        computed.match_distance = Some(spectral_residual);
        let sum_abs: f64 = reference.values.iter().map(|v| v.norm()).sum();
        let prod_abs: f64 = reference.values.iter().map(|v| v.norm()).product();
        let rel = |d: f64, s: f64| if s > 0.0 { d / s } else { d };
        let trace_residual = rel((l.trace() - reference.sum()).norm(), sum_abs);
        let det_residual = rel((l.det() - reference.product()).norm(), prod_abs);
        Ok(IsospectralMatrix {
            l,
            reference_spectrum: reference,
            computed_spectrum: computed,
            spectral_residual,
            trace_residual,
            det_residual,
        })
    }

    pub fn passes(&self) -> bool {
        self.spectral_residual <= tol::SPECTRAL
            && self.trace_residual <= tol::TRACE_DET
            && self.det_residual <= tol::TRACE_DET
    }
}

/// The N closed-form eigenvalues, `m = 1..=N`.
pub fn closed_form_spectrum(spec: &FamilySpec) -> EigenMultiset {
    let n = spec.n as i32;
    let q = spec.base();
    let a = &spec.alphas;
    let one = C64::new(1.0, 0.0);
    let values = (1..=n)
        .map(|m| {
            let mf = m as f64;
            match spec.family {
                Family::GHyp => spec.betas.iter().fold(C64::new(mf, 0.0), |acc, &b| acc * (b - 1.0 + mf)),
                Family::GBasicHyp => {
                    let e = spec.betas.len() as i32 - spec.alphas.len() as i32;
                    let qnm = Field::powi(q, n - m);
                    let head = -Field::powi(q, e * (n - m)) * (Field::powi(q, -m) - one);
                    a.iter().fold(head, |acc, &al| acc * (al * qnm - one))
                }
                Family::Jacobi => mf * (a[0] + mf),
                Family::Wilson => {
                    let s: C64 = a.iter().sum();
                    mf * (s + (2 * n - m - 1) as f64)
                }
                Family::Racah => mf * (mf - (2 * n) as f64 - a[0] - a[1] - 1.0),
                Family::AskeyWilson => {
                    let abcd: C64 = a.iter().product();
                    Field::powi(q, -n) * (one - Field::powi(q, m)) * (one - abcd * Field::powi(q, 2 * n - 1 - m))
                }
                Family::QRacah => {
                    Field::powi(q, -n) * (one - Field::powi(q, m)) * (one - a[0] * a[1] * Field::powi(q, 2 * n - m + 1))
                }
            }
        })
        .collect();
    EigenMultiset::new(values)
}

/// Closed-form spectrum including the factors `Π_j (γ_j − 1 + m)` of a padded
/// GHyp construction.
pub fn closed_form_spectrum_with(spec: &FamilySpec, opts: &MatrixOptions) -> Result<EigenMultiset> {
    if opts.pad.is_empty() {
        return Ok(closed_form_spectrum(spec));
    }
    Ok(closed_form_spectrum(&padded(spec, &opts.pad)?))
}

fn padded(spec: &FamilySpec, pad: &[C64]) -> Result<FamilySpec> {
    if spec.family != Family::GHyp {
        return Err(Error::Unsupported("padding applies to the generalized hypergeometric family"));
    }
    let mut s = spec.clone();
    s.alphas.extend_from_slice(pad);
    s.betas.extend_from_slice(pad);
    s.validate()?;
    Ok(s)
}

/// `L(ζ)` for the family, at zeros in the family's natural variable.
pub fn isospectral_matrix(spec: &FamilySpec, zs: &ZeroSet) -> Result<Matrix> {
    isospectral_matrix_with(spec, zs, &MatrixOptions::default())
}

pub fn isospectral_matrix_with(spec: &FamilySpec, zs: &ZeroSet, opts: &MatrixOptions) -> Result<Matrix> {
    if zs.len() != spec.n {
        return Err(Error::CardinalityMismatch { left: zs.len(), right: spec.n });
    }
    require_distinct(&zs.zeros)?;
    let z = &zs.zeros;
    let l = match spec.family {
        Family::GHyp if opts.pad.is_empty() && spec.alphas.len() == 1 && spec.betas.len() == 1 => {
            ghyp_one_one(spec.betas[0], z)?
        }
        Family::GHyp => {
            let s = if opts.pad.is_empty() { spec.clone() } else { padded(spec, &opts.pad)? };
            ghyp_general(&s, z)?
        }
        _ if !opts.pad.is_empty() => {
            return Err(Error::Unsupported("padding applies to the generalized hypergeometric family"))
        }
        Family::Jacobi => jacobi(spec.alphas[0], z)?,
        Family::GBasicHyp => gbasic(spec, z, &extended_zeros(spec, zs)?)?,
        Family::Wilson => wilson(spec, &lift_zero_variables(spec, zs)?.values)?,
        Family::Racah => racah(spec, &lift_zero_variables(spec, zs)?.values)?,
        Family::AskeyWilson => askey_wilson(spec, &z.iter().map(|&v| aw_lift(v)).collect::<Vec<_>>())?,
        Family::QRacah => q_racah(spec, zs)?,
    };
    if !l.is_finite() {
        return Err(Error::SingularDenominator);
    }
    Ok(l)
}

/// `L` evaluated directly at lifted variables: `x̄` (Wilson), `ȳ` (Racah) or
/// `z̄` (Askey–Wilson).
pub fn lifted_matrix(spec: &FamilySpec, lifted: &[C64]) -> Result<Matrix> {
    if lifted.len() != spec.n {
        return Err(Error::CardinalityMismatch { left: lifted.len(), right: spec.n });
    }
    let l = match spec.family {
        Family::Wilson => wilson(spec, lifted)?,
        Family::Racah => racah(spec, lifted)?,
        Family::AskeyWilson => askey_wilson(spec, lifted)?,
        _ => return Err(Error::Unsupported("only Wilson, Racah and Askey-Wilson have lifted variables")),
    };
    if !l.is_finite() {
        return Err(Error::SingularDenominator);
    }
    Ok(l)
}

/// Matrix plus reference spectrum and residual report.
pub fn build_matrix(spec: &FamilySpec, zs: &ZeroSet) -> Result<IsospectralMatrix> {
    build_matrix_with(spec, zs, &MatrixOptions::default())
}

pub fn build_matrix_with(spec: &FamilySpec, zs: &ZeroSet, opts: &MatrixOptions) -> Result<IsospectralMatrix> {
    let l = isospectral_matrix_with(spec, zs, opts)?;
    IsospectralMatrix::assess(l, closed_form_spectrum_with(spec, opts)?)
}

/// Zeros, matrix, eigenvalues and residuals in one call.
pub fn verify_matrix(spec: &FamilySpec) -> Result<IsospectralMatrix> {
    let zs = compute_zeros(spec)?;
    build_matrix(spec, &zs)
}

/// Rejects denominators that vanish relative to `scale`.
fn den(x: C64, scale: f64) -> Result<C64> {
    if !(x.norm() >= tol::SINGULAR_DENOMINATOR_REL * scale) {
        return Err(Error::SingularDenominator);
    }
    Ok(x)
}

fn zero_scale(z: &[C64]) -> f64 {
    z.iter().map(|v| v.norm()).fold(1.0, f64::max)
}

/// Pairwise `1/(ζ_n − ζ_m)²`, checked.
fn inverse_square_gaps(z: &[C64]) -> Result<Matrix> {
    let s = zero_scale(z);
    let n = z.len();
    let mut out = Matrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let d = den(z[a] - z[b], s)?;
                out[(a, b)] = (d * d).inv();
            }
        }
    }
    Ok(out)
}

// L_nn = β₁ + 2 Σ_{ℓ≠n} ζ_ℓ(ζ_ℓ−1)/(ζ_n−ζ_ℓ)², L_nm = −2 ζ_n(ζ_n−1)/(ζ_n−ζ_m)².
fn ghyp_one_one(beta: C64, z: &[C64]) -> Result<Matrix> {
    let w = inverse_square_gaps(z)?;
    let n = z.len();
    Ok(Matrix::from_fn(n, |a, b| {
        if a == b {
            beta + (0..n).filter(|&l| l != a).map(|l| 2.0 * z[l] * (z[l] - 1.0) * w[(a, l)]).sum::<C64>()
        } else {
            -2.0 * z[a] * (z[a] - 1.0) * w[(a, b)]
        }
    }))
}

// L_nm = Σ_{k=1}^{q+1} b_k ∂f_n^{(k)}/∂ζ_m − Σ_{j=1}^{p} a_j ∂g_n^{(j)}/∂ζ_m.
fn ghyp_general(spec: &FamilySpec, z: &[C64]) -> Result<Matrix> {
    inverse_square_gaps(z)?;
    let (a, b) = elementary_coeffs_hyp(&spec.alphas, &spec.betas);
    let depth = (a.len() - 1).max(b.len() - 1).max(1);
    let jac = fg_jacobians(z, depth)?;
    Ok(Matrix::from_fn(z.len(), |n, m| {
        let fsum: C64 = b.iter().enumerate().skip(1).map(|(k, &bk)| bk * jac.df(k, n, m)).sum();
        let gsum: C64 = a.iter().enumerate().skip(1).map(|(j, &aj)| aj * jac.dg(j, n, m)).sum();
        fsum - gsum
    }))
}

// L_nn = α+1 + Σ_{ℓ≠n} (1+x_ℓ)(1−x_n)²/(x_n−x_ℓ)², L_nm = −(1+x_n)(1−x_m)²/(x_n−x_m)².
fn jacobi(alpha: C64, x: &[C64]) -> Result<Matrix> {
    let w = inverse_square_gaps(x)?;
    let n = x.len();
    let sq = |v: C64| v * v;
    Ok(Matrix::from_fn(n, |a, b| {
        if a == b {
            alpha + 1.0 + (0..n).filter(|&l| l != a).map(|l| (1.0 + x[l]) * sq(1.0 - x[a]) * w[(a, l)]).sum::<C64>()
        } else {
            -(1.0 + x[a]) * sq(1.0 - x[b]) * w[(a, b)]
        }
    }))
}

/// Evaluated in double-double: the weighted sums over `(q^p − 1)²` cancel
/// by several digits.
fn gbasic(spec: &FamilySpec, z64: &[C64], z: &[Cdd]) -> Result<Matrix> {
    inverse_square_gaps(z64)?;
    let one = Cdd::one();
    let q = Cdd::from_c64(spec.base());
    let wt = basic_weights::<Cdd>(spec);
    let sgn = |k: usize| if k % 2 == 1 { -one } else { one };
    let qm1 = |p: i32| q.powi(p) - one;
    let n = z.len();
    let w = |a: usize, k: usize| {
        let d = z[a] - z[k];
        (d * d).recip()
    };
    // g_n(p) = Σ_{k≠n} f_n(p; without k) ζ_k / (ζ_n − ζ_k)².
    let g = |a: usize, p: i32| -> Cdd {
        (0..n).filter(|&k| k != a).fold(Cdd::zero(), |acc, k| acc + f_basic(z, q, a, p, Some(k)) * z[k] * w(a, k))
    };
    let combo = |ws: &[(i32, Cdd)], power: i32, f: &dyn Fn(i32) -> Cdd| -> Cdd {
        ws.iter().fold(Cdd::zero(), |acc, &(p, c)| acc + c * qm1(p).powi(power) * f(p))
    };
    let (r, s) = (wt.r, wt.s);
    Ok(Matrix::from_fn(n, |a, b| {
        let v = if a == b {
            let gg = |p| g(a, p);
            let ff = |p| f_basic(z, q, a, p, None);
            sgn(s) * combo(&wt.beta, 2, &gg) - sgn(r) * z[a] * combo(&wt.alpha, 2, &gg)
                + sgn(r) * combo(&wt.alpha, 1, &ff)
        } else {
            let fm = |p| f_basic(z, q, a, p, Some(b));
            -(sgn(s) * z[a] * w(a, b) * combo(&wt.beta, 2, &fm))
                + sgn(r) * z[a] * z[a] * w(a, b) * combo(&wt.alpha, 2, &fm)
        };
        v.value()
    }))
}

/// Checked `1/(u_n² − u_m²)` table for the squared-variable families.
fn inverse_square_differences(u: &[C64]) -> Result<Matrix> {
    let s = zero_scale(u);
    let n = u.len();
    let mut out = Matrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            if a != b {
                out[(a, b)] = den(u[a] * u[a] - u[b] * u[b], s * s)?.inv();
            }
        }
    }
    Ok(out)
}

/// Sum of `part(u)` and `part(−u)`, the `+[u_s → −u_s]` symmetrization.
fn symmetrized(u: &[C64], part: impl Fn(&[C64], usize, usize) -> C64) -> impl Fn(usize, usize) -> C64 {
    let neg: Vec<C64> = u.iter().map(|&v| -v).collect();
    let pos = u.to_vec();
    move |a, b| part(&pos, a, b) + part(&neg, a, b)
}

fn wilson(spec: &FamilySpec, x: &[C64]) -> Result<Matrix> {
    inverse_square_differences(x)?;
    let s = zero_scale(x);
    for &v in x {
        den(v, s)?;
    }
    let p = &spec.alphas;
    // D(x) = α₄ + iα₃x − α₂x² − iα₁x³ + x⁴ with α_k the elementary symmetric functions.
    let e1: C64 = p.iter().sum();
    let e2 = p[0] * (p[1] + p[2] + p[3]) + p[1] * (p[2] + p[3]) + p[2] * p[3];
    let e3 = p[0] * p[1] * (p[2] + p[3]) + p[2] * p[3] * (p[0] + p[1]);
    let d = |v: C64| wilson_quartic(p, v);
    let dp = |v: C64| I * e3 - 2.0 * e2 * v - 3.0 * I * e1 * v * v + 4.0 * v * v * v;
    let n = x.len();
    let part = |xs: &[C64], a: usize, b: usize| -> C64 {
        let xn = xs[a];
        let gap = |l: usize| xn * xn - xs[l] * xs[l];
        let prod = |skip: usize| -> C64 {
            (0..n).filter(|&l| l != a && l != skip).map(|l| 1.0 - (1.0 + 2.0 * I * xn) / gap(l)).product()
        };
        let dn = d(xn);
        if a == b {
            let mut t = (2.0 * dn / (I * xn) + I * dp(xn)) * prod(a);
            for m in (0..n).filter(|&m| m != a) {
                t += 2.0 * dn * (I * xn - (xn * xn + xs[m] * xs[m])) / (gap(m) * gap(m)) * prod(m);
            }
            t
        } else {
            2.0 * dn * I * xs[b] * (1.0 + 2.0 * I * xn) / (gap(b) * gap(b)) * prod(b)
        }
    };
    let sym = symmetrized(x, part);
    Ok(Matrix::from_fn(n, |a, b| {
        let v = sym(a, b) / (4.0 * x[a] * x[a]);
        if a == b {
            v
        } else {
            -v
        }
    }))
}

fn racah(spec: &FamilySpec, y: &[C64]) -> Result<Matrix> {
    let w = inverse_square_differences(y)?;
    let s = zero_scale(y);
    for &v in y {
        den(v, s)?;
        den(2.0 * v + 1.0, s)?;
    }
    let p = &spec.alphas;
    let pd: Vec<Dual> = p.iter().map(|&v| Dual::constant(v)).collect();
    let dt = |v: C64| racah_d(p, v);
    let dtp = |v: C64| derivative(|t| racah_d(&pd, t), v);
    let n = y.len();
    let part = |ys: &[C64], a: usize, b: usize| -> C64 {
        let yn = ys[a];
        let u = 1.0 + 2.0 * yn;
        let gap = |l: usize| yn * yn - ys[l] * ys[l];
        let prod = |skip: usize| -> C64 { (0..n).filter(|&l| l != a && l != skip).map(|l| 1.0 + u / gap(l)).product() };
        let dn = dt(yn);
        if a == b {
            let t = ((dn / (yn * yn) - dtp(yn) / yn) * u - 2.0 * dn / yn) * prod(a);
            let s: C64 =
                (0..n).filter(|&m| m != a).map(|m| (yn * yn + ys[m] * ys[m] + yn) / (gap(m) * gap(m)) * prod(m)).sum();
            t + 2.0 * dn / yn * u * s
        } else {
            ys[b] * dn / yn * u * u * prod(b)
        }
    };
    let sym = symmetrized(y, part);
    Ok(Matrix::from_fn(n, |a, b| if a == b { 0.5 * sym(a, a) } else { -sym(a, b) * w[(a, b)] * w[(a, b)] }))
}

fn askey_wilson(spec: &FamilySpec, z: &[C64]) -> Result<Matrix> {
    let q = spec.base();
    let n = z.len();
    require_distinct(z)?;
    let zi: Vec<C64> = z.iter().map(|v| v.inv()).collect();
    let sc = zero_scale(z).max(zero_scale(&zi));
    for zs in [z, &zi[..]] {
        for a in 0..n {
            den(zs[a] * zs[a] - 1.0, sc)?;
            for b in (0..n).filter(|&b| b != a) {
                den(zs[b] - zs[a], sc)?;
                den(zs[a] * zs[b] - 1.0, sc * sc)?;
            }
        }
    }
    let abcd = &spec.alphas;
    let abcd_d: Vec<Dual> = abcd.iter().map(|&v| Dual::constant(v)).collect();
    let g = |v: C64| aw_g(abcd, q, v);
    let gp = |v: C64| derivative(|t| aw_g(&abcd_d, Dual::constant(q), t), v);
    let part = |zs: &[C64], a: usize, b: usize| -> C64 {
        let zn = zs[a];
        let pk: C64 = (0..n).filter(|&l| l != a).map(|l| aw_k(q, zn, zs[l])).product();
        if a == b {
            let s: C64 = (0..n)
                .filter(|&m| m != a)
                .map(|m| {
                    let zm = zs[m];
                    -q / (zm - q * zn) + q * zm / (q * zn * zm - 1.0) + 1.0 / (zm - zn) - zm / (zn * zm - 1.0)
                })
                .sum();
            let w = 2.0 * zn * zn / (zn * zn - 1.0);
            (w * g(zn) * s + w * gp(zn)) * pk
        } else {
            let zm = zs[b];
            2.0 * zm * zm / (zm * zm - 1.0)
                * g(zn)
                * (1.0 / (zm - q * zn) + q * zn / (q * zn * zm - 1.0) - 1.0 / (zm - zn) - zn / (zn * zm - 1.0))
                * pk
        }
    };
    let pre = (q - 1.0) / (2.0 * Field::powi(q, spec.n as i32));
    Ok(Matrix::from_fn(n, |a, b| pre * (part(z, a, b) + part(&zi, a, b))))
}

fn q_racah(spec: &FamilySpec, zs: &ZeroSet) -> Result<Matrix> {
    let z = &zs.zeros;
    let n = z.len();
    let q = spec.base();
    let sc = zero_scale(z);
    let params = &spec.alphas;
    let pd: Vec<Dual> = params.iter().map(|&v| Dual::constant(v)).collect();
    let qd = Dual::constant(q);
    let four_gdq = 4.0 * params[2] * params[3] * q;
    let k = (1.0 - q * q) / (2.0 * q);
    let mut rows = Vec::with_capacity(n);
    for a in 0..n {
        let s = qracah_root(spec, z[a]).ok_or(Error::BranchPoint { index: a })?;
        let parts = qracah_parts(params, q, z[a], s);
        let (zp, zm) = (parts.plus, parts.minus);
        let b_of = |t: Dual| qracah_parts(&pd, qd, t, (t * t - Dual::constant(four_gdq)).sqrt()).b;
        let d_of = |t: Dual| qracah_parts(&pd, qd, t, (t * t - Dual::constant(four_gdq)).sqrt()).d;
        let (bp, dp) = (derivative(b_of, z[a]), derivative(d_of, z[a]));
        let cp = q + k * (1.0 - z[a] / s);
        let cm = q.inv() - k * (1.0 - z[a] / s);
        let mut gaps = vec![C64::new(0.0, 0.0); n];
        for m in (0..n).filter(|&m| m != a) {
            gaps[m] = den(z[a] - z[m], sc)?;
            den(zp - z[m], sc)?;
            den(zm - z[m], sc)?;
        }
        let ratio = |shift: C64, skip: usize| -> C64 {
            (0..n).filter(|&l| l != a && l != skip).map(|l| (shift - z[l]) / gaps[l]).product()
        };
        let wsum = |c: C64, shift: C64| -> C64 {
            (0..n).filter(|&m| m != a).map(|m| (c * gaps[m] - shift + z[m]) / (gaps[m] * (shift - z[m]))).sum()
        };
        let mut row = vec![C64::new(0.0, 0.0); n];
        row[a] = (bp * (zp - z[a]) + parts.b * (cp - 1.0 + (zp - z[a]) * wsum(cp, zp))) * ratio(zp, a)
            + (dp * (zm - z[a]) + parts.d * (cm - 1.0 + (zm - z[a]) * wsum(cm, zm))) * ratio(zm, a);
        for m in (0..n).filter(|&m| m != a) {
            let up = (zp - z[a]) / gaps[m];
            let dn = (zm - z[a]) / gaps[m];
            row[m] = parts.b * up * up * ratio(zp, m) + parts.d * dn * dn * ratio(zm, m);
        }
        rows.push(row);
    }
    Matrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    #[test]
    fn ghyp_degree_one() {
        let s = FamilySpec::ghyp(1, &[re(2.0)], &[re(3.0)]).unwrap();
        let r = verify_matrix(&s).unwrap();
        assert_eq!(r.l[(0, 0)], re(3.0));
        assert_eq!(r.spectral_residual, 0.0);
    }

    #[test]
    fn jacobi_legendre_two() {
        let s = FamilySpec::jacobi(2, re(0.0), re(0.0)).unwrap();
        let r = verify_matrix(&s).unwrap();
        let want = [[3.9434, -0.0566], [-2.9434, 1.0566]];
        for a in 0..2 {
            for b in 0..2 {
                assert!((r.l[(a, b)] - want[a][b]).norm() < 1e-4);
            }
        }
        assert!(r.spectral_residual < 1e-9);
        assert!((r.l.trace() - 5.0).norm() < 1e-12);
        assert!((r.l.det() - 4.0).norm() < 1e-12);
    }

    #[test]
    fn general_path_reproduces_one_one() {
        let z = [C64::new(0.3, 0.2), C64::new(-1.1, 0.4), C64::new(1.7, -0.6), C64::new(0.2, -1.3)];
        let s = FamilySpec::ghyp(4, &[re(1.4)], &[re(2.6)]).unwrap();
        let a = ghyp_one_one(s.betas[0], &z).unwrap();
        let b = ghyp_general(&s, &z).unwrap();
        for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
            assert!((x - y).norm() < 1e-12 * a.max_abs(), "{x} {y}");
        }
    }

    #[test]
    fn wilson_degree_one() {
        let s = FamilySpec::wilson(1, [re(0.5); 4]).unwrap();
        let r = verify_matrix(&s).unwrap();
        assert!((r.l[(0, 0)] - 2.0).norm() < 1e-14);
    }

    #[test]
    fn spectra_examples() {
        let s = FamilySpec::ghyp(2, &[re(1.0)], &[re(3.0)]).unwrap();
        assert_eq!(closed_form_spectrum(&s).values, [re(3.0), re(8.0)]);
        let s = FamilySpec::jacobi(2, re(0.0), re(0.5)).unwrap();
        assert_eq!(closed_form_spectrum(&s).values, [re(1.0), re(4.0)]);
        let s = FamilySpec::gbasic(1, &[re(3.0)], &[re(5.0)], re(2.0)).unwrap();
        assert_eq!(closed_form_spectrum(&s).values, [re(1.0)]);
        let s = FamilySpec::gbasic(1, &[re(3.0)], &[re(5.0)], re(2.0)).unwrap();
        assert!((verify_matrix(&s).unwrap().l[(0, 0)] - 1.0).norm() < 1e-13);
    }
}
