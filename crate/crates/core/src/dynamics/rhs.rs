//! Right-hand sides of the nonlinear zero systems, generic over the scalar
//! so that the same code yields values and dual-number derivatives.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{aw_d, aw_lift, qracah_parts, racah_d, Family, FamilySpec};
use crate::iso::FgTable;
use crate::numeric::{elementary_coeffs_basic, elementary_coeffs_hyp};
use crate::scalar::{Field, C64, I};
use crate::tol;

/// RHS components with the magnitude of the largest term entering each.
pub(crate) struct Evaluated<T> {
    pub value: Vec<T>,
    pub scale: Vec<f64>,
}

fn lift<T: Field>(xs: &[C64]) -> Vec<T> {
    xs.iter().map(|&x| T::from_c64(x)).collect()
}

fn guard<T: Field>(spec: &FamilySpec, z: &[T]) -> Result<()> {
    let vals: Vec<C64> = z.iter().map(|v| v.value()).collect();
    for (i, a) in vals.iter().enumerate() {
        for b in &vals[i + 1..] {
            let sep = (a - b).norm();
            if !(sep >= tol::COLLISION * a.norm().max(b.norm()).max(1.0)) {
                return Err(Error::Collision { separation: sep });
            }
        }
    }
    if matches!(spec.family, Family::Wilson | Family::Racah) {
        if let Some(i) = vals.iter().position(|v| !(v.norm() >= tol::ZERO_VARIABLE)) {
            return Err(Error::DivideByZeroVariable { index: i });
        }
    }
    Ok(())
}

pub(crate) fn evaluate<T: Field>(spec: &FamilySpec, z: &[T]) -> Result<Evaluated<T>> {
    if z.len() != spec.n {
        return Err(Error::CardinalityMismatch { left: z.len(), right: spec.n });
    }
    guard(spec, z)?;
    let out = match spec.family {
        Family::GHyp => ghyp(&spec.alphas, &spec.betas, z),
        Family::GBasicHyp => gbasic(spec, z),
        Family::Wilson => wilson(spec, z),
        Family::Racah => racah(spec, z),
        Family::AskeyWilson => askey_wilson(spec, z),
        Family::QRacah => q_racah(spec, z),
        Family::Jacobi => return Err(Error::Unsupported("Jacobi has no zero dynamics")),
    };
    if out.value.iter().any(|v| !crate::scalar::is_finite(v.value())) {
        return Err(Error::SingularDenominator);
    }
    Ok(out)
}

/// `Σ_{k=1}^{q+1} b_k f_n^{(k)} − Σ_{j=0}^{p} a_j g_n^{(j)}`.
pub(crate) fn ghyp<T: Field>(alphas: &[C64], betas: &[C64], z: &[T]) -> Evaluated<T> {
    let (a, b) = elementary_coeffs_hyp(&lift::<T>(alphas), &lift::<T>(betas));
    let depth = (a.len() - 1).max(b.len() - 1).max(1);
    let t = FgTable::compute(z, depth);
    let n = z.len();
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    for i in 0..n {
        for (k, &bk) in b.iter().enumerate().skip(1) {
            let term = bk * t.f(k, i);
            scale[i] = scale[i].max(term.norm());
            value[i] = value[i] + term;
        }
        for (j, &aj) in a.iter().enumerate() {
            let term = aj * t.g(j, i);
            scale[i] = scale[i].max(term.norm());
            value[i] = value[i] - term;
        }
    }
    Evaluated { value, scale }
}

/// `f_n(p) = Π_{ℓ≠n, ℓ∉skip} (q^p z_n − z_ℓ) / (z_n − z_ℓ)`.
pub(crate) fn f_basic<T: Field>(z: &[T], q: T, n: usize, p: i32, skip: Option<usize>) -> T {
    let qp = q.powi(p);
    let mut r = T::one();
    for (l, &zl) in z.iter().enumerate() {
        if l != n && Some(l) != skip {
            r = r * (qp * z[n] - zl) / (z[n] - zl);
        }
    }
    r
}

/// Weights of the basic-hypergeometric zero system as `(p, w)` pairs. The
/// RHS sums `w (q^p − 1) f(p)`; the matrix sums `w (q^p − 1)² g(p)`.
pub(crate) struct BasicWeights<T> {
    /// `(p, w)` for `(q−1)f(1) + Σ_k b_k (−1)^k q^{−k} [(q^{k+1}−1) f(k+1) − (q^k−1) f(k)]`.
    pub beta: Vec<(i32, T)>,
    /// `(p, w)` for `q^{−N}(q^{e+1}−1) f(e+1) − (q^e−1) f(e) + Σ_j a_j (−1)^j [...]`.
    pub alpha: Vec<(i32, T)>,
    pub r: usize,
    pub s: usize,
}

pub(crate) fn basic_weights<T: Field>(spec: &FamilySpec) -> BasicWeights<T> {
    let q = T::from_c64(spec.base());
    let (a, b) = elementary_coeffs_basic(&lift::<T>(&spec.alphas), &lift::<T>(&spec.betas));
    let (r, s) = (spec.alphas.len(), spec.betas.len());
    let e = s as i32 - r as i32;
    let q_neg_n = q.powi(-(spec.n as i32));
    let mut beta = vec![(1, T::one())];
    for (k, &bk) in b.iter().enumerate().skip(1) {
        let k = k as i32;
        let w = bk * q.powi(-k) * if k % 2 == 1 { -T::one() } else { T::one() };
        beta.push((k + 1, w));
        beta.push((k, -w));
    }
    let mut alpha = vec![(e + 1, q_neg_n), (e, -T::one())];
    for (j, &aj) in a.iter().enumerate().skip(1) {
        let j = j as i32;
        let w = if j % 2 == 1 { -aj } else { aj };
        alpha.push((j + e + 1, w * q_neg_n));
        alpha.push((j + e, -w));
    }
    BasicWeights { beta, alpha, r, s }
}

fn sign<T: Field>(k: usize) -> T {
    if k % 2 == 1 {
        -T::one()
    } else {
        T::one()
    }
}

/// `(−1)^{s+1} t_β + (−1)^r z_n t_α`.
fn gbasic<T: Field>(spec: &FamilySpec, z: &[T]) -> Evaluated<T> {
    let q = T::from_c64(spec.base());
    let w = basic_weights::<T>(spec);
    let n = z.len();
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    let (sb, sa) = (sign::<T>(w.s + 1), sign::<T>(w.r));
    for i in 0..n {
        for &(p, c) in &w.beta {
            let term = sb * c * (q.powi(p) - T::one()) * f_basic(z, q, i, p, None);
            scale[i] = scale[i].max(term.norm());
            value[i] = value[i] + term;
        }
        for &(p, c) in &w.alpha {
            let term = sa * z[i] * c * (q.powi(p) - T::one()) * f_basic(z, q, i, p, None);
            scale[i] = scale[i].max(term.norm());
            value[i] = value[i] + term;
        }
    }
    Evaluated { value, scale }
}

/// Wilson `D(x) = Π(a_k + ix)`.
pub(crate) fn wilson_quartic<T: Field>(abcd: &[T], x: T) -> T {
    let ix = T::from_c64(I) * x;
    abcd.iter().fold(T::one(), |acc, &a| acc * (a + ix))
}

/// `ẋ_n = −i [τ(x) + τ(−x)] / (2x_n)` with
/// `τ = D(x_n)/(2ix_n) Π_{m≠n} (x_n² − x_m² − 1 − 2ix_n)/(x_n² − x_m²)`.
fn wilson<T: Field>(spec: &FamilySpec, x: &[T]) -> Evaluated<T> {
    let abcd = lift::<T>(&spec.alphas);
    let i = T::from_c64(I);
    let n = x.len();
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    for k in 0..n {
        let tau = |xk: T| {
            let mut pr = wilson_quartic(&abcd, xk) / (T::from_f64(2.0) * i * xk);
            for (m, &xm) in x.iter().enumerate() {
                if m != k {
                    let d = xk * xk - xm * xm;
                    pr = pr * (d - T::one() - T::from_f64(2.0) * i * xk) / d;
                }
            }
            pr
        };
        let (tp, tm) = (tau(x[k]), tau(-x[k]));
        let den = T::from_f64(2.0) * x[k];
        value[k] = -i * (tp + tm) / den;
        scale[k] = tp.norm().max(tm.norm()) / den.norm();
    }
    Evaluated { value, scale }
}

/// `ẏ_n = −i [τ(y) + τ(−y)] / (2y_n)` with
/// `τ = D̃(y_n)(2y_n+1) Π_{ℓ≠n} (1 + (1+2y_n)/(y_n² − y_ℓ²))`.
fn racah<T: Field>(spec: &FamilySpec, y: &[T]) -> Evaluated<T> {
    let params = lift::<T>(&spec.alphas);
    let i = T::from_c64(I);
    let n = y.len();
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    for k in 0..n {
        let tau = |yk: T| {
            let u = T::one() + yk + yk;
            let mut pr = racah_d(&params, yk) * u;
            for (l, &yl) in y.iter().enumerate() {
                if l != k {
                    pr = pr * (T::one() + u / (yk * yk - yl * yl));
                }
            }
            pr
        };
        let (tp, tm) = (tau(y[k]), tau(-y[k]));
        let den = T::from_f64(2.0) * y[k];
        value[k] = -i * (tp + tm) / den;
        scale[k] = tp.norm().max(tm.norm()) / den.norm();
    }
    Evaluated { value, scale }
}

/// Askey–Wilson `G(z) = D(z)(qz − 1/z)`.
pub(crate) fn aw_g<T: Field>(abcd: &[T], q: T, z: T) -> T {
    aw_d(abcd, q, z) * (q * z - z.recip())
}

/// Askey–Wilson `K(z_n, z_m) = (z_m − q z_n)(q z_n z_m − 1) / ((z_m − z_n)(z_n z_m − 1))`.
pub(crate) fn aw_k<T: Field>(q: T, zn: T, zm: T) -> T {
    (zm - q * zn) * (q * zn * zm - T::one()) / ((zm - zn) * (zn * zm - T::one()))
}

/// `ẋ_n = (q−1)/(2q^N) [τ(z) + τ(1/z)]`, `τ = G(z_n) Π_{ℓ≠n} K(z_n, z_ℓ)`,
/// with `z = x + √(x²−1)`.
fn askey_wilson<T: Field>(spec: &FamilySpec, x: &[T]) -> Evaluated<T> {
    askey_wilson_lifted(spec, &x.iter().map(|&v| aw_lift(v)).collect::<Vec<_>>())
}

pub(crate) fn askey_wilson_lifted<T: Field>(spec: &FamilySpec, z: &[T]) -> Evaluated<T> {
    let abcd = lift::<T>(&spec.alphas);
    let q = T::from_c64(spec.base());
    let pre = (q - T::one()) / (T::from_f64(2.0) * q.powi(spec.n as i32));
    let zi: Vec<T> = z.iter().map(|v| v.recip()).collect();
    let n = z.len();
    let tau = |zs: &[T], k: usize| {
        let mut r = aw_g(&abcd, q, zs[k]);
        for (l, &zl) in zs.iter().enumerate() {
            if l != k {
                r = r * aw_k(q, zs[k], zl);
            }
        }
        r
    };
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    for k in 0..n {
        let (a, b) = (pre * tau(z, k), pre * tau(&zi, k));
        value[k] = a + b;
        scale[k] = a.norm().max(b.norm());
    }
    Evaluated { value, scale }
}

/// `ż_n = B (z⁺ − z_n) Π (z⁺ − z_ℓ)/(z_n − z_ℓ) + D (z⁻ − z_n) Π (z⁻ − z_ℓ)/(z_n − z_ℓ)`.
fn q_racah<T: Field>(spec: &FamilySpec, z: &[T]) -> Evaluated<T> {
    let params = lift::<T>(&spec.alphas);
    let q = T::from_c64(spec.base());
    let four_gdq = T::from_f64(4.0) * params[2] * params[3] * q;
    let n = z.len();
    let mut value = vec![T::zero(); n];
    let mut scale = vec![0.0f64; n];
    for k in 0..n {
        let s = (z[k] * z[k] - four_gdq).sqrt();
        let parts = qracah_parts(&params, q, z[k], s);
        let mut tp = parts.b * (parts.plus - z[k]);
        let mut tm = parts.d * (parts.minus - z[k]);
        for (l, &zl) in z.iter().enumerate() {
            if l != k {
                tp = tp * (parts.plus - zl) / (z[k] - zl);
                tm = tm * (parts.minus - zl) / (z[k] - zl);
            }
        }
        value[k] = tp + tm;
        scale[k] = tp.norm().max(tm.norm());
    }
    Evaluated { value, scale }
}
