use super::build::build_polynomial;
use super::spec::{Family, FamilySpec};
use super::zeros::qracah_shifts;
use crate::error::{Error, Result};
use crate::numeric::{elementary_coeffs_hyp, ComplexPolynomial, Poly};
use crate::scalar::{Field, C64, I};
use crate::tol;

/// Left-hand side of the family's defining equation at `sample`, divided by
/// the largest operand magnitude.
///
/// The sample variable is z for GHyp, GBasicHyp, Askey–Wilson (`z = e^{iθ}`)
/// and q-Racah; x for Jacobi and Wilson; y for Racah.
pub fn defining_equation_residual(spec: &FamilySpec, sample: C64) -> Result<C64> {
    let p = build_polynomial(spec)?;
    defining_equation_residual_of(spec, &p, sample)
}

/// As [`defining_equation_residual`], for an explicitly supplied polynomial.
pub fn defining_equation_residual_of(spec: &FamilySpec, p: &ComplexPolynomial, sample: C64) -> Result<C64> {
    let (value, scale) = match spec.family {
        Family::GHyp => ghyp(spec, p, sample),
        Family::GBasicHyp => gbasic(spec, p, sample),
        Family::Jacobi => jacobi(spec, p, sample),
        Family::Wilson => wilson(spec, p, sample)?,
        Family::Racah => racah(spec, p, sample)?,
        Family::AskeyWilson => askey_wilson(spec, p, sample)?,
        Family::QRacah => q_racah(spec, p, sample)?,
    };
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::SingularSample);
    }
    Ok(value / scale)
}

fn near(x: C64, point: C64) -> bool {
    (x - point).norm() < tol::SINGULAR_SAMPLE_RADIUS
}

/// Sum of two polynomial pieces and the larger of their natural scales.
fn pieces(a: &ComplexPolynomial, b: &ComplexPolynomial, x: C64) -> (C64, f64) {
    (a.eval(x) - b.eval(x), a.abs_eval(x).max(b.abs_eval(x)))
}

// [D_N Π(β_k−1−D_N) − d/dz Π(α_j−D_N)] u, D_N z^k = (k−N) z^k.
fn ghyp(spec: &FamilySpec, p: &ComplexPolynomial, z: C64) -> (C64, f64) {
    let n = spec.n as f64;
    let (a, b) = elementary_coeffs_hyp(&spec.alphas, &spec.betas);
    let lhs = Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &c)| Poly::new(b.clone()).eval(C64::new(k as f64 - n, 0.0)) * c)
            .collect(),
    );
    let inner = Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &c)| Poly::new(a.clone()).eval(C64::new(k as f64 - n, 0.0)) * c)
            .collect(),
    );
    pieces(&lhs, &inner.derivative(), z)
}

// [Δ_1 Π Δ_{β_k/q} − z Δ_{q^{-N}} Π Δ_{α_j} (δ_q)^{s−r}] u on monomials:
// Δ_γ z^m = (γ q^m − 1) z^m, δ_q z^m = q^m z^m.
fn gbasic(spec: &FamilySpec, p: &ComplexPolynomial, z: C64) -> (C64, f64) {
    let q = spec.base();
    let n = spec.n as i32;
    let e = spec.betas.len() as i32 - spec.alphas.len() as i32;
    let one = C64::new(1.0, 0.0);
    let mut left = alloc::vec::Vec::new();
    let mut right = alloc::vec![C64::new(0.0, 0.0)];
    for (m, &c) in p.coeffs().iter().enumerate() {
        let qm = Field::powi(q, m as i32);
        let mut l = (qm - one) * c;
        for &b in &spec.betas {
            l *= b / q * qm - one;
        }
        left.push(l);
        let mut r = Field::powi(q, m as i32 * e) * (Field::powi(q, -n) * qm - one) * c;
        for &a in &spec.alphas {
            r *= a * qm - one;
        }
        right.push(r);
    }
    pieces(&Poly::new(left), &Poly::new(right), z)
}

// (1−x²) y'' + (β−α−(α+β+2)x) y' + N(N+α+β+1) y.
fn jacobi(spec: &FamilySpec, p: &ComplexPolynomial, x: C64) -> (C64, f64) {
    let (al, be) = (spec.alphas[0], spec.alphas[1]);
    let n = spec.n as f64;
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let t = [
        (1.0 - x * x) * d2.eval(x),
        (be - al - (al + be + 2.0) * x) * d1.eval(x),
        (n * (n + al + be + 1.0)) * p.eval(x),
    ];
    let s = [
        (1.0 - x * x).norm() * d2.abs_eval(x),
        (be - al - (al + be + 2.0) * x).norm() * d1.abs_eval(x),
        (n * (n + al + be + 1.0)).norm() * p.abs_eval(x),
    ];
    (t[0] + t[1] + t[2], s.iter().copied().fold(0.0, f64::max))
}

/// Wilson `B(x) = (a+ix)(b+ix)(c+ix)(d+ix) / (2ix(2ix+1))`.
pub(crate) fn wilson_b<T: Field>(abcd: &[T], x: T) -> T {
    let ix = T::from_c64(I) * x;
    let mut num = T::one();
    for &a in abcd {
        num = num * (a + ix);
    }
    num / ((ix + ix) * (ix + ix + T::one()))
}

// [B(−x)(1−δ⁺) + B(x)(1−δ⁻) + N(N+a+b+c+d−1)] W_N(x²), δ^± f(x) = f(x ± i).
fn wilson(spec: &FamilySpec, p: &ComplexPolynomial, x: C64) -> Result<(C64, f64)> {
    let half_i = I * 0.5;
    if near(x, C64::new(0.0, 0.0)) || near(x, half_i) || near(x, -half_i) {
        return Err(Error::SingularSample);
    }
    let a1: C64 = spec.alphas.iter().sum();
    let n = spec.n as f64;
    let w = |v: C64| p.eval(v * v);
    let wa = |v: C64| p.abs_eval(v * v);
    let (bm, bp) = (wilson_b(&spec.alphas, -x), wilson_b(&spec.alphas, x));
    let lam = n * (n + a1 - 1.0);
    let value = bm * (w(x) - w(x + I)) + bp * (w(x) - w(x - I)) + lam * w(x);
    let scale = (bm.norm() * wa(x).max(wa(x + I))).max(bp.norm() * wa(x).max(wa(x - I))).max(lam.norm() * wa(x));
    Ok((value, scale))
}

/// Racah `D̃(y)`.
pub(crate) fn racah_d<T: Field>(params: &[T], y: T) -> T {
    let (al, be, ga, de) = (params[0], params[1], params[2], params[3]);
    let one = T::one();
    let y2 = y + y;
    (y2 + ga + de + one) * (y2 + ga - de + one) * (y2 + al + al - ga - de + one) * (y2 + be + be - ga + de + one)
        / (T::from_f64(32.0) * y * (y2 + one))
}

// [D̃(y)(δ⁺−1) + D̃(−y)(δ⁻−1) − N(N+α+β+1)] q̃(y), q̃(y) ∝ R_N(y²−θ²), δ^± f(y) = f(y ± 1).
fn racah(spec: &FamilySpec, p: &ComplexPolynomial, y: C64) -> Result<(C64, f64)> {
    let one = C64::new(1.0, 0.0);
    if near(y, C64::new(0.0, 0.0)) || near(y, one * 0.5) || near(y, -one * 0.5) {
        return Err(Error::SingularSample);
    }
    let th2 = spec.theta() * spec.theta();
    let n = spec.n as f64;
    let lam = n * (n + spec.alphas[0] + spec.alphas[1] + 1.0);
    let r = |v: C64| p.eval(v * v - th2);
    let ra = |v: C64| p.abs_eval(v * v - th2);
    let (dp, dm) = (racah_d(&spec.alphas, y), racah_d(&spec.alphas, -y));
    let value = dp * (r(y + one) - r(y)) + dm * (r(y - one) - r(y)) - lam * r(y);
    let scale = (dp.norm() * ra(y).max(ra(y + one))).max(dm.norm() * ra(y).max(ra(y - one))).max(lam.norm() * ra(y));
    Ok((value, scale))
}

/// Askey–Wilson `D(z) = Π(1 − a_k z) / ((1−z²)(1−qz²))`.
pub(crate) fn aw_d<T: Field>(abcd: &[T], q: T, z: T) -> T {
    let one = T::one();
    let mut num = one;
    for &a in abcd {
        num = num * (one - a * z);
    }
    num / ((one - z * z) * (one - q * z * z))
}

// [(q^{−N}−1)(1−abcd q^{N−1}) + D(z)(1−δ_q) + D(1/z)(1−δ_{1/q})] Q_N(z), Q_N(z) = p_N((z²+1)/(2z)).
fn askey_wilson(spec: &FamilySpec, p: &ComplexPolynomial, z: C64) -> Result<(C64, f64)> {
    let q = spec.base();
    let one = C64::new(1.0, 0.0);
    let z2 = z * z;
    if z.norm() < tol::SINGULAR_SAMPLE_RADIUS || near(z2, one) || near(q * z2, one) || near(z2, q) {
        return Err(Error::SingularSample);
    }
    let n = spec.n as i32;
    let abcd: C64 = spec.alphas.iter().product();
    let lam = (Field::powi(q, -n) - 1.0) * (1.0 - abcd * Field::powi(q, n - 1));
    let x_of = |v: C64| (v * v + 1.0) / (v * 2.0);
    let qv = |v: C64| p.eval(x_of(v));
    let qa = |v: C64| p.abs_eval(x_of(v));
    let (d, di) = (aw_d(&spec.alphas, q, z), aw_d(&spec.alphas, q, z.inv()));
    let value = lam * qv(z) + d * (qv(z) - qv(q * z)) + di * (qv(z) - qv(z / q));
    let scale = (lam.norm() * qa(z)).max(d.norm() * qa(z).max(qa(q * z))).max(di.norm() * qa(z).max(qa(z / q)));
    Ok((value, scale))
}

/// q-Racah coefficient functions at `z` for a chosen root `s = ±√(z²−4γδq)`.
pub(crate) struct QRacahParts<T> {
    pub b: T,
    pub d: T,
    pub plus: T,
    pub minus: T,
}

pub(crate) fn qracah_parts<T: Field>(params: &[T], q: T, z: T, s: T) -> QRacahParts<T> {
    let (al, be, ga, de) = (params[0], params[1], params[2], params[3]);
    let one = T::one();
    let gd = ga * de;
    let zz = (z + s) / (T::from_f64(2.0) * gd * q);
    let b = (one - al * q * zz) * (one - be * de * q * zz) * (one - ga * q * zz) * (one - gd * q * zz)
        / ((one - gd * q * zz * zz) * (one - gd * q * q * zz * zz));
    let d = q * (one - zz) * (one - de * zz) * (be - ga * zz) * (al - gd * zz)
        / ((one - gd * zz * zz) * (one - gd * q * zz * zz));
    let (plus, minus) = qracah_shifts(q, z, s);
    QRacahParts { b, d, plus, minus }
}

// B R(z⁺) − (B+D) R(z) + D R(z⁻) − (q^{−N}−1)(1−αβq^{N+1}) R(z).
fn q_racah(spec: &FamilySpec, p: &ComplexPolynomial, z: C64) -> Result<(C64, f64)> {
    let q = spec.base();
    let gd = spec.alphas[2] * spec.alphas[3];
    let arg = z * z - gd * q * 4.0;
    if arg.norm() < tol::SINGULAR_SAMPLE_RADIUS * (1.0 + (gd * q * 4.0).norm()) {
        return Err(Error::SingularSample);
    }
    let s = arg.sqrt();
    let zz = (z + s) / (gd * q * 2.0);
    let one = C64::new(1.0, 0.0);
    let z2 = zz * zz;
    if near(gd * z2, one) || near(gd * q * z2, one) || near(gd * q * q * z2, one) {
        return Err(Error::SingularSample);
    }
    let parts = qracah_parts(&spec.alphas, q, z, s);
    let n = spec.n as i32;
    let lam = (Field::powi(q, -n) - 1.0) * (1.0 - spec.alphas[0] * spec.alphas[1] * Field::powi(q, n + 1));
    let (rp, r0, rm) = (p.eval(parts.plus), p.eval(z), p.eval(parts.minus));
    let (ap, a0, am) = (p.abs_eval(parts.plus), p.abs_eval(z), p.abs_eval(parts.minus));
    let value = parts.b * rp - (parts.b + parts.d) * r0 + parts.d * rm - lam * r0;
    let scale = (parts.b.norm() * ap.max(a0)).max(parts.d.norm() * am.max(a0)).max(lam.norm() * a0);
    Ok((value, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    #[test]
    fn ghyp_degree_one_by_hand() {
        // u = z − 2/3, α = 2, β = 3, z = 1: D_N u = 2/3, (2 − D_N) u = 2z − 2,
        // D_N of that is 2; (2 − D_N) u = 2z − 2 has derivative 2.
        let s = FamilySpec::ghyp(1, &[re(2.0)], &[re(3.0)]).unwrap();
        assert!(defining_equation_residual(&s, re(1.0)).unwrap().norm() < 1e-15);
    }

    #[test]
    fn perturbed_polynomial_is_detected() {
        let s = FamilySpec::wilson(3, [re(0.7), re(1.1), re(1.9), re(2.4)]).unwrap();
        let p = build_polynomial(&s).unwrap();
        let x = C64::new(0.8, 0.9);
        assert!(defining_equation_residual_of(&s, &p, x).unwrap().norm() < 1e-12);
        let mut c = p.coeffs().to_vec();
        c[1] *= 1.0 + 1e-3;
        let r = defining_equation_residual_of(&s, &Poly::new(c), x).unwrap();
        assert!(r.norm() > 1e-6);
    }

    #[test]
    fn singular_samples_rejected() {
        let w = FamilySpec::wilson(2, [re(0.7), re(1.1), re(1.9), re(2.4)]).unwrap();
        assert_eq!(defining_equation_residual(&w, I * 0.5), Err(Error::SingularSample));
        let a = FamilySpec::askey_wilson(2, [re(0.7), re(1.1), re(1.9), re(2.4)], re(1.5)).unwrap();
        assert_eq!(defining_equation_residual(&a, re(1.0)), Err(Error::SingularSample));
    }
}
