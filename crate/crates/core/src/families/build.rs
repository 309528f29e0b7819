use alloc::vec::Vec;

use super::spec::{Family, FamilySpec};
use crate::dd::Cdd;
use crate::error::{Error, Result};
use crate::numeric::{
    aw_pochhammer_poly, factorial, pochhammer, q_pochhammer, qracah_pochhammer_poly, racah_lambda_pochhammer_poly,
    wilson_pochhammer_poly, ComplexPolynomial, Poly,
};
use crate::scalar::{Field, C64};

const DENOMINATOR_REL: f64 = 1e-13;

/// Product of denominator factors; a factor vanishing relative to its own
/// terms marks the whole product invalid.
struct Denominator<T> {
    value: T,
    vanished: bool,
}

impl<T: Field> Denominator<T> {
    fn new() -> Self {
        Denominator { value: T::one(), vanished: false }
    }

    fn factor(mut self, f: T, scale: f64) -> Self {
        self.vanished |= !(f.norm() > DENOMINATOR_REL * scale);
        self.value = self.value * f;
        self
    }

    fn rising(mut self, a: T, m: usize) -> Self {
        for k in 0..m {
            self = self.factor(a + T::from_f64(k as f64), a.norm() + k as f64);
        }
        self
    }

    fn q_rising(mut self, g: T, q: T, m: usize) -> Self {
        let mut gq = g;
        for _ in 0..m {
            self = self.factor(T::one() - gq, 1.0 + gq.norm());
            gq = gq * q;
        }
        self
    }

    fn times(self, x: T) -> Self {
        let s = x.norm();
        self.factor(x, s)
    }

    fn get(self) -> Result<T> {
        if self.vanished || !self.value.norm().is_finite() {
            return Err(Error::InvalidParameters("a series denominator vanishes"));
        }
        Ok(self.value)
    }
}

/// Coefficients of the family polynomial, rounded to double precision.
pub fn build_polynomial(spec: &FamilySpec) -> Result<ComplexPolynomial> {
    Ok(build_in::<Cdd>(spec)?.to_c64())
}

/// Term-by-term accumulation of the family's finite sum in the scalar type `T`.
pub fn build_in<T: Field>(spec: &FamilySpec) -> Result<Poly<T>> {
    let n = spec.n;
    let p = |z: C64| T::from_c64(z);
    let al: Vec<T> = spec.alphas.iter().map(|&z| p(z)).collect();
    let be: Vec<T> = spec.betas.iter().map(|&z| p(z)).collect();
    let q = p(spec.base());
    let neg_n = T::from_f64(-(n as f64));
    let mut out = Poly::new(alloc::vec![T::zero(); n + 1]);
    let mut add_term = |coef: T, basis: &Poly<T>| out = out.add(&basis.scale(coef));

    match spec.family {
        Family::GHyp => {
            for m in 0..=n {
                let mut num = pochhammer(neg_n, m);
                for &a in &al {
                    num = num * pochhammer(a, m);
                }
                let mut den = Denominator::new().times(factorial(m));
                for &b in &be {
                    den = den.rising(b, m);
                }
                add_term(num / den.get()?, &Poly::monomial(n - m));
            }
        }
        Family::GBasicHyp => {
            let (r, s) = (al.len() as i32, be.len() as i32);
            let q_neg_n = q.powi(-(n as i32));
            for m in 0..=n {
                let mut num = q_pochhammer(q_neg_n, q, m);
                for &a in &al {
                    num = num * q_pochhammer(a, q, m);
                }
                let mut den = Denominator::new().q_rising(q, q, m);
                for &b in &be {
                    den = den.q_rising(b, q, m);
                }
                // [(-1)^m q^{m(m-1)/2}]^{s-r}
                let e = s - r;
                let sign = if (m as i32 * e).rem_euclid(2) == 1 { -T::one() } else { T::one() };
                let tri = q.powi((m * m.saturating_sub(1) / 2) as i32 * e);
                add_term(num / den.get()? * sign * tri, &Poly::monomial(m));
            }
        }
        Family::Jacobi => {
            let (alpha, beta) = (al[0], al[1]);
            let a1 = T::from_f64(n as f64 + 1.0) + alpha + beta;
            let b1 = alpha + T::one();
            let pre = pochhammer(b1, n) / factorial::<T>(n);
            let u = Poly::new(alloc::vec![T::from_f64(0.5), T::from_f64(-0.5)]);
            let mut um = Poly::one();
            for m in 0..=n {
                let num = pochhammer(neg_n, m) * pochhammer(a1, m);
                let den = Denominator::new().times(factorial(m)).rising(b1, m);
                add_term(pre * num / den.get()?, &um);
                um = um.mul(&u);
            }
        }
        Family::Wilson => {
            let (a, b, c, d) = (al[0], al[1], al[2], al[3]);
            let pre = pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
            let top = T::from_f64(n as f64 - 1.0) + a + b + c + d;
            for k in 0..=n {
                let num = pochhammer(neg_n, k) * pochhammer(top, k);
                let den = Denominator::new().times(factorial(k)).rising(a + b, k).rising(a + c, k).rising(a + d, k);
                add_term(pre * num / den.get()?, &wilson_pochhammer_poly(a, k));
            }
        }
        Family::Racah => {
            let (alpha, beta, gamma, delta) = (al[0], al[1], al[2], al[3]);
            let top = T::from_f64(n as f64 + 1.0) + alpha + beta;
            let gd1 = gamma + delta + T::one();
            for k in 0..=n {
                let num = pochhammer(neg_n, k) * pochhammer(top, k);
                let den = Denominator::new()
                    .times(factorial(k))
                    .rising(alpha + T::one(), k)
                    .rising(beta + delta + T::one(), k)
                    .rising(gamma + T::one(), k);
                add_term(num / den.get()?, &racah_lambda_pochhammer_poly(gd1, k));
            }
        }
        Family::AskeyWilson => {
            let (a, b, c, d) = (al[0], al[1], al[2], al[3]);
            let pre =
                q_pochhammer(a * b, q, n) * q_pochhammer(a * c, q, n) * q_pochhammer(a * d, q, n) / a.powi(n as i32);
            let q_neg_n = q.powi(-(n as i32));
            let abcd = a * b * c * d * q.powi(n as i32 - 1);
            for m in 0..=n {
                let num = q.powi(m as i32) * q_pochhammer(q_neg_n, q, m) * q_pochhammer(abcd, q, m);
                let den = Denominator::new().q_rising(q, q, m).q_rising(a * b, q, m).q_rising(a * c, q, m).q_rising(
                    a * d,
                    q,
                    m,
                );
                add_term(pre * num / den.get()?, &aw_pochhammer_poly(a, q, m));
            }
        }
        Family::QRacah => {
            let (alpha, beta, gamma, delta) = (al[0], al[1], al[2], al[3]);
            let q_neg_n = q.powi(-(n as i32));
            let ab = alpha * beta * q.powi(n as i32 + 1);
            for m in 0..=n {
                let num = q.powi(m as i32) * q_pochhammer(q_neg_n, q, m) * q_pochhammer(ab, q, m);
                let den = Denominator::new()
                    .q_rising(q, q, m)
                    .q_rising(alpha * q, q, m)
                    .q_rising(beta * delta * q, q, m)
                    .q_rising(gamma * q, q, m);
                add_term(num / den.get()?, &qracah_pochhammer_poly(gamma * delta, q, m));
            }
        }
    }
    Ok(out)
}
