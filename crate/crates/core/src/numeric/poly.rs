use alloc::vec;
use alloc::vec::Vec;

use crate::dd::Cdd;
use crate::scalar::{Field, C64};
use crate::tol;

/// Dense polynomial, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T = C64> {
    coeffs: Vec<T>,
}

pub type ComplexPolynomial = Poly<C64>;

impl<T: Field> Poly<T> {
    /// An empty vector is read as the zero polynomial.
    pub fn new(coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            return Poly { coeffs: vec![T::zero()] };
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Poly { coeffs }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut p = Self::one();
        for &r in roots {
            p = p.mul(&Poly::new(vec![-r, T::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Length of the coefficient vector minus one; no trimming.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> T {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: T) -> T {
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `(p(x), p'(x))` by a single Horner sweep.
    pub fn eval_with_derivative(&self, x: T) -> (T, T) {
        let mut p = T::zero();
        let mut dp = T::zero();
        for &c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Poly::constant(T::zero());
        }
        Poly { coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c.scale(k as f64)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly { coeffs: (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly { coeffs: (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly { coeffs: out }
    }

    pub fn scale(&self, c: T) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    pub fn map<U: Field>(&self, f: impl Fn(T) -> U) -> Poly<U> {
        Poly { coeffs: self.coeffs.iter().map(|&a| f(a)).collect() }
    }

    /// Rounded to double precision.
    pub fn to_c64(&self) -> ComplexPolynomial {
        self.map(|a| a.value())
    }

    /// `Σ |c_k| |x|^k`, the natural scale of `p(x)`.
    pub fn abs_eval(&self, x: C64) -> f64 {
        let r = x.norm();
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops top coefficients with `|c| <= rel · max|c|`.
    pub fn trimmed(&self, rel: f64) -> Self {
        let cut = rel * self.max_abs_coeff();
        let mut n = self.coeffs.len();
        while n > 1 && self.coeffs[n - 1].norm() <= cut {
            n -= 1;
        }
        Poly { coeffs: self.coeffs[..n].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }
}

impl ComplexPolynomial {
    /// Trim with the library threshold.
    pub fn trim(&self) -> Self {
        self.trimmed(tol::TRIM_REL)
    }

    pub fn to_dd(&self) -> Poly<Cdd> {
        self.map(Cdd::from_c64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, re};

    #[test]
    fn horner_with_derivative() {
        let p = Poly::new(vec![re(-6.0), re(11.0), re(-6.0), re(1.0)]);
        let (v, d) = p.eval_with_derivative(re(4.0));
        assert_eq!(v, re(6.0));
        assert_eq!(d, re(11.0));
        assert_eq!(p.derivative().eval(re(4.0)), d);
    }

    #[test]
    fn from_roots_expands_product() {
        let p = Poly::from_roots(&[re(1.0), re(2.0), re(3.0)]);
        assert_eq!(p.coeffs(), &[re(-6.0), re(11.0), re(-6.0), re(1.0)]);
    }

    #[test]
    fn trim_drops_negligible_top() {
        let p = Poly::new(vec![re(1.0), re(2.0), c(1e-15, 0.0)]);
        assert_eq!(p.trim().degree(), 1);
        let q = Poly::new(vec![re(1.0), re(2.0), re(1e-13)]);
        assert_eq!(q.trim().degree(), 2);
    }
}
