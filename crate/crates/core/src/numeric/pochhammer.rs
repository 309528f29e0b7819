use alloc::vec;
use alloc::vec::Vec;

use super::poly::Poly;
use crate::scalar::Field;

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`.
pub fn pochhammer<T: Field>(a: T, j: usize) -> T {
    let mut acc = T::one();
    for k in 0..j {
        acc = acc * (a + T::from_f64(k as f64));
    }
    acc
}

/// q-shifted factorial `(g;q)_m = (1-g)(1-gq)...(1-gq^(m-1))`.
pub fn q_pochhammer<T: Field>(g: T, q: T, m: usize) -> T {
    let mut acc = T::one();
    let mut gq = g;
    for _ in 0..m {
        acc = acc * (T::one() - gq);
        gq = gq * q;
    }
    acc
}

pub fn factorial<T: Field>(m: usize) -> T {
    pochhammer(T::one(), m)
}

/// `[a;z]_k = (a²+z)((a+1)²+z)...((a+k-1)²+z)` as a polynomial in z.
pub fn wilson_pochhammer_poly<T: Field>(a: T, k: usize) -> Poly<T> {
    let mut p = Poly::one();
    for j in 0..k {
        let s = a + T::from_f64(j as f64);
        p = p.mul(&Poly::new(vec![s * s, T::one()]));
    }
    p
}

/// `{a;q;x}_m = Π_{k<m} (1 + a² q^{2k} - 2 a q^k x)` as a polynomial in x.
pub fn aw_pochhammer_poly<T: Field>(a: T, q: T, m: usize) -> Poly<T> {
    let mut p = Poly::one();
    let mut aq = a;
    for _ in 0..m {
        p = p.mul(&Poly::new(vec![T::one() + aq * aq, -(aq + aq)]));
        aq = aq * q;
    }
    p
}

/// `Π_{s<m} (1 - z q^s + γδ q^{2s+1})` as a polynomial in z.
pub fn qracah_pochhammer_poly<T: Field>(gd: T, q: T, m: usize) -> Poly<T> {
    let mut p = Poly::one();
    let mut qs = T::one();
    for _ in 0..m {
        p = p.mul(&Poly::new(vec![T::one() + gd * qs * qs * q, -qs]));
        qs = qs * q;
    }
    p
}

/// `[λ]_n = -λ Π_{s=1}^{n-1} (-λ + s·gd1 + s²)` with `gd1 = γ+δ+1`.
pub fn racah_lambda_pochhammer_poly<T: Field>(gd1: T, n: usize) -> Poly<T> {
    if n == 0 {
        return Poly::one();
    }
    let mut p = Poly::new(vec![T::zero(), -T::one()]);
    for s in 1..n {
        let sf = T::from_f64(s as f64);
        p = p.mul(&Poly::new(vec![sf * gd1 + sf * sf, -T::one()]));
    }
    p
}

/// Coefficients `a_0..a_p` of `Π(α_j - x)` and `b_0..b_{q+1}` of
/// `x Π(β_k - 1 - x)`; `b_0 = 0`.
pub fn elementary_coeffs_hyp<T: Field>(alphas: &[T], betas: &[T]) -> (Vec<T>, Vec<T>) {
    let mut a = Poly::one();
    for &al in alphas {
        a = a.mul(&Poly::new(vec![al, -T::one()]));
    }
    let mut b = Poly::new(vec![T::zero(), T::one()]);
    for &be in betas {
        b = b.mul(&Poly::new(vec![be - T::one(), -T::one()]));
    }
    (a.into_coeffs(), b.into_coeffs())
}

/// Coefficients of `Π(1 + α_j x)` and `Π(1 + β_k x)`, index 0 holding the 1.
pub fn elementary_coeffs_basic<T: Field>(alphas: &[T], betas: &[T]) -> (Vec<T>, Vec<T>) {
    let expand = |xs: &[T]| {
        let mut p = Poly::one();
        for &x in xs {
            p = p.mul(&Poly::new(vec![T::one(), x]));
        }
        p.into_coeffs()
    };
    (expand(alphas), expand(betas))
}
