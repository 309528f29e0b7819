use alloc::vec;
use alloc::vec::Vec;

use super::linalg::Matrix;
use super::poly::{ComplexPolynomial, Poly};
use super::roots::{aberth, finish};
use crate::error::Result;
use crate::scalar::{is_finite, lex_cmp, C64};
use crate::tol;

/// Eigenvalues as an unordered multiset.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenMultiset {
    pub values: Vec<C64>,
    /// Filled by callers after matching against a reference.
    pub match_distance: Option<f64>,
}

impl EigenMultiset {
    pub fn new(values: Vec<C64>) -> Self {
        EigenMultiset { values, match_distance: None }
    }

    pub fn sum(&self) -> C64 {
        self.values.iter().sum()
    }

    pub fn product(&self) -> C64 {
        self.values.iter().product()
    }
}

/// Characteristic polynomial `det(λI - M)` by Faddeev–LeVerrier.
pub fn charpoly(m: &Matrix) -> ComplexPolynomial {
    let n = m.dim();
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[n] = C64::new(1.0, 0.0);
    let mut mk = Matrix::identity(n);
    for k in 1..=n {
        let amk = m.mul(&mk);
        let ck = -amk.trace() / k as f64;
        coeffs[n - k] = ck;
        if k < n {
            mk = amk;
            for i in 0..n {
                mk[(i, i)] += ck;
            }
        }
    }
    Poly::new(coeffs)
}

/// Eigenvalues of a dense matrix.
///
/// The scaled matrix's characteristic polynomial is solved by Aberth
/// iteration; the estimates are then refined by Aberth steps on
/// `det(M - λI)` itself, whose Newton ratio is `-1 / tr((M - λI)^{-1})`.
/// The refinement removes the conditioning loss of the characteristic
/// polynomial when the spectrum spans several orders of magnitude.
pub fn matrix_eigenvalues(m: &Matrix, tol: f64) -> Result<EigenMultiset> {
    let n = m.dim();
    if n == 1 {
        return Ok(EigenMultiset::new(vec![m[(0, 0)]]));
    }
    let s = m.max_abs();
    if s == 0.0 {
        return Ok(EigenMultiset::new(vec![C64::new(0.0, 0.0); n]));
    }
    let a = m.scaled(C64::new(1.0 / s, 0.0));
    let cp = charpoly(&a);
    let estimates = aberth(&cp, tol::ROOT_MAX_ITER);
    let mut values = finish(&cp, estimates, tol)?.zeros;
    polish_eigenvalues(&a, &mut values);
    let mut values: Vec<C64> = values.into_iter().map(|v| v * s).collect();
    values.sort_by(lex_cmp);
    Ok(EigenMultiset::new(values))
}

fn polish_eigenvalues(a: &Matrix, values: &mut [C64]) {
    let start = values.to_vec();
    let n = values.len();
    for _ in 0..12 {
        let mut biggest: f64 = 0.0;
        for k in 0..n {
            let lu = a.shifted(values[k]).lu();
            let Some(t) = lu.inverse_trace() else { continue };
            if t.norm() == 0.0 || !is_finite(t) {
                continue;
            }
            let newton = -t.inv();
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += (values[k] - values[j]).inv();
                }
            }
            let step = newton / (C64::new(1.0, 0.0) - newton * s);
            if !is_finite(step) {
                continue;
            }
            values[k] -= step;
            biggest = biggest.max(step.norm() / values[k].norm().max(1e-300));
        }
        if biggest <= 4.0 * f64::EPSILON {
            break;
        }
    }
    if values.iter().any(|v| !is_finite(*v)) {
        values.copy_from_slice(&start);
    }
}
