use alloc::vec::Vec;

use super::build::build_polynomial;
use super::spec::FamilySpec;
use crate::error::Result;
use crate::scalar::{Field, C64};

/// Largest coefficient gap between the basic polynomial with parameters
/// `q^{α_j}, q^{β_k}` and argument scaled by `(q−1)^{s−r}`, and the ordinary
/// `{r+1}F_s` polynomial, relative to the largest ordinary coefficient.
///
/// The basic coefficient of `z^m` corresponds to the hypergeometric
/// coefficient of `z^{N−m}`. The gap is `O(|q−1|)`.
pub fn q_to_one_limit_check(alphas: &[C64], betas: &[C64], n: usize, q: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let qc = C64::new(q, 0.0);
    let qa: Vec<C64> = alphas.iter().map(|&a| (a * libm::log(q)).exp()).collect();
    let qb: Vec<C64> = betas.iter().map(|&b| (b * libm::log(q)).exp()).collect();
    let basic = build_polynomial(&FamilySpec::gbasic(n, &qa, &qb, qc)?)?;
    let plain = build_polynomial(&FamilySpec::ghyp(n, alphas, betas)?)?;
    let e = betas.len() as i32 - alphas.len() as i32;
    let factor = Field::powi(C64::new(q - 1.0, 0.0), e);
    let scale = plain.max_abs_coeff().max(1.0);
    let mut worst: f64 = 0.0;
    for m in 0..=n {
        let b = basic.coeff(m) * Field::powi(factor, m as i32);
        let h = plain.coeff(n - m);
        worst = worst.max((b - h).norm());
    }
    Ok(worst / scale)
}
