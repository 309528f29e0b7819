use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::poly::{ComplexPolynomial, Poly};
use crate::dd::Cdd;
use crate::error::{Error, Result};
use crate::scalar::{is_finite, lex_cmp, Field, C64};
use crate::tol;

/// Zeros of one polynomial with distinctness and accuracy metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSet {
    pub zeros: Vec<C64>,
    /// Smallest pairwise distance; infinite for a single zero.
    pub min_separation: f64,
    /// Largest `|p(z)| / Σ|c_k||z|^k` over the zeros.
    pub max_poly_residual: f64,
}

impl ZeroSet {
    /// Wraps zeros that did not come from a polynomial; the residual is zero.
    pub fn from_zeros(zeros: Vec<C64>) -> Self {
        let min_separation = min_separation(&zeros);
        ZeroSet { zeros, min_separation, max_poly_residual: 0.0 }
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// `max(1, max |z|)`.
    pub fn scale(&self) -> f64 {
        self.zeros.iter().map(|z| z.norm()).fold(1.0, f64::max)
    }
}

pub fn min_separation(zs: &[C64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            best = best.min((zs[i] - zs[j]).norm());
        }
    }
    best
}

/// `|p(z)|` relative to `Σ |c_k| |z|^k`.
pub fn scaled_residual<T: Field>(p: &Poly<T>, z: T) -> f64 {
    let v = p.eval(z).norm();
    if v == 0.0 {
        return 0.0;
    }
    v / p.abs_eval(z.value())
}

/// All roots of `p` by Aberth–Ehrlich iteration, sorted by (re, im).
pub fn poly_roots(p: &ComplexPolynomial, tol: f64, max_iter: usize) -> Result<ZeroSet> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial"));
    }
    let p = p.trim();
    if p.degree() == 0 {
        return Err(Error::DegenerateInput("constant polynomial has no roots"));
    }
    let mut zeros = aberth(&p, max_iter);
    newton_polish(&p, &mut zeros);
    finish(&p, zeros, tol)
}

/// Residual check, (re, im) sort and separation for a set of root estimates.
pub fn finish<T: Field>(p: &Poly<T>, mut zeros: Vec<C64>, tol: f64) -> Result<ZeroSet> {
    let mut residual: f64 = 0.0;
    for &z in &zeros {
        if !is_finite(z) {
            return Err(Error::NonConvergence { residual: f64::INFINITY });
        }
        residual = residual.max(scaled_residual(p, T::from_c64(z)));
    }
    if !(residual <= tol) {
        return Err(Error::NonConvergence { residual });
    }
    zeros.sort_by(lex_cmp);
    let min_separation = min_separation(&zeros);
    Ok(ZeroSet { zeros, min_separation, max_poly_residual: residual })
}

/// Simultaneous Aberth–Ehrlich iteration from a circle of initial guesses.
pub fn aberth(p: &ComplexPolynomial, max_iter: usize) -> Vec<C64> {
    let n = p.degree();
    let lead = p.leading();
    if n == 1 {
        return vec![-p.coeff(0) / lead];
    }
    let mut radius: f64 = 1.0;
    for k in 1..=n {
        let ratio = (p.coeff(n - k) / lead).norm();
        radius = radius.max(libm::pow(ratio, 1.0 / k as f64));
    }
    let mut z: Vec<C64> = (0..n).map(|k| C64::from_polar(radius, TAU * k as f64 / n as f64 + 0.42)).collect();
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (pv, dv) = p.eval_with_derivative(z[i]);
            if pv.norm() <= 4.0 * f64::EPSILON * p.abs_eval(z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = pv / dv;
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (C64::new(1.0, 0.0) - ratio * s);
            if is_finite(w) {
                z[i] -= w;
                if w.norm() <= f64::EPSILON * z[i].norm() {
                    done[i] = true;
                    continue;
                }
            } else {
                z[i] += C64::from_polar(1e-3 * radius, 1.0 + i as f64);
            }
            all_done = false;
        }
        if all_done {
            break;
        }
    }
    z
}

/// Two Newton steps per root, each kept only if the residual drops.
fn newton_polish(p: &ComplexPolynomial, zeros: &mut [C64]) {
    for z in zeros.iter_mut() {
        for _ in 0..2 {
            let (pv, dv) = p.eval_with_derivative(*z);
            let cand = *z - pv / dv;
            if is_finite(cand) && p.eval(cand).norm() < pv.norm() {
                *z = cand;
            } else {
                break;
            }
        }
    }
}

/// Newton refinement against extended-precision coefficients.
///
/// A step is rejected when it would move a root by more than half the
/// distance to its nearest neighbour, or when it does not reduce `|p|`.
pub fn polish_roots(p: &Poly<Cdd>, zeros: &mut [C64]) {
    let snapshot = zeros.to_vec();
    for (i, z) in zeros.iter_mut().enumerate() {
        let reach = snapshot
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| (*w - snapshot[i]).norm())
            .fold(f64::INFINITY, f64::min)
            * 0.5;
        let mut x = Cdd::from_c64(*z);
        let mut pv = p.eval(x);
        for _ in 0..4 {
            let (v, dv) = p.eval_with_derivative(x);
            let cand = x - v / dv;
            let cv = cand.value();
            if !is_finite(cv) || (cv - snapshot[i]).norm() > reach {
                break;
            }
            let cand_v = p.eval(cand);
            if cand_v.norm() >= pv.norm() && cand_v.norm() != 0.0 {
                break;
            }
            x = cand;
            pv = cand_v;
            if pv.norm() == 0.0 {
                break;
            }
        }
        *z = x.value();
    }
}

/// Resolves isolated pairs of nearly coincident roots.
///
/// Near a double root each estimate is only good to about `√ε`. For a pair
/// closer than `CLUSTER_REL` of the zero scale, with no third root within ten
/// times that distance, the centre `c` is taken as the root of `p'` and the
/// pair as `c ± √(−2p(c)/p''(c))`, all in double-double. The result is kept
/// only if it stays near the pair and lowers the larger residual.
pub fn refine_close_pairs(p: &Poly<Cdd>, zeros: &mut [C64]) {
    let n = zeros.len();
    if n < 2 {
        return;
    }
    let scale = zeros.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let dp = p.derivative();
    let ddp = dp.derivative();
    for i in 0..n {
        let Some((j, sep)) = nearest(zeros, i) else { continue };
        if j < i || sep > tol::CLUSTER_REL * scale || nearest(zeros, j).map(|(k, _)| k) != Some(i) {
            continue;
        }
        let third = (0..n)
            .filter(|&k| k != i && k != j)
            .map(|k| (zeros[k] - zeros[i]).norm().min((zeros[k] - zeros[j]).norm()))
            .fold(f64::INFINITY, f64::min);
        if third <= 10.0 * sep {
            continue;
        }
        let mid = (zeros[i] + zeros[j]) * 0.5;
        let mut c = Cdd::from_c64(mid);
        for _ in 0..8 {
            let (v, dv) = dp.eval_with_derivative(c);
            if dv.value().norm() == 0.0 {
                break;
            }
            c = c - v / dv;
        }
        let window = 4.0 * sep;
        let curv = ddp.eval(c);
        if !is_finite(c.value()) || (c.value() - mid).norm() > window || curv.value().norm() == 0.0 {
            continue;
        }
        let h = (-(p.eval(c) + p.eval(c)) / curv).sqrt();
        let (a, b) = ((c + h).value(), (c - h).value());
        if !(is_finite(a) && is_finite(b)) || (a - mid).norm() > window || (b - mid).norm() > window {
            continue;
        }
        let res = |z: C64| p.eval(Cdd::from_c64(z)).value().norm();
        if res(a).max(res(b)) > res(zeros[i]).max(res(zeros[j])) {
            continue;
        }
        if (a - zeros[i]).norm() + (b - zeros[j]).norm() <= (b - zeros[i]).norm() + (a - zeros[j]).norm() {
            (zeros[i], zeros[j]) = (a, b);
        } else {
            (zeros[i], zeros[j]) = (b, a);
        }
    }
}

fn nearest(zeros: &[C64], i: usize) -> Option<(usize, f64)> {
    (0..zeros.len()).filter(|&j| j != i).map(|j| (j, (zeros[j] - zeros[i]).norm())).min_by(|a, b| a.1.total_cmp(&b.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::multiset_match;
    use crate::scalar::{c, re};
    use proptest::prelude::*;

    fn roots_of(coeffs: &[f64]) -> Vec<C64> {
        let p = Poly::new(coeffs.iter().map(|&x| re(x)).collect());
        poly_roots(&p, tol::ROOT_TOL, tol::ROOT_MAX_ITER).unwrap().zeros
    }

    #[test]
    fn spec_examples() {
        let r = roots_of(&[-1.0, 0.0, 1.0]);
        assert!(multiset_match(&r, &[re(1.0), re(-1.0)]).unwrap() < 1e-14);
        let r = roots_of(&[1.0, 0.0, 1.0]);
        assert!(multiset_match(&r, &[c(0.0, 1.0), c(0.0, -1.0)]).unwrap() < 1e-14);
        let oracle = Poly::from_roots(&[re(1.0), re(2.0), re(3.0)]);
        let r = poly_roots(&oracle, 1e-12, 200).unwrap();
        assert!(multiset_match(&r.zeros, &[re(1.0), re(2.0), re(3.0)]).unwrap() < 1e-13);
        assert!((r.min_separation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_and_constant_polynomials_are_rejected() {
        let z = Poly::new(vec![re(0.0), re(0.0)]);
        assert!(matches!(poly_roots(&z, 1e-12, 200), Err(Error::DegenerateInput(_))));
        let k = Poly::constant(re(3.0));
        assert!(matches!(poly_roots(&k, 1e-12, 200), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn double_root_still_converges() {
        let p = Poly::from_roots(&[re(0.5), re(0.5), re(-2.0)]);
        let r = poly_roots(&p, 1e-12, 200).unwrap();
        assert!(multiset_match(&r.zeros, &[re(0.5), re(0.5), re(-2.0)]).unwrap() < 1e-7);
    }

    #[test]
    fn extended_polish_fixes_cancellation() {
        // (z-1)(z-1-1e-6)(z-3): clustered pair, coefficients exact in double-double.
        let roots = [re(1.0), re(1.0 + 1e-6), re(3.0)];
        let exact = Poly::from_roots(&roots.map(Cdd::from_c64));
        let mut z = aberth(&exact.to_c64(), 200);
        polish_roots(&exact, &mut z);
        assert!(multiset_match(&z, &roots).unwrap() < 1e-13);
    }

    #[test]
    fn close_pairs_are_resolved() {
        for (gap, want) in [(0.0, 1e-15), (1e-7, 1e-14), (1e-9, 1e-14)] {
            let roots = [c(-3.0625, 0.0), c(-3.0625 + gap, 0.0), c(0.5, 1.0), c(2.0, -0.25)];
            let exact = Poly::from_roots(&roots.map(Cdd::from_c64));
            let mut z = aberth(&exact.to_c64(), 200);
            polish_roots(&exact, &mut z);
            refine_close_pairs(&exact, &mut z);
            let err = multiset_match(&z, &roots).unwrap();
            assert!(err < want, "gap {gap}: {err:e}");
        }
    }

    #[test]
    fn separated_roots_are_untouched() {
        let roots = [re(1.0), re(2.0), c(0.0, 1.5)];
        let exact = Poly::from_roots(&roots.map(Cdd::from_c64));
        let mut z = aberth(&exact.to_c64(), 200);
        polish_roots(&exact, &mut z);
        let before = z.clone();
        refine_close_pairs(&exact, &mut z);
        assert_eq!(z, before);
    }

    fn separated_roots() -> impl Strategy<Value = Vec<C64>> {
        proptest::collection::vec((0.0..1.0f64, 0.0..TAU), 1..=10).prop_filter_map("roots too close", |raw| {
            let zs: Vec<C64> = raw.iter().map(|&(r, t)| C64::from_polar(r.sqrt(), t)).collect();
            (min_separation(&zs) >= 0.1).then_some(zs)
        })
    }

    proptest! {
        #[test]
        fn recovers_planted_roots(zs in separated_roots()) {
            let p = Poly::from_roots(&zs);
            let got = poly_roots(&p, 1e-12, 200).unwrap();
            prop_assert!(multiset_match(&got.zeros, &zs).unwrap() <= 1e-9);
            prop_assert!(got.max_poly_residual <= 1e-12);
        }
    }
}
