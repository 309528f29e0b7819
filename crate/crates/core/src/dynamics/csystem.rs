//! Linear evolution of the expansion coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::iso::closed_form_spectrum;
use crate::numeric::{elementary_coeffs_hyp, Matrix, Poly};
use crate::scalar::{is_finite, Field, C64, I};
use crate::tol;

/// `ċ = τ (A c + h)` for `c = (c_1, …, c_N)`, with `c_0 = 1` folded into `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct CSystem {
    pub a: Matrix,
    pub h: Vec<C64>,
    pub time_factor: C64,
}

impl CSystem {
    /// Eigenvalues of `τA`, read off the diagonal.
    pub fn rates(&self) -> Vec<C64> {
        (0..self.a.dim()).map(|m| self.time_factor * self.a[(m, m)]).collect()
    }
}

pub fn c_system(spec: &FamilySpec) -> Result<CSystem> {
    spec.validate()?;
    let n = spec.n;
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let mut h = vec![zero; n];
    let mut time_factor = one;
    let a = match spec.family {
        Family::GHyp => {
            // Coefficients of the operator applied to z^{N−j}: D_N z^{N−j} = −j z^{N−j}.
            let (ac, bc) = elementary_coeffs_hyp(&spec.alphas, &spec.betas);
            let (pa, pb) = (Poly::new(ac), Poly::new(bc));
            let at = |j: usize| pa.eval(C64::new(-(j as f64), 0.0));
            let bt = |j: usize| pb.eval(C64::new(-(j as f64), 0.0));
            h[0] = n as f64 * at(0);
            Matrix::from_fn(n, |r, c| {
                let (m, j) = (r + 1, c + 1);
                if m == j {
                    -bt(j)
                } else if m == j + 1 {
                    (n - j) as f64 * at(j)
                } else {
                    zero
                }
            })
        }
        Family::GBasicHyp => {
            let q = spec.base();
            let lam = closed_form_spectrum(spec).values;
            let coupling = |m: usize| {
                let qnm = Field::powi(q, (n - m) as i32);
                spec.betas.iter().fold(q * qnm - one, |acc, &b| acc * (b * qnm - one))
            };
            h[0] = coupling(1);
            Matrix::from_fn(n, |r, c| {
                let (m, j) = (r + 1, c + 1);
                if m == j {
                    lam[r]
                } else if m == j + 1 {
                    coupling(m)
                } else {
                    zero
                }
            })
        }
        Family::Wilson | Family::Racah | Family::AskeyWilson | Family::QRacah => {
            if matches!(spec.family, Family::Wilson | Family::Racah) {
                time_factor = I;
            }
            let lam = closed_form_spectrum(spec).values;
            Matrix::from_fn(n, |r, c| if r == c { lam[r] } else { zero })
        }
        Family::Jacobi => return Err(Error::Unsupported("Jacobi has no coefficient system")),
    };
    Ok(CSystem { a, h, time_factor })
}

/// `c(t)` from `c(0) = c0`.
///
/// Diagonal systems use exponentials. Lower-triangular systems with
/// pairwise distinct diagonal use the modal expansion around the particular
/// solution `c_p = −A⁻¹h`; otherwise RK4 with a fixed small step.
pub fn solve_c(cs: &CSystem, c0: &[C64], t: f64) -> Result<Vec<C64>> {
    let n = cs.a.dim();
    if c0.len() != n {
        return Err(Error::CardinalityMismatch { left: c0.len(), right: n });
    }
    if !t.is_finite() {
        return Err(Error::InvalidParameters("time must be finite"));
    }
    if t == 0.0 {
        return Ok(c0.to_vec());
    }
    let tau = cs.time_factor;
    let lam = cs.rates();
    let h_zero = cs.h.iter().all(|v| v.norm() == 0.0);
    if cs.a.is_diagonal() && h_zero {
        return Ok((0..n).map(|m| c0[m] * (lam[m] * t).exp()).collect());
    }
    let scale = lam.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let singular = lam.iter().any(|v| v.norm() <= tol::SINGULAR_DENOMINATOR_REL * scale);
    if singular && !h_zero {
        return Err(Error::SingularA);
    }
    let distinct = (0..n).all(|i| (i + 1..n).all(|j| (lam[i] - lam[j]).norm() > tol::REPEATED_REL * scale));
    if cs.a.is_lower_triangular() && distinct {
        let a = cs.a.scaled(tau);
        let h: Vec<C64> = cs.h.iter().map(|&v| tau * v).collect();
        if let Some(c) = modal(&a, &h, &lam, c0, t) {
            return Ok(c);
        }
    }
    Ok(rk4_linear(cs, c0, t))
}

fn modal(a: &Matrix, h: &[C64], lam: &[C64], c0: &[C64], t: f64) -> Option<Vec<C64>> {
    let n = a.dim();
    let zero = C64::new(0.0, 0.0);
    // Particular solution A c_p = −h by forward substitution.
    let mut cp = vec![zero; n];
    for r in 0..n {
        let s: C64 = (0..r).map(|k| a[(r, k)] * cp[k]).sum();
        cp[r] = (-h[r] - s) / a[(r, r)];
    }
    // Unit lower-triangular eigenvectors, column k for λ_k.
    let mut v = Matrix::zeros(n);
    for k in 0..n {
        v[(k, k)] = C64::new(1.0, 0.0);
        for j in k + 1..n {
            let s: C64 = (k..j).map(|i| a[(j, i)] * v[(i, k)]).sum();
            v[(j, k)] = s / (lam[k] - a[(j, j)]);
        }
    }
    // Modal amplitudes: V w = c0 − c_p.
    let mut w = vec![zero; n];
    for r in 0..n {
        let s: C64 = (0..r).map(|k| v[(r, k)] * w[k]).sum();
        w[r] = c0[r] - cp[r] - s;
    }
    let e: Vec<C64> = (0..n).map(|k| w[k] * (lam[k] * t).exp()).collect();
    let out: Vec<C64> = (0..n).map(|r| cp[r] + (0..=r).map(|k| v[(r, k)] * e[k]).sum::<C64>()).collect();
    out.iter().all(|&x| is_finite(x)).then_some(out)
}

fn rk4_linear(cs: &CSystem, c0: &[C64], t: f64) -> Vec<C64> {
    let steps = libm::ceil(t.abs() / tol::C_SYSTEM_STEP).max(1.0) as usize;
    let dt = t / steps as f64;
    let f = |c: &[C64]| -> Result<Vec<C64>> {
        let ac = cs.a.mul_vec(c);
        Ok(ac.iter().zip(&cs.h).map(|(&x, &y)| cs.time_factor * (x + y)).collect())
    };
    let mut c = c0.to_vec();
    for _ in 0..steps {
        c = rk4_step(&c, dt, &f).expect("linear right-hand side is total");
    }
    c
}

/// One classical Runge–Kutta step for an autonomous system; the first
/// failing stage evaluation is returned.
pub(crate) fn rk4_step(y: &[C64], dt: f64, f: &dyn Fn(&[C64]) -> Result<Vec<C64>>) -> Result<Vec<C64>> {
    let axpy = |a: &[C64], k: &[C64], s: f64| -> Vec<C64> { a.iter().zip(k).map(|(&x, &d)| x + d * s).collect() };
    let k1 = f(y)?;
    let k2 = f(&axpy(y, &k1, dt / 2.0))?;
    let k3 = f(&axpy(y, &k2, dt / 2.0))?;
    let k4 = f(&axpy(y, &k3, dt))?;
    Ok((0..y.len()).map(|i| y[i] + (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0)).collect())
}
