//! Numerical integration of the zero systems and the algebraic solution they
//! are compared against.

use alloc::vec::Vec;

use super::csystem::{c_system, rk4_step, solve_c, CSystem};
use super::rhs::evaluate;
use crate::dd::Cdd;
use crate::error::{Error, Result};
use crate::families::{build_in, extended_roots, Family, FamilySpec};
use crate::numeric::{match_by_continuity, multiset_match, Poly, ZeroSet};
use crate::scalar::{Field, C64};
use crate::tol;

/// ODE and algebraic trajectories on a common time grid.
#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryRecord {
    pub times: Vec<f64>,
    pub ode_zeros: Vec<ZeroSet>,
    pub oracle_zeros: Vec<ZeroSet>,
    /// Largest `multiset_match(ode, oracle)` over the grid.
    pub max_deviation: f64,
}

/// RK4 with fixed step `t1/steps`; every state, `z0` included, is returned.
pub fn integrate(spec: &FamilySpec, z0: &[C64], t1: f64, steps: usize) -> Result<Vec<Vec<C64>>> {
    if steps == 0 {
        return Err(Error::InvalidParameters("steps must be at least 1"));
    }
    if !t1.is_finite() {
        return Err(Error::InvalidParameters("time must be finite"));
    }
    let dt = t1 / steps as f64;
    let f = |z: &[C64]| evaluate::<C64>(spec, z).map(|e| e.value);
    f(z0)?;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(z0.to_vec());
    for _ in 0..steps {
        let next = rk4_step(out.last().expect("seeded"), dt, &f)?;
        out.push(next);
    }
    Ok(out)
}

/// The polynomial whose zeros are the dynamics variables, expanded in a basis
/// of eigenfunctions of the family's operator and evolved coefficientwise.
#[derive(Clone, Debug)]
pub struct AlgebraicSolver {
    family: Family,
    theta2: C64,
    cs: CSystem,
    /// Monic basis polynomials `B_0, …, B_N` in the basis variable.
    basis: Vec<Poly<Cdd>>,
    c0: Vec<C64>,
    start: Vec<C64>,
}

/// Basis variable of a dynamics variable: `x²` (Wilson), `y² − θ²` (Racah),
/// unchanged otherwise.
fn to_basis_var(family: Family, theta2: C64, v: C64) -> C64 {
    match family {
        Family::Wilson => v * v,
        Family::Racah => v * v - theta2,
        _ => v,
    }
}

impl AlgebraicSolver {
    pub fn new(spec: &FamilySpec, z0: &[C64]) -> Result<Self> {
        let cs = c_system(spec)?;
        let n = spec.n;
        if z0.len() != n {
            return Err(Error::CardinalityMismatch { left: z0.len(), right: n });
        }
        let theta2 = if spec.family == Family::Racah { spec.theta() * spec.theta() } else { C64::new(0.0, 0.0) };
        let mut basis = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let raw = match spec.family {
                Family::GHyp | Family::GBasicHyp => Poly::monomial(k),
                _ => build_in::<Cdd>(&spec.with_degree(k))?,
            };
            let lead = raw.coeff(k);
            let size = raw.max_abs_coeff();
            if !(lead.norm() > tol::BASIS_PIVOT_REL * size) {
                return Err(Error::BasisIllConditioned { pivot: lead.norm() / size });
            }
            let inv = lead.recip();
            basis.push(Poly::new(raw.coeffs()[..=k].iter().map(|&c| c * inv).collect()));
        }
        let roots: Vec<Cdd> = z0.iter().map(|&v| Cdd::from_c64(to_basis_var(spec.family, theta2, v))).collect();
        let mut rem = Poly::from_roots(&roots).into_coeffs();
        let mut c0 = Vec::with_capacity(n);
        for m in 0..=n {
            let k = n - m;
            let c = rem[k];
            for (i, &b) in basis[k].coeffs().iter().enumerate() {
                rem[i] = rem[i] - c * b;
            }
            if m > 0 {
                c0.push(c.value());
            }
        }
        Ok(AlgebraicSolver { family: spec.family, theta2, cs, basis, c0, start: z0.to_vec() })
    }

    /// Coefficients `c_1..c_N` at time `t`.
    pub fn coefficients(&self, t: f64) -> Result<Vec<C64>> {
        solve_c(&self.cs, &self.c0, t)
    }

    /// Zeros at time `t`, ordered and branch-matched against `prev`; exactly
    /// the starting zeros at `t = 0`.
    pub fn zeros_at(&self, t: f64, prev: &[C64]) -> Result<Vec<C64>> {
        if t == 0.0 {
            return Ok(self.start.clone());
        }
        let n = self.c0.len();
        let c = self.coefficients(t)?;
        let mut p = self.basis[n].clone();
        for (m, &cm) in c.iter().enumerate() {
            p = p.add(&self.basis[n - m - 1].scale(Cdd::from_c64(cm)));
        }
        let roots = extended_roots(&p)?.zeros;
        let prev_basis: Vec<C64> = prev.iter().map(|&v| to_basis_var(self.family, self.theta2, v)).collect();
        let ordered = match_by_continuity(&prev_basis, &roots)?;
        Ok(match self.family {
            Family::Wilson | Family::Racah => ordered
                .iter()
                .zip(prev)
                .map(|(&x, &p)| {
                    let r = (x + self.theta2).sqrt();
                    if (r - p).norm() <= (r + p).norm() {
                        r
                    } else {
                        -r
                    }
                })
                .collect(),
            _ => ordered,
        })
    }

    pub fn start(&self) -> &[C64] {
        &self.start
    }
}

/// Zeros of the algebraic solution at time `t`, in the dynamics variable.
pub fn algebraic_solution(spec: &FamilySpec, z0: &[C64], t: f64) -> Result<ZeroSet> {
    let solver = AlgebraicSolver::new(spec, z0)?;
    Ok(ZeroSet::from_zeros(solver.zeros_at(t, z0)?))
}

/// Integrates from `z0` and compares against the algebraic solution at every step.
pub fn evolve(spec: &FamilySpec, z0: &[C64], t1: f64, steps: usize) -> Result<TrajectoryRecord> {
    let ode = integrate(spec, z0, t1, steps)?;
    let solver = AlgebraicSolver::new(spec, z0)?;
    let dt = t1 / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut oracle: Vec<Vec<C64>> = Vec::with_capacity(steps + 1);
    let mut max_deviation: f64 = 0.0;
    for (k, z) in ode.iter().enumerate() {
        let t = k as f64 * dt;
        let prev = oracle.last().map(|v| v.as_slice()).unwrap_or(z0);
        let o = solver.zeros_at(t, prev)?;
        max_deviation = max_deviation.max(multiset_match(z, &o)?);
        times.push(t);
        oracle.push(o);
    }
    Ok(TrajectoryRecord {
        times,
        ode_zeros: ode.into_iter().map(ZeroSet::from_zeros).collect(),
        oracle_zeros: oracle.into_iter().map(ZeroSet::from_zeros).collect(),
        max_deviation,
    })
}

/// Componentwise perturbation `z_n + ε max(1, |z_n|) e^{i(0.7 n + 0.3)}`.
pub fn perturb(z: &[C64], eps: f64) -> Vec<C64> {
    z.iter().enumerate().map(|(n, &v)| v + C64::from_polar(eps * v.norm().max(1.0), 0.7 * n as f64 + 0.3)).collect()
}
