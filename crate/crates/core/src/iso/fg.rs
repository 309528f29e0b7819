//! The universal functions `f_n^{(j)}`, `g_n^{(j)}` of a point `ζ ∈ C^N` and
//! their partial derivatives.

use alloc::vec;
use alloc::vec::Vec;

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::numeric::min_separation;
use crate::scalar::{Field, C64};

/// `RepeatedZeros` unless all components are pairwise distinct.
pub(crate) fn require_distinct(zeros: &[C64]) -> Result<()> {
    let sep = min_separation(zeros);
    if zeros.len() > 1 && !(sep > 0.0) {
        return Err(Error::RepeatedZeros { separation: sep });
    }
    Ok(())
}

/// `σ_n^{(r,ρ)}(ζ) = Σ_{ℓ≠n} ζ_ℓ^r / (ζ_n − ζ_ℓ)^ρ`, with `n` zero-based.
pub fn sigma(zeros: &[C64], n: usize, r: u32, rho: u32) -> Result<C64> {
    require_distinct(zeros)?;
    let zn = zeros[n];
    Ok(zeros
        .iter()
        .enumerate()
        .filter(|&(l, _)| l != n)
        .map(|(_, &zl)| Field::powi(zl, r as i32) / Field::powi(zn - zl, rho as i32))
        .sum())
}

/// Tables of `f^{(j)}` for `j = 1..=J` and `g^{(j)}` for `j = 0..=J`.
#[derive(Clone, Debug, PartialEq)]
pub struct FgTable<T = C64> {
    f: Vec<Vec<T>>,
    g: Vec<Vec<T>>,
}

impl<T: Field> FgTable<T> {
    /// Runs the recursions
    /// `f_n^{(j+1)} = −f_n^{(j)} + Σ_{ℓ≠n} (ζ_n f_ℓ^{(j)} + ζ_ℓ f_n^{(j)}) / (ζ_n − ζ_ℓ)` and
    /// `g_n^{(j)} = Σ_{ℓ≠n} (f_n^{(j)} + f_ℓ^{(j)}) / (ζ_n − ζ_ℓ)`.
    pub fn compute(z: &[T], depth: usize) -> Self {
        let n = z.len();
        let mut f = vec![z.to_vec()];
        let mut g = vec![vec![T::one(); n]];
        for j in 1..=depth {
            let fj = &f[j - 1];
            let mut gj = vec![T::zero(); n];
            let mut next = vec![T::zero(); n];
            for a in 0..n {
                let mut sf = T::zero();
                let mut sg = T::zero();
                for b in 0..n {
                    if a != b {
                        let d = z[a] - z[b];
                        sf = sf + (z[a] * fj[b] + z[b] * fj[a]) / d;
                        sg = sg + (fj[a] + fj[b]) / d;
                    }
                }
                next[a] = sf - fj[a];
                gj[a] = sg;
            }
            g.push(gj);
            if j < depth {
                f.push(next);
            }
        }
        FgTable { f, g }
    }

    /// Largest `j` held.
    pub fn depth(&self) -> usize {
        self.f.len()
    }

    /// `f_n^{(j)}`, `1 ≤ j ≤ depth`.
    pub fn f(&self, j: usize, n: usize) -> T {
        self.f[j - 1][n]
    }

    /// `g_n^{(j)}`, `0 ≤ j ≤ depth`.
    pub fn g(&self, j: usize, n: usize) -> T {
        self.g[j][n]
    }

    pub fn f_row(&self, j: usize) -> &[T] {
        &self.f[j - 1]
    }

    pub fn g_row(&self, j: usize) -> &[T] {
        &self.g[j]
    }
}

/// Exact tables at distinct `ζ`.
pub fn fg_tables(zeros: &[C64], depth: usize) -> Result<FgTable> {
    if depth == 0 {
        return Err(Error::InvalidParameters("depth J must be at least 1"));
    }
    require_distinct(zeros)?;
    Ok(FgTable::compute(zeros, depth))
}

/// `∂f_n^{(j)}/∂ζ_m` and `∂g_n^{(j)}/∂ζ_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct FgJacobian {
    df: Vec<Vec<Vec<C64>>>,
    dg: Vec<Vec<Vec<C64>>>,
}

impl FgJacobian {
    pub fn depth(&self) -> usize {
        self.df.len()
    }

    /// `∂f_n^{(j)}/∂ζ_m`, `1 ≤ j ≤ depth`.
    pub fn df(&self, j: usize, n: usize, m: usize) -> C64 {
        self.df[j - 1][n][m]
    }

    /// `∂g_n^{(j)}/∂ζ_m`, `0 ≤ j ≤ depth`.
    pub fn dg(&self, j: usize, n: usize, m: usize) -> C64 {
        self.dg[j][n][m]
    }
}

/// Forward-mode differentiation of the recursions, one seed per `ζ_m`.
pub fn fg_jacobians(zeros: &[C64], depth: usize) -> Result<FgJacobian> {
    if depth == 0 {
        return Err(Error::InvalidParameters("depth J must be at least 1"));
    }
    require_distinct(zeros)?;
    let n = zeros.len();
    let mut df = vec![vec![vec![C64::new(0.0, 0.0); n]; n]; depth];
    let mut dg = vec![vec![vec![C64::new(0.0, 0.0); n]; n]; depth + 1];
    for m in 0..n {
        let seeded: Vec<Dual> =
            zeros.iter().enumerate().map(|(k, &z)| if k == m { Dual::var(z) } else { Dual::constant(z) }).collect();
        let t = FgTable::compute(&seeded, depth);
        for j in 1..=depth {
            for a in 0..n {
                df[j - 1][a][m] = t.f(j, a).d;
            }
        }
        for j in 0..=depth {
            for a in 0..n {
                dg[j][a][m] = t.g(j, a).d;
            }
        }
    }
    Ok(FgJacobian { df, dg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, re};

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&[re(3.0)], 0, 2, 1).unwrap(), re(0.0));
        assert_eq!(sigma(&[re(2.0), re(1.0)], 0, 1, 1).unwrap(), re(1.0));
        assert_eq!(sigma(&[re(2.0), re(1.0)], 0, 2, 2).unwrap(), re(1.0));
        assert!(matches!(sigma(&[re(1.0), re(1.0)], 0, 1, 1), Err(Error::RepeatedZeros { .. })));
    }

    #[test]
    fn second_f_by_hand() {
        let t = fg_tables(&[re(2.0), re(1.0)], 2).unwrap();
        assert_eq!(t.f(1, 0), re(2.0));
        assert_eq!(t.f(2, 0), re(2.0));
        assert_eq!(t.g(0, 1), re(1.0));
    }

    #[test]
    fn jacobian_seeds() {
        let z = [c(0.3, 0.1), c(-1.2, 0.5), c(2.0, -0.7)];
        let jac = fg_jacobians(&z, 3).unwrap();
        for n in 0..3 {
            for m in 0..3 {
                assert_eq!(jac.df(1, n, m), re(if n == m { 1.0 } else { 0.0 }));
                assert_eq!(jac.dg(0, n, m), re(0.0));
            }
        }
    }
}
