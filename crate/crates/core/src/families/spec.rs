use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Field, C64};
use crate::tol;

/// Polynomial family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `z^N {p+1}F_q(-N, α; β; 1/z)`, monic in z.
    GHyp,
    /// `{r+1}φ_s(q^{-N}, α; β; q; z)` in z.
    GBasicHyp,
    /// `P_N^{(α,β)}(x)`; alphas = [α, β].
    Jacobi,
    /// `W_N(z; a,b,c,d)` in `z = x²`.
    Wilson,
    /// `R_N(λ; α,β,γ,δ)` in `λ = x(x+γ+δ+1)`.
    Racah,
    /// `p_N(a,b,c,d; q; x)` in `x = cos θ`.
    AskeyWilson,
    /// `R_N(α,β,γ,δ; q; z)` in `z = q^{-x} + γδ q^{x+1}`.
    QRacah,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::GHyp,
        Family::GBasicHyp,
        Family::Jacobi,
        Family::Wilson,
        Family::Racah,
        Family::AskeyWilson,
        Family::QRacah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GHyp => "ghyp",
            Family::GBasicHyp => "gbasic",
            Family::Jacobi => "jacobi",
            Family::Wilson => "wilson",
            Family::Racah => "racah",
            Family::AskeyWilson => "askey-wilson",
            Family::QRacah => "q-racah",
        }
    }

    pub fn is_q_type(self) -> bool {
        matches!(self, Family::GBasicHyp | Family::AskeyWilson | Family::QRacah)
    }

    /// Fixed number of alphas, if the family has one.
    pub fn alpha_arity(self) -> Option<usize> {
        match self {
            Family::GHyp | Family::GBasicHyp => None,
            Family::Jacobi => Some(2),
            _ => Some(4),
        }
    }

    /// Families with a zero system and coefficient dynamics.
    pub fn has_dynamics(self) -> bool {
        self != Family::Jacobi
    }

    /// Variable in which the built polynomial and its zeros are expressed.
    pub fn variable(self) -> &'static str {
        match self {
            Family::Jacobi | Family::AskeyWilson => "x",
            Family::Racah => "lambda",
            _ => "z",
        }
    }

    /// Dynamics of the form `ċ = i (...)`.
    pub fn imaginary_time(self) -> bool {
        matches!(self, Family::Wilson | Family::Racah)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let key: Vec<u8> =
            s.bytes().filter(|b| !matches!(b, b'-' | b'_' | b' ')).map(|b| b.to_ascii_lowercase()).collect();
        Ok(match key.as_slice() {
            b"ghyp" | b"hyp" | b"hypergeometric" => Family::GHyp,
            b"gbasic" | b"gbasichyp" | b"basic" | b"qhyp" => Family::GBasicHyp,
            b"jacobi" => Family::Jacobi,
            b"wilson" => Family::Wilson,
            b"racah" => Family::Racah,
            b"askeywilson" | b"aw" => Family::AskeyWilson,
            b"qracah" => Family::QRacah,
            _ => return Err(Error::InvalidParameters("unknown family")),
        })
    }
}

/// One polynomial instance: family, degree, parameters and optional base.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub alphas: Vec<C64>,
    pub betas: Vec<C64>,
    pub q: Option<C64>,
}

impl FamilySpec {
    /// Validated constructor.
    pub fn new(family: Family, n: usize, alphas: Vec<C64>, betas: Vec<C64>, q: Option<C64>) -> Result<Self> {
        let spec = FamilySpec { family, n, alphas, betas, q };
        spec.validate()?;
        Ok(spec)
    }

    pub fn ghyp(n: usize, alphas: &[C64], betas: &[C64]) -> Result<Self> {
        Self::new(Family::GHyp, n, alphas.to_vec(), betas.to_vec(), None)
    }

    pub fn gbasic(n: usize, alphas: &[C64], betas: &[C64], q: C64) -> Result<Self> {
        Self::new(Family::GBasicHyp, n, alphas.to_vec(), betas.to_vec(), Some(q))
    }

    pub fn jacobi(n: usize, alpha: C64, beta: C64) -> Result<Self> {
        Self::new(Family::Jacobi, n, alloc::vec![alpha, beta], Vec::new(), None)
    }

    pub fn wilson(n: usize, abcd: [C64; 4]) -> Result<Self> {
        Self::new(Family::Wilson, n, abcd.to_vec(), Vec::new(), None)
    }

    pub fn racah(n: usize, params: [C64; 4]) -> Result<Self> {
        Self::new(Family::Racah, n, params.to_vec(), Vec::new(), None)
    }

    pub fn askey_wilson(n: usize, abcd: [C64; 4], q: C64) -> Result<Self> {
        Self::new(Family::AskeyWilson, n, abcd.to_vec(), Vec::new(), Some(q))
    }

    pub fn q_racah(n: usize, params: [C64; 4], q: C64) -> Result<Self> {
        Self::new(Family::QRacah, n, params.to_vec(), Vec::new(), Some(q))
    }

    /// Base q, or 1 for the classical families.
    pub fn base(&self) -> C64 {
        self.q.unwrap_or(C64::new(1.0, 0.0))
    }

    /// `θ = (γ+δ+1)/2` of the Racah family.
    pub fn theta(&self) -> C64 {
        (self.alphas[2] + self.alphas[3] + 1.0) / 2.0
    }

    /// Same parameters, different degree. Used for lower-degree basis
    /// polynomials; validity for smaller degrees follows from validity here.
    pub fn with_degree(&self, n: usize) -> FamilySpec {
        FamilySpec { n, ..self.clone() }
    }

    /// Checks the structural rules and that no series denominator vanishes.
    pub fn validate(&self) -> Result<()> {
        let fam = self.family;
        if self.n == 0 {
            return Err(Error::InvalidParameters("degree N must be at least 1"));
        }
        if !self.alphas.iter().chain(&self.betas).all(|z| is_finite(*z)) {
            return Err(Error::InvalidParameters("parameters must be finite"));
        }
        match (fam.is_q_type(), self.q) {
            (true, None) => return Err(Error::InvalidParameters("q-family requires a base q")),
            (false, Some(_)) => return Err(Error::InvalidParameters("base q given for a classical family")),
            (true, Some(q)) => {
                if !is_finite(q) || q.norm() == 0.0 {
                    return Err(Error::InvalidParameters("base q must be finite and nonzero"));
                }
                if (q - 1.0).norm() <= tol::Q_NEAR_ONE {
                    return Err(Error::InvalidParameters("base q too close to 1"));
                }
            }
            (false, None) => {}
        }
        if let Some(k) = fam.alpha_arity() {
            if self.alphas.len() != k || !self.betas.is_empty() {
                return Err(Error::InvalidParameters("wrong number of parameters for family"));
            }
        }
        let n = self.n;
        let a = &self.alphas;
        let q = self.base();
        // (x)_n denominators: x + j for j < n.
        let rising_ok = |x: C64| (0..n).all(|j| (x + j as f64).norm() > tol::PARAM_INTEGER);
        // (x;q)_n denominators: 1 - x q^j for j < n.
        let q_ok =
            |x: C64| (0..n).all(|j| (C64::new(1.0, 0.0) - x * Field::powi(q, j as i32)).norm() > tol::PARAM_Q_FACTOR);
        let qq_ok = || q_ok(q);
        let bad = |why| Err(Error::InvalidParameters(why));
        match fam {
            Family::GHyp => {
                if !self.betas.iter().all(|&b| rising_ok(b)) {
                    return bad("beta is a non-positive integer greater than -N");
                }
            }
            Family::GBasicHyp => {
                if !qq_ok() {
                    return bad("(q;q)_m vanishes");
                }
                if !self.betas.iter().all(|&b| q_ok(b)) {
                    return bad("(beta;q)_m vanishes");
                }
            }
            Family::Jacobi => {
                if !rising_ok(a[0] + 1.0) {
                    return bad("(alpha+1)_m vanishes");
                }
            }
            Family::Wilson => {
                if !(rising_ok(a[0] + a[1]) && rising_ok(a[0] + a[2]) && rising_ok(a[0] + a[3])) {
                    return bad("(a+b)_k, (a+c)_k or (a+d)_k vanishes");
                }
            }
            Family::Racah => {
                if !(rising_ok(a[0] + 1.0) && rising_ok(a[1] + a[3] + 1.0) && rising_ok(a[2] + 1.0)) {
                    return bad("(alpha+1)_n, (beta+delta+1)_n or (gamma+1)_n vanishes");
                }
            }
            Family::AskeyWilson => {
                if a[0].norm() <= tol::PARAM_Q_FACTOR {
                    return bad("a must be nonzero");
                }
                if !qq_ok() {
                    return bad("(q;q)_m vanishes");
                }
                if !(q_ok(a[0] * a[1]) && q_ok(a[0] * a[2]) && q_ok(a[0] * a[3])) {
                    return bad("(ab;q)_m, (ac;q)_m or (ad;q)_m vanishes");
                }
            }
            Family::QRacah => {
                if (a[2] * a[3]).norm() <= tol::PARAM_Q_FACTOR {
                    return bad("gamma*delta must be nonzero");
                }
                if !qq_ok() {
                    return bad("(q;q)_m vanishes");
                }
                if !(q_ok(a[0] * q) && q_ok(a[1] * a[3] * q) && q_ok(a[2] * q)) {
                    return bad("(alpha q;q)_m, (beta delta q;q)_m or (gamma q;q)_m vanishes");
                }
            }
        }
        Ok(())
    }
}
