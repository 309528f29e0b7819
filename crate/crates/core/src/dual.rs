//! Forward-mode dual numbers over the complex field.

use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::{Field, C64};

/// `v + d·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual {
    pub v: C64,
    pub d: C64,
}

impl Dual {
    pub fn new(v: C64, d: C64) -> Self {
        Dual { v, d }
    }

    /// Independent variable: derivative seed 1.
    pub fn var(v: C64) -> Self {
        Dual { v, d: C64::new(1.0, 0.0) }
    }

    pub fn constant(v: C64) -> Self {
        Dual { v, d: C64::new(0.0, 0.0) }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, b: Dual) -> Dual {
        Dual { v: self.v + b.v, d: self.d + b.d }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, b: Dual) -> Dual {
        Dual { v: self.v - b.v, d: self.d - b.d }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual { v: -self.v, d: -self.d }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, b: Dual) -> Dual {
        Dual { v: self.v * b.v, d: self.d * b.v + self.v * b.d }
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, b: Dual) -> Dual {
        let v = self.v / b.v;
        Dual { v, d: (self.d - v * b.d) / b.v }
    }
}

impl Field for Dual {
    fn from_c64(z: C64) -> Self {
        Dual::constant(z)
    }

    fn value(self) -> C64 {
        self.v
    }

    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        Dual { v: s, d: self.d / (s * 2.0) }
    }
}

/// Derivative of a scalar function at `x`.
pub fn derivative(f: impl Fn(Dual) -> Dual, x: C64) -> C64 {
    f(Dual::var(x)).d
}
