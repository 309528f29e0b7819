//! Scalar abstraction shared by the plain, double-double and dual-number paths.

use core::ops::{Add, Div, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

/// Complex field operations needed by the polynomial builders and the
/// zero-dynamics right-hand sides.
///
/// Implemented by [`C64`], by [`crate::dd::Cdd`] (about 32 significant digits)
/// and by [`crate::dual::Dual`] (forward-mode derivative).
pub trait Field:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_c64(z: C64) -> Self;

    /// Leading double-precision value.
    fn value(self) -> C64;

    /// Principal square root.
    fn sqrt(self) -> Self;

    fn from_f64(x: f64) -> Self {
        Self::from_c64(C64::new(x, 0.0))
    }

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn recip(self) -> Self {
        Self::one() / self
    }

    fn norm(self) -> f64 {
        self.value().norm()
    }

    /// Integer power by repeated squaring; negative exponents invert.
    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn scale(self, x: f64) -> Self {
        self * Self::from_f64(x)
    }
}

impl Field for C64 {
    fn from_c64(z: C64) -> Self {
        z
    }

    fn value(self) -> C64 {
        self
    }

    fn sqrt(self) -> Self {
        C64::sqrt(self)
    }
}

pub const I: C64 = C64 { re: 0.0, im: 1.0 };

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Total order on complex numbers: real part first, then imaginary part.
pub fn lex_cmp(a: &C64, b: &C64) -> core::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}
