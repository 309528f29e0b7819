//! Zeros of hypergeometric and Askey-scheme polynomials, isospectral matrices
//! built from those zeros, and the solvable zero dynamics behind them.
//!
//! Everything here is pure arithmetic on `alloc` containers; IO lives in the
//! companion `isospectra` crate.
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dd;
pub mod dual;
pub mod dynamics;
pub mod error;
pub mod families;
pub mod iso;
pub mod numeric;
pub mod scalar;
pub mod tol;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};

pub use numeric::{ComplexPolynomial, EigenMultiset, Matrix, ZeroSet};
pub use scalar::{Field, C64};
