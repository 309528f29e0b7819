//! Complex polynomial algebra, special products, root finding and dense
//! eigenvalues.

mod eigen;
mod linalg;
mod matching;
mod pochhammer;
mod poly;
mod roots;

pub use eigen::{charpoly, matrix_eigenvalues, EigenMultiset};
pub use linalg::{Lu, Matrix};
pub use matching::{match_by_continuity, multiset_match};
pub use pochhammer::{
    aw_pochhammer_poly, elementary_coeffs_basic, elementary_coeffs_hyp, factorial, pochhammer, q_pochhammer,
    qracah_pochhammer_poly, racah_lambda_pochhammer_poly, wilson_pochhammer_poly,
};
pub use poly::{ComplexPolynomial, Poly};
pub use roots::{
    aberth, finish, min_separation, polish_roots, poly_roots, refine_close_pairs, scaled_residual, ZeroSet,
};
