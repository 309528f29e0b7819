//! Isospectral matrices built from polynomial zeros, the f/g machinery behind
//! them, closed-form spectra and zero identities.

mod fg;
mod identity;
mod matrix;

pub use fg::{fg_jacobians, fg_tables, sigma, FgJacobian, FgTable};
pub use identity::identity_residual;
pub use matrix::{
    build_matrix, build_matrix_with, closed_form_spectrum, closed_form_spectrum_with, isospectral_matrix,
    isospectral_matrix_with, lifted_matrix, verify_matrix, IsospectralMatrix, MatrixOptions,
};
