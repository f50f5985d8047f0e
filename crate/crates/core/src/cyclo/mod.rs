//! Exact arithmetic in `Z[ζ_d]`, matrices over it, and the representations
//! `σ_d` attached to cyclic quotients.

mod cycint;
mod matrix;
mod sigma;

pub use cycint::{cyclotomic_polynomial, euler_phi, CycInt};
pub use matrix::{commutator, verify_steinberg, CycMatrix};
pub use sigma::{determinant_exponent, sigma_d_matrix, CyclicSetting};
