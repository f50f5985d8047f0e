//! The relation module `R̄ = R/[R, R]` of a marked epimorphism `π : F_n → G`
//! and the integral representations of the stabilizer of `π`.

mod isotypic;
mod lattice;
mod rep;

pub use isotypic::{
    coordinate_rows, expected_dimension, fox_kernel_dimension, idempotent_operator,
    isotypic_component, restrict_to_basis, IsotypicComponent,
};
pub use lattice::{schreier_basis, RelationLattice};
pub use rep::{
    eta_matrix, fox_jacobian, g_action_matrix, is_unimodular, member_gamma_g_pi, member_gamma_r,
    quotient_matrix, rho_matrix, verify_eta, RepMatrix,
};
