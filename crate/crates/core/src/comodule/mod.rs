//! Comodule algebras over a quasitriangular Hopf algebra: K-matrices, the end
//! space `E(H,B)`, the maps `θ_B`, `θ_{B-FdMod}` and the copairing `ω_B`, and
//! costable ideals.

mod algebra;
mod end_space;
mod kmatrix;
mod simplicity;

pub use algebra::{check_comodule_algebra, check_comodule_algebra_with, ComoduleAlgebra};
pub use kmatrix::{check_braided_module, check_k_matrix, check_k_matrix_with, module_braiding, module_braiding_with, z2_membership, KMatrix};
pub use end_space::{
    adjoint_module, compute_end_space, compute_end_space_with, dual_antipode, is_factorizable_comodule, omega_copairing,
    omega_is_invariant, theta_at_unit, theta_comodule, theta_module_category, weak_factorizability, weak_factorizability_with,
    EndSpace, WeakFactorizability,
};
pub use simplicity::{burnside_dim, costable_closure, costable_operators, h_simplicity, h_simplicity_with, Simplicity};
