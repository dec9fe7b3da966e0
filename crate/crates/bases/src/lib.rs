//! The vectors B_A^+ v_0, ω_A and Ω_A of L(p), the highest weight vectors
//! Ω_λ, the lowering monomials E^γ, and the PBW-type basis
//! E^{γ_A}Ω_{λ_A} = (λ_A!/diag(γ_A)!)Ω_A.

mod basis;
mod egamma;
mod gl_action;
mod omega;

pub use basis::{
    basis_tableaux, creation_dependency, pbw_basis, pbw_weight_ranks, weight_ranks, BasisElement,
    CreationDependency, WeightRank,
};
pub use egamma::{apply_e_gamma, pbw_identity_sides, pbw_scalar, pbw_vector};
pub use gl_action::{verify_gl_action_on_big_omega, IdentityReport};
pub use omega::{
    big_omega, big_omega_by_row_group, big_omega_of_matrix, creation_vector, highest_weight_vector,
    omega, omega_arrangements, omega_by_column_group, omega_lambda, shape_factorial, GROUP_BOUND,
};

use combinatorics::CombError;
use fockspace::FockError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasesError {
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("shape of length {length} does not fit n = {n}")]
    ShapeTooLong { length: usize, n: usize },
    #[error("exponent matrix {0} is not lower triangular")]
    NotLowerTriangular(String),
    #[error("basis identity fails for tableau\n{0}")]
    IdentityFailure(String),
}

pub type Result<T> = std::result::Result<T, BasesError>;
