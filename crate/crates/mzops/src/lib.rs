//! Extremal projector, the raising and lowering operators z_j^± and y_mj,
//! closed-form coefficients d_j^±(λ), c_j^±(λ)² and d(λ), the B_ℓ^± E^γ Ω_λ
//! expansions, GZ vectors and the transition to the PBW-type basis.
//!
//! Coefficients in h_i = E_ii − i + 1 are always evaluated on the weight of
//! the vector they act on, before the monomial to their left acts.

mod coeffs;
mod expansion;
mod gz;
mod heval;
mod projector;
mod raising;
mod transition;

pub use coeffs::{
    c_minus_squared, c_plus_squared, d_minus, d_plus, hw_chain_coefficient, parity, pochhammer,
};
pub use expansion::{
    creation_past_lowering, expand_b_on_egamma, expand_b_on_hw, lowering_past_index_chain,
    HwExpansion, HwTerm,
};
pub use gz::{gz_vector, hw_chain, y_lower, GzVector};
pub use heval::{apply_index_chain, h_values, is_gl_highest, is_highest_weight};
pub use projector::extremal_project;
pub use raising::{pb_minus, pb_plus, z_minus, z_pair_minus, z_pair_plus, z_plus};
pub use transition::{
    bracket_expansion, closed_form_expansion, closed_form_terms, gz_from_creation_polynomials,
    gz_omega_expansion, omega_bracket_terms, transition_matrix, ClosedFormTerm, TransitionBlock,
};

use bases::BasesError;
use combinatorics::CombError;
use fockspace::FockError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MzError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Bases(#[from] BasesError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error("extremal projector is singular: factor p_{i}{j} at order {k} on weight {weight}")]
    Singular {
        i: usize,
        j: usize,
        k: usize,
        weight: String,
    },
    #[error("zero denominator {factor} on weight {weight}")]
    ZeroDenominator { factor: String, weight: String },
    #[error("input is not a gl({0}) highest weight vector")]
    NotHighestWeight(usize),
    #[error("input vector is not homogeneous")]
    NotHomogeneous,
    #[error("tableau is not semistandard:\n{0}")]
    NotSemistandard(String),
    #[error("shape {shape} has more than p = {p} rows")]
    ShapeExceedsOrder { shape: String, p: u32 },
    #[error("shape {shape} has more than n = {n} rows")]
    ShapeTooLong { shape: String, n: usize },
    #[error("vector for {0} is not in the span of the PBW-type basis")]
    NotInSpan(String),
    #[error("transition matrix is not triangular: {0}")]
    NotTriangular(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, MzError>;
