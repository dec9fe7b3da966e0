//! Exact rational scalars and dense matrices: rank, span solving, inversion
//! and a positive-semidefiniteness test with a negative-norm witness.

mod elim;
mod matrix;
mod psd;
mod rational;

pub use elim::{determinant, inverse, nullspace, pivot_columns, rank, solve_in_span, solve_unique};
pub use matrix::RatMatrix;
pub use psd::{psd_check, witness_norm, PsdReport};
pub use rational::{fmt_rational, parse_rational, rat, rat_int, rational_serde, Rational};

pub use num_bigint::BigInt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}
