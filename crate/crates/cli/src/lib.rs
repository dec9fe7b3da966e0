//! Batch front end: basis listings, transition matrices and the verification
//! suites, rendered as JSON, CSV, LaTeX or plain text.

pub mod checks;
pub mod commands;
pub mod config;
pub mod criteria;
pub mod render;
pub mod suites;
pub mod words;

pub use config::{Format, JobConfig, SuiteName};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Usage(String),
    #[error(transparent)]
    Mz(#[from] mzops::MzError),
    #[error(transparent)]
    Bases(#[from] bases::BasesError),
    #[error(transparent)]
    Fock(#[from] fockspace::FockError),
    #[error(transparent)]
    Comb(#[from] combinatorics::CombError),
    #[error(transparent)]
    Linalg(#[from] exactlinalg::LinalgError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
