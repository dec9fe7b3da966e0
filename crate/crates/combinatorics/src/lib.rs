//! Partitions, Young tableaux, exponent matrices, Young subgroups, index
//! tuples and Gel'fand-Zetlin patterns.
//!
//! Indices follow the mathematical convention: rows, columns, letters and
//! matrix positions are 1-based in every public function.

mod gz;
mod index;
mod matrix;
mod partition;
mod subgroup;
mod tableau;

pub use gz::{gz_pattern, GzPattern};
pub use index::{complement, enumerate_index_tuples, IndexTuple};
pub use matrix::{is_ssyt_matrix, tableau_from_matrix, ExponentMatrix};
pub use partition::{hook_content_count, partitions_of, partitions_up_to, Partition};
pub use subgroup::{
    column_group, column_permute, row_group, row_permute, GroupKind, YoungSubgroupElement,
};
pub use tableau::{enumerate_ssyt, exponent_matrix, YoungTableau};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<i64>),
    #[error("rows {0:?} do not form a Young diagram")]
    BadShape(Vec<usize>),
    #[error("entry {entry} outside 1..={n}")]
    EntryOutOfRange { entry: usize, n: usize },
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("matrix has a negative entry at ({0},{1})")]
    NegativeEntry(usize, usize),
    #[error("permutation does not match shape: {0}")]
    PermutationMismatch(String),
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CombError>;

pub(crate) fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}
