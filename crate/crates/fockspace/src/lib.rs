//! The paraboson Fock space L(p) of osp(1|2n) realized on creation words.
//!
//! Vectors are combinations of words `B_{i_1}^+ ⋯ B_{i_k}^+ v_0`. The gl(n)
//! generators and the annihilators act by rewriting, and equality in L(p) is
//! decided by the invariant form: a vector is zero exactly when it pairs to
//! zero with every word of its weight.

mod context;
mod space;
mod vector;
mod weight;

pub use context::{CanonicalForm, FockContext, DEFAULT_DEGREE_BOUND};
pub use space::{distinct_permutations, WeightSpace};
pub use vector::{content_of, int, FockVector, Word};
pub use weight::GlWeight;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("invalid context: n = {n}, p = {p} (need n >= 1, p >= 1)")]
    InvalidContext { n: usize, p: u32 },
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("letter {letter} outside 1..={n}")]
    LetterOutOfRange { letter: u8, n: usize },
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("form is indefinite on content {content:?}")]
    Indefinite { content: Word },
}

/// Creation (+) or annihilation (−).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}
