use std::fmt;

use exactlinalg::{rat, Rational};
use serde::{Deserialize, Serialize};

/// gl(n)-weight stored as doubled components 2μ_i, so the p/2 offset of the
/// vacuum stays integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlWeight {
    doubled: Vec<i64>,
}

impl GlWeight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Self { doubled }
    }

    /// Weight of the vacuum, (p/2, …, p/2).
    pub fn vacuum(n: usize, p: u32) -> Self {
        Self {
            doubled: vec![p as i64; n],
        }
    }

    /// Weight of any word with the given letters.
    pub fn of_word(n: usize, p: u32, word: &[u8]) -> Self {
        let mut w = Self::vacuum(n, p);
        for &l in word {
            w.doubled[l as usize - 1] += 2;
        }
        w
    }

    /// Weight (p/2 + λ_1, …, p/2 + λ_n) of Ω_λ.
    pub fn highest(n: usize, p: u32, parts: &[i64]) -> Self {
        let mut w = Self::vacuum(n, p);
        for (k, &x) in parts.iter().enumerate().take(n) {
            w.doubled[k] += 2 * x;
        }
        w
    }

    pub fn n(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// μ_i, 1-based.
    pub fn mu(&self, i: usize) -> Rational {
        rat(self.doubled[i - 1], 2)
    }

    /// h_i = μ_i − i + 1, 1-based.
    pub fn h(&self, i: usize) -> Rational {
        rat(self.doubled[i - 1] - 2 * (i as i64) + 2, 2)
    }

    /// Shift by ±ε_i.
    pub fn shifted(&self, i: usize, delta: i64) -> Self {
        let mut d = self.doubled.clone();
        d[i - 1] += 2 * delta;
        Self { doubled: d }
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.n()).map(|i| self.mu(i).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
