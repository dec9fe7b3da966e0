use serde::Serialize;

use crate::{exponent_matrix, CombError, Result, YoungTableau};

/// A Gel'fand-Zetlin pattern m_ij, 1 ≤ i ≤ j ≤ n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GzPattern {
    n: usize,
    /// Row j (1-based) holds m_1j, …, m_jj.
    levels: Vec<Vec<i64>>,
}

impl GzPattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.levels[j - 1][i - 1]
    }

    /// m_{i,j+1} ≥ m_ij ≥ m_{i+1,j+1} everywhere, and all entries non-negative.
    pub fn is_between(&self) -> bool {
        (1..self.n).all(|j| {
            (1..=j).all(|i| {
                let m = self.get(i, j);
                m >= 0 && self.get(i, j + 1) >= m && m >= self.get(i + 1, j + 1)
            })
        })
    }
}

/// m_ij = Σ_{k=i}^{j} (γ_A)_{ki}: the number of entries ≤ j in row i.
pub fn gz_pattern(a: &YoungTableau, n: usize) -> Result<GzPattern> {
    if !a.is_semistandard() {
        return Err(CombError::NotSemistandard);
    }
    let g = exponent_matrix(a, n)?;
    let levels = (1..=n)
        .map(|j| {
            (1..=j)
                .map(|i| (i..=j).map(|k| g.get(k, i)).sum())
                .collect()
        })
        .collect();
    Ok(GzPattern { n, levels })
}
