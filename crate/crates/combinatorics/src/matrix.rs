use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{CombError, Partition, Result, YoungTableau};

/// An n×n integer matrix indexed from 1. Entries are signed so that
/// intermediate γ-arithmetic (γ − e_J and the like) can be represented;
/// [`ExponentMatrix::is_nonnegative`] checks the invariant where it matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct ExponentMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl ExponentMatrix {
    pub fn zero(n: usize) -> Self {
        ExponentMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// γ_λ, the diagonal matrix with entries λ_i.
    pub fn from_partition(shape: &Partition, n: usize) -> Self {
        let mut g = ExponentMatrix::zero(n);
        for i in 1..=n {
            g.set(i, i, shape.part(i) as i64);
        }
        g
    }

    /// The unit matrix e_ij.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut g = ExponentMatrix::zero(n);
        g.set(i, j, 1);
        g
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CombError::Parse("exponent matrix must be square".into()));
        }
        Ok(ExponentMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, delta: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] += delta;
    }

    pub fn with_added(&self, i: usize, j: usize, delta: i64) -> Self {
        let mut g = self.clone();
        g.add(i, j, delta);
        g
    }

    pub fn plus(&self, other: &ExponentMatrix) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        ExponentMatrix { n: self.n, entries }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Row-major entries; the γ reading order used for sorting bases.
    pub fn reading_order(&self) -> &[i64] {
        &self.entries
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (1..=self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (1..=self.n).all(|i| (i + 1..=self.n).all(|j| self.get(i, j) == 0))
    }

    /// The shape λ with λ_j = Σ_i γ_ij, if it is a partition.
    pub fn shape(&self) -> Result<Partition> {
        Partition::from_signed(&self.column_sums())
    }

    /// Copy with the diagonal zeroed: the exponents that define E^γ.
    pub fn strictly_lower(&self) -> Self {
        let mut g = self.clone();
        for i in 1..=self.n {
            for j in i..=self.n {
                g.set(i, j, 0);
            }
        }
        g
    }

    /// The factors of E^γ in application-independent written order:
    /// k = 2..n left to right, and within k the pairs (k,1), …, (k,k−1).
    pub fn lower_factors(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for k in 2..=self.n {
            for j in 1..k {
                let e = self.get(k, j);
                if e > 0 {
                    out.push((k, j, e as u32));
                }
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<i64>>> for ExponentMatrix {
    type Error = CombError;
    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        ExponentMatrix::from_rows(rows)
    }
}

impl From<ExponentMatrix> for Vec<Vec<i64>> {
    fn from(g: ExponentMatrix) -> Self {
        g.rows()
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// D(γ): row j holds γ_ij copies of i, sorted.
pub fn tableau_from_matrix(g: &ExponentMatrix) -> Result<YoungTableau> {
    let n = g.n();
    for i in 1..=n {
        for j in 1..=n {
            if g.get(i, j) < 0 {
                return Err(CombError::NegativeEntry(i, j));
            }
        }
    }
    g.shape()?;
    let rows = (1..=n)
        .map(|j| {
            (1..=n)
                .flat_map(|i| std::iter::repeat_n(i, g.get(i, j) as usize))
                .collect()
        })
        .collect();
    YoungTableau::new(rows)
}

/// Whether D(γ) is semistandard, decided from γ alone: γ lower triangular
/// with partition column sums and Σ_{k=i}^{j} γ_ki ≥ Σ_{k=i+1}^{j+1} γ_{k,i+1}
/// for 1 ≤ i ≤ j ≤ n−1.
pub fn is_ssyt_matrix(g: &ExponentMatrix) -> bool {
    let n = g.n();
    if !g.is_nonnegative() || !g.is_lower_triangular() || g.shape().is_err() {
        return false;
    }
    for i in 1..n {
        for j in i..n {
            let left: i64 = (i..=j).map(|k| g.get(k, i)).sum();
            let right: i64 = (i + 1..=j + 1).map(|k| g.get(k, i + 1)).sum();
            if left < right {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent_matrix;

    #[test]
    fn d_of_gamma_example() {
        let g =
            ExponentMatrix::from_rows(vec![vec![1, 0, 1], vec![1, 1, 1], vec![2, 2, 0]]).unwrap();
        let d = tableau_from_matrix(&g).unwrap();
        assert_eq!(d.rows(), &[vec![1, 2, 3, 3], vec![2, 3, 3], vec![1, 2]]);
        assert_eq!(exponent_matrix(&d, 3).unwrap(), g);
    }

    #[test]
    fn d_of_diagonal_is_highest_filling() {
        let lam = Partition::new(vec![4, 2, 1]).unwrap();
        let d = tableau_from_matrix(&ExponentMatrix::from_partition(&lam, 3)).unwrap();
        assert_eq!(d, YoungTableau::highest(&lam));
        assert_eq!(
            tableau_from_matrix(&ExponentMatrix::zero(3)).unwrap(),
            YoungTableau::empty()
        );
    }

    #[test]
    fn rejects_non_partition_column_sums() {
        let g = ExponentMatrix::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(tableau_from_matrix(&g).is_err());
    }

    #[test]
    fn ssyt_matrix_examples() {
        let lam = Partition::new(vec![4, 2]).unwrap();
        assert!(is_ssyt_matrix(&ExponentMatrix::from_partition(&lam, 3)));
        let g =
            ExponentMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 2, 0], vec![2, 0, 0]]).unwrap();
        assert!(is_ssyt_matrix(&g));
    }

    #[test]
    fn lower_factor_order() {
        let g =
            ExponentMatrix::from_rows(vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(g.lower_factors(), vec![(2, 1, 1), (3, 1, 1), (3, 2, 1)]);
    }
}
