use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{CombError, ExponentMatrix, Partition, Result};

/// A filling of a Young diagram, stored as ragged rows. No ordering condition
/// is imposed; see [`YoungTableau::is_semistandard`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for YoungTableau {
    type Error = CombError;
    fn try_from(j: TableauJson) -> Result<Self> {
        let t = YoungTableau::new(j.rows)?;
        if t.shape().parts() != Partition::new(j.shape)?.parts() {
            return Err(CombError::BadShape(t.shape().parts().to_vec()));
        }
        Ok(t)
    }
}

impl From<YoungTableau> for TableauJson {
    fn from(t: YoungTableau) -> Self {
        TableauJson {
            shape: t.shape().parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl YoungTableau {
    /// Rows must have non-increasing lengths; empty trailing rows are dropped.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombError::BadShape(lens));
        }
        if let Some(&e) = rows.iter().flatten().find(|&&e| e == 0) {
            return Err(CombError::EntryOutOfRange { entry: e, n: 0 });
        }
        Ok(YoungTableau { rows })
    }

    pub fn empty() -> Self {
        YoungTableau { rows: Vec::new() }
    }

    /// The tableau with every entry of row k equal to k.
    pub fn highest(shape: &Partition) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &len)| vec![k + 1; len])
            .collect();
        YoungTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows are non-increasing")
    }

    /// Entry A(k,l), 1-based.
    pub fn entry(&self, k: usize, l: usize) -> usize {
        self.rows[k - 1][l - 1]
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Columns read top to bottom, leftmost column first.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|l| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > l)
                    .map(|r| r[l])
                    .collect()
            })
            .collect()
    }

    /// Concatenation of the columns; this is the creation word of B_A^+ v_0.
    pub fn column_word(&self) -> Vec<usize> {
        self.columns().into_iter().flatten().collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(pair[0].iter())
                .all(|(below, above)| above < below)
        });
        rows_ok && cols_ok
    }

    /// Weight μ_A: number of entries equal to each of 1..=n.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &e in self.rows.iter().flatten() {
            w[e - 1] += 1;
        }
        w
    }

    /// Replace the entry at (k,l) (1-based).
    pub fn with_entry(&self, k: usize, l: usize, value: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[k - 1][l - 1] = value;
        YoungTableau { rows }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|e| CombError::Parse(e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        YoungTableau::new(rows)
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// γ_A: entry (i,j) counts the i's in row j.
pub fn exponent_matrix(a: &YoungTableau, n: usize) -> Result<ExponentMatrix> {
    let mut g = ExponentMatrix::zero(n);
    for (j, row) in a.rows().iter().enumerate() {
        if j >= n {
            return Err(CombError::BadShape(a.shape().parts().to_vec()));
        }
        for &e in row {
            if e == 0 || e > n {
                return Err(CombError::EntryOutOfRange { entry: e, n });
            }
            g.add(e, j + 1, 1);
        }
    }
    Ok(g)
}

/// All semistandard tableaux of shape λ with entries in 1..=n, sorted
/// lexicographically by reading word.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<YoungTableau> {
    if shape.length() > n {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut rows, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    pos: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<YoungTableau>,
) {
    if pos == cells.len() {
        out.push(YoungTableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[pos];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    // Rows below still need room for strictly larger entries.
    let depth_below = rows.len() - r - 1;
    let below = rows[r + 1..]
        .iter()
        .take_while(|row| row.len() > c)
        .count()
        .min(depth_below);
    let hi = n.saturating_sub(below);
    for v in lo..=hi {
        rows[r][c] = v;
        fill(cells, pos + 1, n, rows, out);
    }
    rows[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> YoungTableau {
        YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ssyt_counts() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_ssyt(&p(&[1]), 3).len(), 3);
        assert_eq!(enumerate_ssyt(&p(&[4, 2]), 3).len(), 27);
        assert!(enumerate_ssyt(&p(&[1, 1, 1, 1]), 3).is_empty());
        assert_eq!(enumerate_ssyt(&p(&[]), 3), vec![YoungTableau::empty()]);
    }

    #[test]
    fn ssyt_order_is_lex_on_reading_word() {
        let list = enumerate_ssyt(&Partition::new(vec![3, 2]).unwrap(), 3);
        let words: Vec<_> = list.iter().map(|a| a.reading_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn exponent_matrix_example() {
        let a = t(&[&[1, 1, 3, 3], &[2, 2]]);
        let g = exponent_matrix(&a, 3).unwrap();
        assert_eq!(g.rows(), vec![vec![2, 0, 0], vec![0, 2, 0], vec![2, 0, 0]]);
        assert_eq!(
            exponent_matrix(&YoungTableau::empty(), 3).unwrap(),
            ExponentMatrix::zero(3)
        );
    }

    #[test]
    fn exponent_matrix_non_semistandard() {
        let a = t(&[&[1, 2, 3, 3], &[2, 3], &[1, 2]]);
        assert!(!a.is_semistandard());
        let g = exponent_matrix(&a, 3).unwrap();
        assert_eq!(g.rows(), vec![vec![1, 0, 1], vec![1, 1, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn text_round_trip() {
        let a = t(&[&[1, 1, 3, 3], &[2, 2]]);
        assert_eq!(a.to_text(), "1 1 3 3\n2 2");
        assert_eq!(YoungTableau::from_text(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn column_word_reads_columns() {
        let a = t(&[&[1, 1, 3, 3], &[2, 2]]);
        assert_eq!(a.column_word(), vec![1, 2, 1, 2, 3, 3]);
    }
}
