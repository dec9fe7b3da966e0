use itertools::Itertools;

use crate::{factorial, CombError, Partition, Result, YoungTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// S_λ, acting within rows.
    Row,
    /// S_λ', acting within columns.
    Column,
}

/// One permutation per row (or column), each a 0-based image list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungSubgroupElement {
    pub kind: GroupKind,
    pub perms: Vec<Vec<usize>>,
}

impl YoungSubgroupElement {
    pub fn identity(kind: GroupKind, block_sizes: &[usize]) -> Self {
        YoungSubgroupElement {
            kind,
            perms: block_sizes.iter().map(|&k| (0..k).collect()).collect(),
        }
    }

    pub fn sign(&self) -> i64 {
        self.perms.iter().map(|p| perm_sign(p)).product()
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_blocks(perms: &[Vec<usize>], sizes: &[usize]) -> Result<()> {
    if perms.len() != sizes.len() {
        return Err(CombError::PermutationMismatch(format!(
            "{} blocks for {} rows/columns",
            perms.len(),
            sizes.len()
        )));
    }
    for (p, &k) in perms.iter().zip(sizes) {
        let mut sorted = p.clone();
        sorted.sort_unstable();
        if sorted != (0..k).collect::<Vec<_>>() {
            return Err(CombError::PermutationMismatch(format!(
                "{p:?} is not a permutation of 0..{k}"
            )));
        }
    }
    Ok(())
}

/// A^τ(k,l) = A(k, τ_k(l)).
pub fn row_permute(a: &YoungTableau, tau: &YoungSubgroupElement) -> Result<YoungTableau> {
    let shape = a.shape();
    if tau.kind != GroupKind::Row {
        return Err(CombError::PermutationMismatch(
            "expected a row permutation".into(),
        ));
    }
    check_blocks(&tau.perms, shape.parts())?;
    let rows = a
        .rows()
        .iter()
        .zip(&tau.perms)
        .map(|(row, p)| p.iter().map(|&l| row[l]).collect())
        .collect();
    YoungTableau::new(rows)
}

/// A_σ(k,l) = A(σ_l(k), l).
pub fn column_permute(a: &YoungTableau, sigma: &YoungSubgroupElement) -> Result<YoungTableau> {
    let conj = a.shape().conjugate();
    if sigma.kind != GroupKind::Column {
        return Err(CombError::PermutationMismatch(
            "expected a column permutation".into(),
        ));
    }
    check_blocks(&sigma.perms, conj.parts())?;
    let mut rows: Vec<Vec<usize>> = a.rows().to_vec();
    for (l, p) in sigma.perms.iter().enumerate() {
        for (k, &src) in p.iter().enumerate() {
            rows[k][l] = a.rows()[src][l];
        }
    }
    YoungTableau::new(rows)
}

fn product_group(
    kind: GroupKind,
    sizes: &[usize],
    bound: u128,
) -> Result<Vec<YoungSubgroupElement>> {
    let order: u128 = sizes.iter().map(|&k| factorial(k)).product();
    if order > bound {
        return Err(CombError::GroupTooLarge { order, bound });
    }
    if sizes.is_empty() {
        return Ok(vec![YoungSubgroupElement::identity(kind, &[])]);
    }
    let blocks: Vec<Vec<Vec<usize>>> = sizes
        .iter()
        .map(|&k| (0..k).permutations(k).collect())
        .collect();
    Ok(blocks
        .into_iter()
        .multi_cartesian_product()
        .map(|perms| YoungSubgroupElement { kind, perms })
        .collect())
}

/// Every element of S_λ, refusing groups larger than `bound`.
pub fn row_group(shape: &Partition, bound: u128) -> Result<Vec<YoungSubgroupElement>> {
    product_group(GroupKind::Row, shape.parts(), bound)
}

/// Every element of S_λ', refusing groups larger than `bound`.
pub fn column_group(shape: &Partition, bound: u128) -> Result<Vec<YoungSubgroupElement>> {
    product_group(GroupKind::Column, shape.conjugate().parts(), bound)
}
