use combinatorics::{
    enumerate_index_tuples, exponent_matrix, ExponentMatrix, Partition, YoungTableau,
};
use exactlinalg::{rat_int, rational_serde, Rational};
use fockspace::{FockContext, FockVector};
use serde::Serialize;

use crate::heval::{apply_index_chain, h_values, require_highest};
use crate::raising::z_plus_unchecked;
use crate::{MzError, Result};

/// y_mj v = E_mj (h_j − h_{j+1}) ⋯ (h_j − h_{m−1}) v
///        + Σ_{i=j+1}^{m−1} Σ_{I ∈ I_ji} ∏_{l ∈ {j+1..m−1} ∖ I}(h_j − h_l) · E^{e_I} E_{m i} v
/// for a gl(m−1) highest weight vector v and m > j.
pub fn y_lower(ctx: &FockContext, m: usize, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, m - 1, v)?;
    y_lower_unchecked(ctx, m, j, v)
}

pub(crate) fn y_lower_unchecked(
    ctx: &FockContext,
    m: usize,
    j: usize,
    v: &FockVector,
) -> Result<FockVector> {
    assert!(j < m && m <= ctx.n(), "y_{m}{j} needs 1 ≤ j < m ≤ n");
    let Some(h) = h_values(ctx, v)? else {
        return Ok(FockVector::zero());
    };
    let factor = |excluded: &[usize]| {
        (j + 1..m)
            .filter(|l| !excluded.contains(l))
            .fold(rat_int(1), |acc, l| acc * (&h[j - 1] - &h[l - 1]))
    };
    let mut out = ctx.gl(m, j, v).scaled(&factor(&[]));
    for i in j + 1..m {
        let lowered = ctx.gl(m, i, v);
        if lowered.is_empty() {
            continue;
        }
        for tuple in enumerate_index_tuples(j, i) {
            let c = factor(tuple.items());
            if c != rat_int(0) {
                out.add_scaled(&c, &apply_index_chain(ctx, &tuple, &lowered));
            }
        }
    }
    Ok(out)
}

/// (z_n^+)^{λ_n} ⋯ (z_1^+)^{λ_1} v_0, which equals d(λ) Ω_λ.
pub fn hw_chain(ctx: &FockContext, lambda: &Partition) -> Result<FockVector> {
    if lambda.length() > ctx.n() {
        return Err(MzError::ShapeTooLong {
            shape: lambda.to_string(),
            n: ctx.n(),
        });
    }
    let mut v = FockVector::vacuum();
    for j in 1..=ctx.n() {
        for _ in 0..lambda.part(j) {
            v = z_plus_unchecked(ctx, j, &v)?;
        }
    }
    Ok(v)
}

/// A GZ basis vector v_A with its squared norm; the normalized vector is
/// v_A / √norm2.
#[derive(Debug, Clone, Serialize)]
pub struct GzVector {
    pub tableau: YoungTableau,
    pub gamma: ExponentMatrix,
    pub lambda: Partition,
    pub vector: FockVector,
    #[serde(with = "rational_serde")]
    pub norm2: Rational,
}

pub(crate) fn check_tableau(ctx: &FockContext, a: &YoungTableau) -> Result<ExponentMatrix> {
    if !a.is_semistandard() {
        return Err(MzError::NotSemistandard(a.to_text()));
    }
    let gamma = exponent_matrix(a, ctx.n())?;
    let shape = a.shape();
    if shape.length() > ctx.p() as usize {
        return Err(MzError::ShapeExceedsOrder {
            shape: shape.to_string(),
            p: ctx.p(),
        });
    }
    Ok(gamma)
}

/// y^γ applied to a highest weight vector: the factors y_{k1}^{γ_k1} ⋯
/// y_{k,k−1}^{γ_{k,k−1}} for k = 2..n, written left to right, rightmost first.
pub(crate) fn apply_y_gamma(
    ctx: &FockContext,
    gamma: &ExponentMatrix,
    hw: &FockVector,
) -> Result<FockVector> {
    let mut v = hw.clone();
    for (k, j, e) in gamma.lower_factors().into_iter().rev() {
        for _ in 0..e {
            v = y_lower_unchecked(ctx, k, j, &v)?;
        }
    }
    Ok(v)
}

pub(crate) fn gz_vector_from_chain(
    ctx: &FockContext,
    a: &YoungTableau,
    hw: &FockVector,
) -> Result<GzVector> {
    let gamma = check_tableau(ctx, a)?;
    let vector = apply_y_gamma(ctx, &gamma, hw)?;
    Ok(GzVector {
        norm2: ctx.norm_squared(&vector)?,
        tableau: a.clone(),
        lambda: a.shape(),
        gamma,
        vector,
    })
}

/// v_A = y^{γ_A} (z_n^+)^{λ_n} ⋯ (z_1^+)^{λ_1} v_0 for semistandard A with
/// at most p rows.
pub fn gz_vector(ctx: &FockContext, a: &YoungTableau) -> Result<GzVector> {
    check_tableau(ctx, a)?;
    let hw = hw_chain(ctx, &a.shape())?;
    gz_vector_from_chain(ctx, a, &hw)
}
