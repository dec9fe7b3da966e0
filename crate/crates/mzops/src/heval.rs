use combinatorics::IndexTuple;
use exactlinalg::Rational;
use fockspace::{FockContext, FockVector};

use crate::{MzError, Result};

/// (h_1, …, h_n) on the weight of v, with h_i = μ_i − i + 1, or None for the
/// zero vector.
pub fn h_values(ctx: &FockContext, v: &FockVector) -> Result<Option<Vec<Rational>>> {
    if v.is_empty() {
        return Ok(None);
    }
    let w = ctx.weight_of(v).ok_or(MzError::NotHomogeneous)?;
    Ok(Some((1..=ctx.n()).map(|i| w.h(i)).collect()))
}

pub(crate) fn weight_label(ctx: &FockContext, v: &FockVector) -> String {
    ctx.weight_of(v)
        .map(|w| w.to_string())
        .unwrap_or_else(|| "0".into())
}

pub(crate) fn nonzero(
    factor: Rational,
    label: impl FnOnce() -> String,
    ctx: &FockContext,
    v: &FockVector,
) -> Result<Rational> {
    if factor == Rational::from_integer(0.into()) {
        return Err(MzError::ZeroDenominator {
            factor: label(),
            weight: weight_label(ctx, v),
        });
    }
    Ok(factor)
}

/// E^{e_I} v = E_{i_2 i_1} ⋯ E_{i_s i_{s−1}} v, rightmost factor first.
pub fn apply_index_chain(ctx: &FockContext, tuple: &IndexTuple, v: &FockVector) -> FockVector {
    tuple
        .lowering_pairs()
        .into_iter()
        .rev()
        .fold(v.clone(), |acc, (a, b)| ctx.gl(a, b, &acc))
}

/// Whether E_ij v = 0 in L(p) for all 1 ≤ i < j ≤ m.
pub fn is_gl_highest(ctx: &FockContext, m: usize, v: &FockVector) -> Result<bool> {
    for j in 2..=m.min(ctx.n()) {
        for i in 1..j {
            if !ctx.is_zero(&ctx.gl(i, j, v))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether v is a gl(n) highest weight vector (zero included).
pub fn is_highest_weight(ctx: &FockContext, v: &FockVector) -> Result<bool> {
    is_gl_highest(ctx, ctx.n(), v)
}

pub(crate) fn require_highest(ctx: &FockContext, m: usize, v: &FockVector) -> Result<()> {
    if is_gl_highest(ctx, m, v)? {
        Ok(())
    } else {
        Err(MzError::NotHighestWeight(m))
    }
}
