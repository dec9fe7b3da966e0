use combinatorics::{complement, enumerate_index_tuples};
use exactlinalg::{rat_int, Rational};
use fockspace::{FockContext, FockVector, Sign};

use crate::heval::{apply_index_chain, h_values, nonzero, require_highest};
use crate::projector::extremal_project;
use crate::Result;

/// pB_j^+ v = Σ_{i ≤ j} Σ_{I ∈ I_ij} (−1)^{|I|−1} ∏_{l ∈ I^∁}(h_l − h_j − 1)
/// / ∏_{l=i}^{j−1}(h_l − h_j) · E^{e_I} B_i^+ v on a highest weight vector.
pub fn pb_plus(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    pb_plus_unchecked(ctx, j, v)
}

/// pB_j^− v = Σ_{i ≥ j} Σ_{I ∈ I_ji} 1/∏_{l ∈ I, l ≠ j}(h_j − h_l) · E^{e_I} B_i^− v
/// on a highest weight vector.
pub fn pb_minus(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    pb_minus_unchecked(ctx, j, v)
}

pub(crate) fn pb_plus_unchecked(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    let Some(h) = h_values(ctx, v)? else {
        return Ok(FockVector::zero());
    };
    let hj = &h[j - 1];
    let mut out = FockVector::zero();
    for i in 1..=j {
        let created = ctx.create(i, v);
        let mut den = rat_int(1);
        for l in i..j {
            den *= &h[l - 1] - hj;
        }
        let den = nonzero(
            den,
            || format!("∏_{{l={i}}}^{{{}}}(h_l − h_{j})", j - 1),
            ctx,
            v,
        )?;
        for tuple in enumerate_index_tuples(i, j) {
            let mut num = rat_int(if tuple.len() % 2 == 1 { 1 } else { -1 });
            for l in complement(&tuple) {
                num *= &h[l - 1] - hj - rat_int(1);
            }
            if num == rat_int(0) {
                continue;
            }
            out.add_scaled(&(num / &den), &apply_index_chain(ctx, &tuple, &created));
        }
    }
    Ok(out)
}

pub(crate) fn pb_minus_unchecked(
    ctx: &FockContext,
    j: usize,
    v: &FockVector,
) -> Result<FockVector> {
    let Some(h) = h_values(ctx, v)? else {
        return Ok(FockVector::zero());
    };
    let hj = &h[j - 1];
    let mut out = FockVector::zero();
    for i in j..=ctx.n() {
        let annihilated = ctx.annihilate(i, v);
        for tuple in enumerate_index_tuples(j, i) {
            let mut den = rat_int(1);
            for &l in tuple.items().iter().filter(|&&l| l != j) {
                den *= hj - &h[l - 1];
            }
            let den = nonzero(
                den,
                || format!("∏_{{l ∈ {:?}, l ≠ {j}}}(h_{j} − h_l)", tuple.items()),
                ctx,
                v,
            )?;
            out.add_scaled(
                &(rat_int(1) / den),
                &apply_index_chain(ctx, &tuple, &annihilated),
            );
        }
    }
    Ok(out)
}

fn right_factor(
    ctx: &FockContext,
    sign: Sign,
    j: usize,
    v: &FockVector,
) -> Result<Option<Rational>> {
    let Some(h) = h_values(ctx, v)? else {
        return Ok(None);
    };
    let hj = &h[j - 1];
    let f = match sign {
        Sign::Plus => (1..j).fold(rat_int(1), |acc, l| acc * (&h[l - 1] - hj)),
        Sign::Minus => (j + 1..=ctx.n()).fold(rat_int(1), |acc, l| acc * (hj - &h[l - 1])),
    };
    Ok(Some(f))
}

/// z_j^+ = pB_j^+ (h_1 − h_j) ⋯ (h_{j−1} − h_j) on a highest weight vector.
pub fn z_plus(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    z_plus_unchecked(ctx, j, v)
}

/// z_j^− = pB_j^− (h_j − h_{j+1}) ⋯ (h_j − h_n) on a highest weight vector.
pub fn z_minus(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    match right_factor(ctx, Sign::Minus, j, v)? {
        None => Ok(FockVector::zero()),
        Some(f) => Ok(pb_minus_unchecked(ctx, j, v)?.scaled(&f)),
    }
}

pub(crate) fn z_plus_unchecked(ctx: &FockContext, j: usize, v: &FockVector) -> Result<FockVector> {
    match right_factor(ctx, Sign::Plus, j, v)? {
        None => Ok(FockVector::zero()),
        Some(f) => Ok(pb_plus_unchecked(ctx, j, v)?.scaled(&f)),
    }
}

fn anticommutator(ctx: &FockContext, sign: Sign, i: usize, j: usize, v: &FockVector) -> FockVector {
    let a = ctx.apply_b(sign, i, &ctx.apply_b(sign, j, v));
    let b = ctx.apply_b(sign, j, &ctx.apply_b(sign, i, v));
    a.plus(&b)
}

/// p{B_i^+, B_j^+} v, evaluated through the extremal projector.
pub fn z_pair_plus(ctx: &FockContext, i: usize, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    extremal_project(ctx, &anticommutator(ctx, Sign::Plus, i, j, v))
}

/// p{B_i^−, B_j^−} v, evaluated through the extremal projector.
pub fn z_pair_minus(ctx: &FockContext, i: usize, j: usize, v: &FockVector) -> Result<FockVector> {
    require_highest(ctx, ctx.n(), v)?;
    extremal_project(ctx, &anticommutator(ctx, Sign::Minus, i, j, v))
}
