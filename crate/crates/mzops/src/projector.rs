use exactlinalg::{rat, rat_int};
use fockspace::{FockContext, FockVector};

use crate::coeffs::pochhammer;
use crate::heval::weight_label;
use crate::{MzError, Result};

/// The extremal projector p = p_12 p_13 p_23 p_14 ⋯ p_{n−1,n} (rightmost
/// factor first) on a homogeneous vector, with
/// p_ij = Σ_k (−1)^k/k! E_ji^k E_ij^k / (h_i − h_j + 1)_k.
///
/// Each series stops once E_ij^k v is the zero word combination. A vanishing
/// Pochhammer denominator is an error unless its term is zero in L(p).
pub fn extremal_project(ctx: &FockContext, v: &FockVector) -> Result<FockVector> {
    if v.is_empty() {
        return Ok(FockVector::zero());
    }
    if ctx.weight_of(v).is_none() {
        return Err(MzError::NotHomogeneous);
    }
    let n = ctx.n();
    let order: Vec<(usize, usize)> = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    let mut v = v.clone();
    for &(i, j) in order.iter().rev() {
        if v.is_empty() {
            break;
        }
        let w = ctx.weight_of(&v).ok_or(MzError::NotHomogeneous)?;
        let x = w.mu(i) - w.mu(j) + rat_int(j as i64 - i as i64 + 1);
        let mut out = v.clone();
        let mut raised = ctx.gl(i, j, &v);
        let mut k = 1usize;
        let mut factorial = 1i64;
        while !raised.is_empty() {
            factorial *= k as i64;
            let term = ctx.gl_power(j, i, k, &raised);
            let den = pochhammer(&x, k);
            if den == rat_int(0) {
                if !ctx.is_zero(&term)? {
                    return Err(MzError::Singular {
                        i,
                        j,
                        k,
                        weight: weight_label(ctx, &v),
                    });
                }
            } else {
                let sign = if k.is_multiple_of(2) { 1 } else { -1 };
                out.add_scaled(&(rat(sign, factorial) / den), &term);
            }
            k += 1;
            raised = ctx.gl(i, j, &raised);
        }
        v = out;
    }
    Ok(v)
}
