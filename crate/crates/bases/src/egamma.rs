use combinatorics::{exponent_matrix, ExponentMatrix, Partition, YoungTableau};
use exactlinalg::{BigInt, Rational};
use fockspace::{FockContext, FockVector};

use crate::omega::{big_omega_of_matrix, omega_lambda, shape_factorial};
use crate::{BasesError, Result};

/// E^γ v for the strictly lower part of γ: the factors E_{k1}^{γ_k1} ⋯
/// E_{k,k−1}^{γ_{k,k−1}} for k = 2..n are written left to right, so the
/// rightmost factor acts first. Diagonal entries are ignored.
pub fn apply_e_gamma(ctx: &FockContext, gamma: &ExponentMatrix, v: &FockVector) -> FockVector {
    gamma
        .lower_factors()
        .into_iter()
        .rev()
        .fold(v.clone(), |acc, (k, j, e)| {
            ctx.gl_power(k, j, e as usize, &acc)
        })
}

/// E^{γ_A} Ω_{λ_A}.
pub fn pbw_vector(ctx: &FockContext, a: &YoungTableau) -> Result<FockVector> {
    let gamma = exponent_matrix(a, ctx.n())?;
    Ok(apply_e_gamma(ctx, &gamma, &omega_lambda(ctx, &a.shape())?))
}

/// λ!/diag(γ)!.
pub fn pbw_scalar(shape: &Partition, gamma: &ExponentMatrix) -> Rational {
    let diag: BigInt = gamma
        .diagonal()
        .iter()
        .map(|&x| BigInt::from((1..=x as u64).product::<u64>()))
        .product();
    Rational::new(shape_factorial(shape), diag)
}

/// Both sides of E^γ Ω_λ = (λ!/diag(γ)!) Ω_{D(γ)} for lower triangular γ
/// whose column sums form λ.
pub fn pbw_identity_sides(
    ctx: &FockContext,
    gamma: &ExponentMatrix,
) -> Result<(FockVector, FockVector)> {
    if !gamma.is_lower_triangular() {
        return Err(BasesError::NotLowerTriangular(gamma.to_string()));
    }
    let shape = gamma.shape()?;
    let lhs = apply_e_gamma(ctx, gamma, &omega_lambda(ctx, &shape)?);
    let rhs = big_omega_of_matrix(ctx, gamma)?.scaled(&pbw_scalar(&shape, gamma));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactlinalg::rat_int;

    #[test]
    fn zero_gamma_is_identity() {
        let ctx = FockContext::new(3, 2).unwrap();
        let v = FockVector::word(vec![1, 2]);
        assert_eq!(apply_e_gamma(&ctx, &ExponentMatrix::zero(3), &v), v);
    }

    #[test]
    fn single_lowering_of_one_box() {
        let ctx = FockContext::new(2, 1).unwrap();
        let omega1 = omega_lambda(&ctx, &Partition::new(vec![1]).unwrap()).unwrap();
        let g = ExponentMatrix::unit(2, 2, 1);
        assert_eq!(apply_e_gamma(&ctx, &g, &omega1), FockVector::word(vec![2]));
    }

    #[test]
    fn scalar_for_worked_block() {
        let g =
            ExponentMatrix::from_rows(vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        let shape = Partition::new(vec![4, 2]).unwrap();
        assert_eq!(pbw_scalar(&shape, &g), rat_int(24));
    }
}
