use combinatorics::{
    column_group, column_permute, exponent_matrix, row_group, row_permute, tableau_from_matrix,
    ExponentMatrix, Partition, YoungTableau,
};
use exactlinalg::{rat_int, BigInt, Rational};
use fockspace::{distinct_permutations, FockContext, FockVector};
use itertools::Itertools;
use num_traits::One;

use crate::{BasesError, Result};

/// Default cap on the order of a Young subgroup that may be enumerated.
pub const GROUP_BOUND: u128 = 3_628_800;

fn check_fits(ctx: &FockContext, a: &YoungTableau) -> Result<()> {
    exponent_matrix(a, ctx.n())?;
    Ok(())
}

fn word_of(letters: &[usize]) -> Vec<u8> {
    letters.iter().map(|&x| x as u8).collect()
}

/// B_A^+ v_0: the columns of A read top to bottom, column 1 outermost.
pub fn creation_vector(ctx: &FockContext, a: &YoungTableau) -> Result<FockVector> {
    check_fits(ctx, a)?;
    Ok(FockVector::word(word_of(&a.column_word())))
}

/// ω_A as a product of column multibrackets, the first column outermost.
pub fn omega(ctx: &FockContext, a: &YoungTableau) -> Result<FockVector> {
    check_fits(ctx, a)?;
    let mut v = FockVector::vacuum();
    for col in a.columns().iter().rev() {
        v = ctx.multibracket(col, &v);
    }
    Ok(v)
}

/// ω_A = Σ_{σ ∈ S_λ'} sgn(σ) B_{A_σ}^+ v_0, summed over the whole column group.
pub fn omega_by_column_group(
    ctx: &FockContext,
    a: &YoungTableau,
    bound: u128,
) -> Result<FockVector> {
    check_fits(ctx, a)?;
    let mut v = FockVector::zero();
    for sigma in column_group(&a.shape(), bound)? {
        let permuted = column_permute(a, &sigma)?;
        v.add_term(word_of(&permuted.column_word()), rat_int(sigma.sign()));
    }
    Ok(v)
}

/// Ω_A = Σ_{τ ∈ S_λ} ω_{A^τ}, collapsed onto distinct row arrangements of
/// D(γ_A), each weighted by the size of its stabilizer.
pub fn big_omega(ctx: &FockContext, a: &YoungTableau) -> Result<FockVector> {
    let gamma = exponent_matrix(a, ctx.n())?;
    big_omega_of_matrix(ctx, &gamma)
}

/// The distinct row arrangements of D(γ), each standing for a coset of the
/// row group, together with the common stabilizer order.
pub fn omega_arrangements(gamma: &ExponentMatrix) -> Result<(BigInt, Vec<YoungTableau>)> {
    let d = tableau_from_matrix(gamma)?;
    if d.rows().is_empty() {
        return Ok((BigInt::one(), vec![d]));
    }
    let mut stabilizer = BigInt::one();
    for row in d.rows() {
        for (_, run) in &row.iter().chunk_by(|&&x| x) {
            stabilizer *= (1..=run.count() as u64).product::<u64>();
        }
    }
    let arrangements: Vec<Vec<Vec<u8>>> = d
        .rows()
        .iter()
        .map(|r| distinct_permutations(&word_of(r)))
        .collect();
    let mut out = Vec::new();
    for choice in arrangements
        .iter()
        .map(|a| a.iter())
        .multi_cartesian_product()
    {
        let rows = choice
            .iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        out.push(YoungTableau::new(rows)?);
    }
    Ok((stabilizer, out))
}

/// Ω_{D(γ)}.
pub fn big_omega_of_matrix(ctx: &FockContext, gamma: &ExponentMatrix) -> Result<FockVector> {
    let (stabilizer, arrangements) = omega_arrangements(gamma)?;
    let mut out = FockVector::zero();
    for t in &arrangements {
        out.add_scaled(&Rational::one(), &omega(ctx, t)?);
    }
    Ok(out.scaled(&Rational::from_integer(stabilizer)))
}

/// Ω_A summed over every element of the row group S_λ.
pub fn big_omega_by_row_group(
    ctx: &FockContext,
    a: &YoungTableau,
    bound: u128,
) -> Result<FockVector> {
    check_fits(ctx, a)?;
    let mut out = FockVector::zero();
    for tau in row_group(&a.shape(), bound)? {
        out.add_scaled(&Rational::one(), &omega(ctx, &row_permute(a, &tau)?)?);
    }
    Ok(out)
}

/// λ_1! ⋯ λ_n!.
pub fn shape_factorial(shape: &Partition) -> BigInt {
    shape
        .parts()
        .iter()
        .map(|&x| BigInt::from((1..=x as u64).product::<u64>()))
        .product()
}

/// Ω_λ, computed from the all-k-in-row-k tableau. Vanishes in L(p) when
/// ℓ(λ) > p; the returned vector is then a radical element, not structurally
/// empty.
pub fn omega_lambda(ctx: &FockContext, shape: &Partition) -> Result<FockVector> {
    if shape.length() > ctx.n() {
        return Err(BasesError::ShapeTooLong {
            length: shape.length(),
            n: ctx.n(),
        });
    }
    big_omega(ctx, &YoungTableau::highest(shape))
}

/// The gl(n)-highest weight vector of weight λ + p/2: Ω_λ when ℓ(λ) ≤ p and
/// the zero vector otherwise.
pub fn highest_weight_vector(ctx: &FockContext, shape: &Partition) -> Result<FockVector> {
    if shape.length() > ctx.p() as usize {
        if shape.length() > ctx.n() {
            return Err(BasesError::ShapeTooLong {
                length: shape.length(),
                n: ctx.n(),
            });
        }
        return Ok(FockVector::zero());
    }
    omega_lambda(ctx, shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[usize]]) -> YoungTableau {
        YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_box_and_column() {
        let ctx = FockContext::new(3, 2).unwrap();
        assert_eq!(
            omega(&ctx, &tab(&[&[1]])).unwrap(),
            FockVector::word(vec![1])
        );
        assert_eq!(
            omega(&ctx, &tab(&[&[1], &[2]])).unwrap(),
            FockVector::from_terms([(vec![1, 2], rat_int(1)), (vec![2, 1], rat_int(-1))])
        );
        assert_eq!(
            omega(&ctx, &tab(&[&[1, 1]])).unwrap(),
            FockVector::word(vec![1, 1])
        );
    }

    #[test]
    fn empty_tableau_is_vacuum() {
        let ctx = FockContext::new(2, 1).unwrap();
        assert_eq!(
            big_omega(&ctx, &YoungTableau::empty()).unwrap(),
            FockVector::vacuum()
        );
    }

    #[test]
    fn omega_lambda_is_factorial_multiple() {
        let ctx = FockContext::new(3, 2).unwrap();
        let shape = Partition::new(vec![2, 1]).unwrap();
        let big = omega_lambda(&ctx, &shape).unwrap();
        let small = omega(&ctx, &YoungTableau::highest(&shape)).unwrap();
        assert_eq!(big, small.scaled(&rat_int(2)));
    }

    #[test]
    fn long_shapes_are_rejected() {
        let ctx = FockContext::new(2, 3).unwrap();
        let shape = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(matches!(
            omega_lambda(&ctx, &shape),
            Err(BasesError::ShapeTooLong { .. })
        ));
    }
}
