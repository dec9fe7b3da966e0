use bases::{
    basis_tableaux, big_omega, big_omega_by_row_group, omega, omega_by_column_group, omega_lambda,
    pbw_identity_sides, weight_ranks, GROUP_BOUND,
};
use combinatorics::{
    enumerate_ssyt, exponent_matrix, hook_content_count, partitions_of, partitions_up_to,
    YoungTableau,
};
use fockspace::{FockContext, FockVector, Word};
use mzops::is_highest_weight;

use super::Check;
use crate::words::contents;
use crate::Result;

fn content_of_tableau(a: &YoungTableau, n: usize) -> Word {
    a.weight(n)
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u8 + 1, m))
        .collect()
}

/// Σ_{λ ⊢ d, ℓ(λ) ≤ p} #SSYT(λ, n).
pub fn ssyt_count(ctx: &FockContext, d: usize) -> u128 {
    partitions_of(d, ctx.n())
        .iter()
        .filter(|l| l.length() <= ctx.p() as usize)
        .map(|l| hook_content_count(l, ctx.n()))
        .sum()
}

/// E^{γ_A}Ω_{λ_A} = (λ_A!/diag(γ_A)!)Ω_A for every semistandard A with at
/// most p rows and size ≤ deg, and the rank of these vectors in each weight
/// space equals both their number and the dimension.
pub fn pbw_basis_checks(ctx: &FockContext, deg: usize) -> Result<(Check, Check)> {
    let mut identity = Check::new("pbw identity", "E^{γ_A}Ω_{λ_A} = (λ_A!/diag(γ_A)!)Ω_A");
    let mut rank = Check::new(
        "pbw basis rank",
        "{E^{γ_A}Ω_{λ_A} : ℓ(λ_A) ≤ p} has full rank, equal to the SSYT count, in every weight space",
    );
    for d in 0..=deg {
        let mut vectors: Vec<(Word, FockVector)> = Vec::new();
        for a in basis_tableaux(ctx, d) {
            let (lhs, rhs) = pbw_identity_sides(ctx, &exponent_matrix(&a, ctx.n())?)?;
            identity.record(ctx.equals(&lhs, &rhs)?, || format!("tableau {a}"));
            vectors.push((content_of_tableau(&a, ctx.n()), lhs));
        }
        let count = vectors.len() as u128;
        rank.record(count == ssyt_count(ctx, d), || {
            format!("degree {d}: {count} basis tableaux")
        });
        for wr in weight_ranks(ctx, &vectors)? {
            rank.record(wr.rank == wr.vectors && wr.rank == wr.dimension, || {
                format!(
                    "content {:?}: {} vectors, rank {}, dimension {}",
                    wr.content, wr.vectors, wr.rank, wr.dimension
                )
            });
        }
    }
    Ok((identity, rank))
}

/// Ω_λ is a nonzero highest weight vector when ℓ(λ) ≤ p and zero in L(p)
/// otherwise.
pub fn highest_weight_vectors(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "highest weight vectors",
        "Ω_λ is highest weight and nonzero iff ℓ(λ) ≤ p, zero otherwise",
    );
    for lam in partitions_up_to(deg, ctx.n()) {
        let v = omega_lambda(ctx, &lam)?;
        let zero = ctx.is_zero(&v)?;
        let ok = if lam.length() <= ctx.p() as usize {
            !zero && is_highest_weight(ctx, &v)?
        } else {
            zero
        };
        check.record(ok, || format!("λ = {lam}, zero = {zero}"));
    }
    Ok(check)
}

/// Per degree, Σ over weights of the Gram rank equals the number of
/// semistandard tableaux with at most p rows.
pub fn dimension_count(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "dimension count",
        "Σ_μ rank G_μ = Σ_{λ ⊢ d, ℓ(λ) ≤ p} #SSYT(λ, n) in every degree d",
    );
    for d in 0..=deg {
        let mut total = 0u128;
        for content in contents(ctx.n(), d) {
            total += ctx.space(&content)?.rank() as u128;
        }
        let expected = ssyt_count(ctx, d);
        check.record(total == expected, || {
            format!("degree {d}: rank sum {total}, SSYT count {expected}")
        });
        check.note(format!("degree {d}: dimension {total}"));
    }
    Ok(check)
}

/// Ω_A through row arrangements equals the sum over the full row group, and
/// ω_A through brackets equals the signed sum over the column group.
pub fn omega_routes(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "omega routes",
        "Ω_A = Σ_{τ ∈ S_λ} ω_{A^τ} and ω_A = Σ_{σ ∈ S_λ'} sgn(σ) B_{A_σ}^+ v_0",
    );
    for lam in partitions_up_to(deg, ctx.n()) {
        for a in enumerate_ssyt(&lam, ctx.n()) {
            let row = big_omega(ctx, &a)? == big_omega_by_row_group(ctx, &a, GROUP_BOUND)?;
            check.record(row, || format!("row group, tableau {a}"));
            let col = omega(ctx, &a)? == omega_by_column_group(ctx, &a, GROUP_BOUND)?;
            check.record(col, || format!("column group, tableau {a}"));
        }
    }
    Ok(check)
}
