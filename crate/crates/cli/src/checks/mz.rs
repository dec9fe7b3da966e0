use bases::{apply_e_gamma, omega_lambda};
use combinatorics::{partitions_up_to, ExponentMatrix, Partition};
use exactlinalg::{inverse, nullspace, rat_int, RatMatrix, Rational};
use fockspace::{FockContext, FockVector, Sign};
use mzops::{
    d_minus, d_plus, expand_b_on_egamma, expand_b_on_hw, extremal_project, is_highest_weight,
    pb_minus, pb_plus, z_minus, z_plus, MzError,
};

use super::Check;
use crate::words::contents;
use crate::Result;

fn admissible(ctx: &FockContext, max_size: usize) -> Vec<Partition> {
    partitions_up_to(max_size, ctx.n())
        .into_iter()
        .filter(|l| l.length() <= ctx.p() as usize)
        .collect()
}

fn omega_shifted(ctx: &FockContext, lam: &Partition, i: usize, delta: i64) -> Result<FockVector> {
    Ok(match lam.shifted(i, delta) {
        Some(s) => omega_lambda(ctx, &s)?,
        None => FockVector::zero(),
    })
}

/// d_j^±(λ) = ⟨Ω_{λ±ε_j}, B_j^±Ω_λ⟩ / ⟨Ω_{λ±ε_j}, Ω_{λ±ε_j}⟩ for |λ| ≤ deg,
/// and pB_j^±Ω_λ = d_j^±(λ)Ω_{λ±ε_j} (zero when the shifted Ω vanishes).
pub fn d_coefficients(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "d coefficients",
        "d_j^±(λ) = ⟨Ω_{λ±ε_j}, B_j^±Ω_λ⟩/⟨Ω_{λ±ε_j}, Ω_{λ±ε_j}⟩ and pB_j^±Ω_λ = d_j^±(λ)Ω_{λ±ε_j}",
    );
    for lam in admissible(ctx, deg) {
        let omega = omega_lambda(ctx, &lam)?;
        for j in 1..=ctx.n() {
            for (sign, delta) in [(Sign::Plus, 1), (Sign::Minus, -1)] {
                let (d, projected) = match sign {
                    Sign::Plus => (d_plus(ctx, &lam, j), pb_plus(ctx, j, &omega)?),
                    Sign::Minus => (d_minus(ctx, &lam, j), pb_minus(ctx, j, &omega)?),
                };
                let label = || format!("λ = {lam}, j = {j}, sign {}", sign.symbol());
                let target = omega_shifted(ctx, &lam, j, delta)?;
                if ctx.is_zero(&target)? {
                    check.record(ctx.is_zero(&projected)?, label);
                    continue;
                }
                let moved = ctx.apply_b(sign, j, &omega);
                let oracle = ctx.inner_product(&target, &moved)? / ctx.norm_squared(&target)?;
                let ok = d == oracle && ctx.equals(&projected, &target.scaled(&d))?;
                check.record(ok, || {
                    format!("{}: closed form {d}, projection {oracle}", label())
                });
            }
        }
    }
    Ok(check)
}

/// Matrix, in pivot coordinates, of the Gram-orthogonal projection onto the
/// common kernel of the raising operators E_ij (i < j) on one weight space.
fn orthogonal_projection(ctx: &FockContext, content: &[u8]) -> Result<RatMatrix> {
    let space = ctx.space(content)?;
    let basis: Vec<FockVector> = space
        .pivot_words()
        .into_iter()
        .map(FockVector::word)
        .collect();
    let r = basis.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for j in 2..=ctx.n() {
        for i in 1..j {
            let Some(pos) = content.iter().position(|&a| a as usize == j) else {
                continue;
            };
            let mut target = content.to_vec();
            target[pos] = i as u8;
            target.sort_unstable();
            let tspace = ctx.space(&target)?;
            let images: Vec<Vec<Rational>> = basis
                .iter()
                .map(|b| tspace.coords(&ctx.gl(i, j, b)))
                .collect();
            for t in 0..tspace.rank() {
                rows.push(images.iter().map(|col| col[t].clone()).collect());
            }
        }
    }
    let raising = if rows.is_empty() {
        RatMatrix::zeros(0, r)
    } else {
        RatMatrix::from_rows(rows)?
    };
    let kernel = nullspace(&raising);
    if kernel.is_empty() {
        return Ok(RatMatrix::zeros(r, r));
    }
    let k = RatMatrix::from_columns(&kernel, r)?;
    let kt_g = k.transpose().mul(&space.pivot_block())?;
    let small = inverse(&kt_g.mul(&k)?)?.expect("the form is definite on L(p)");
    Ok(k.mul(&small)?.mul(&kt_g)?)
}

/// On every weight space of degree ≤ deg where the projector has no zero
/// denominator: it equals the orthogonal projection onto singular vectors,
/// it is idempotent, and it is self-adjoint. Returns the three checks in
/// that order.
pub fn projector_checks(ctx: &FockContext, deg: usize) -> Result<Vec<Check>> {
    let mut projection = Check::new(
        "projector is orthogonal projection",
        "p = Gram-orthogonal projection onto {v : E_ij v = 0, i < j}",
    );
    let mut idempotent = Check::new("projector idempotent", "p² = p");
    let mut adjoint = Check::new("projector self-adjoint", "⟨p u, w⟩ = ⟨u, p w⟩");
    let mut singular = 0usize;
    for d in 0..=deg {
        for content in contents(ctx.n(), d) {
            let space = ctx.space(&content)?;
            let r = space.rank();
            if r == 0 {
                continue;
            }
            let basis: Vec<FockVector> = space
                .pivot_words()
                .into_iter()
                .map(FockVector::word)
                .collect();
            let images: std::result::Result<Vec<FockVector>, MzError> =
                basis.iter().map(|b| extremal_project(ctx, b)).collect();
            let images = match images {
                Err(MzError::Singular { .. }) => {
                    singular += 1;
                    continue;
                }
                other => other?,
            };
            let cols: Vec<Vec<Rational>> = images.iter().map(|v| space.coords(v)).collect();
            let matrix = RatMatrix::from_columns(&cols, r)?;
            let label = || format!("content {content:?}");
            projection.record(matrix == orthogonal_projection(ctx, &content)?, label);
            adjoint.record(space.pivot_block().mul(&matrix)?.is_symmetric(), label);
            let mut stable = true;
            for v in &images {
                stable &= ctx.equals(&extremal_project(ctx, v)?, v)? && is_highest_weight(ctx, v)?;
            }
            idempotent.record(stable, label);
        }
    }
    projection.note(format!("{singular} weight spaces skipped as singular"));
    Ok(vec![projection, idempotent, adjoint])
}

/// B_j^±Ω_λ expanded over E^γΩ_{λ±ε_i} equals the direct action, both as
/// E^γ applied to Ω and rewritten through Ω_{D(γ)}.
pub fn hw_expansions(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "B on highest weight vectors",
        "B_j^±Ω_λ = Σ_i Σ_I d_i^±(λ)·(rational factor)·E^{e_I}Ω_{λ±ε_i}",
    );
    for lam in admissible(ctx, deg) {
        let omega = omega_lambda(ctx, &lam)?;
        for j in 1..=ctx.n() {
            for sign in [Sign::Plus, Sign::Minus] {
                let e = expand_b_on_hw(ctx, sign, j, &lam)?;
                let direct = ctx.apply_b(sign, j, &omega);
                let ok = ctx.equals(&e.to_vector(ctx)?, &direct)?
                    && ctx.equals(&e.to_omega_vector(ctx)?, &direct)?;
                check.record(ok, || format!("λ = {lam}, j = {j}, sign {}", sign.symbol()));
            }
        }
    }
    Ok(check)
}

/// Strictly lower n×n matrices with entries in {0, 1}.
fn small_lower_matrices(n: usize) -> Vec<ExponentMatrix> {
    let slots: Vec<(usize, usize)> = (2..=n).flat_map(|k| (1..k).map(move |j| (k, j))).collect();
    (0..1usize << slots.len())
        .map(|mask| {
            let mut g = ExponentMatrix::zero(n);
            for (b, &(k, j)) in slots.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.set(k, j, 1);
                }
            }
            g
        })
        .collect()
}

/// B_ℓ^±E^γΩ_λ expanded over E^{γ̄}Ω_{λ±ε_i} equals the direct action, for
/// strictly lower γ with entries in {0, 1}.
pub fn egamma_expansions(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "B on lowered highest weight vectors",
        "B_ℓ^±E^γΩ_λ = Σ c·E^{γ̄}Ω_{λ±ε_i} with γ̄ completed to the new shape",
    );
    let n = ctx.n();
    for lam in admissible(ctx, deg) {
        let omega = omega_lambda(ctx, &lam)?;
        for gamma in small_lower_matrices(n) {
            let start = apply_e_gamma(ctx, &gamma, &omega);
            for ell in 1..=n {
                for sign in [Sign::Plus, Sign::Minus] {
                    let e = expand_b_on_egamma(ctx, sign, ell, &gamma, &lam)?;
                    let direct = ctx.apply_b(sign, ell, &start);
                    let ok = ctx.equals(&e.to_vector(ctx)?, &direct)?
                        && ctx.equals(&e.to_omega_vector(ctx)?, &direct)?;
                    check.record(ok, || {
                        format!("λ = {lam}, γ = {gamma}, ℓ = {ell}, sign {}", sign.symbol())
                    });
                }
            }
        }
    }
    Ok(check)
}

/// z_j^+Ω_λ = d_j^+(λ)∏_{l<j}(λ_l−λ_j−l+j)Ω_{λ+ε_j} and
/// z_j^−Ω_λ = d_j^−(λ)∏_{l>j}(λ_j−λ_l−j+l)Ω_{λ−ε_j}, zero when λ−ε_j is
/// not a partition.
pub fn raising_scalars(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "z operator scalars",
        "z_j^+Ω_λ = d_j^+(λ)∏_{l<j}(λ_l−λ_j−l+j)Ω_{λ+ε_j}, z_j^−Ω_λ = d_j^−(λ)∏_{l>j}(λ_j−λ_l−j+l)Ω_{λ−ε_j}",
    );
    let n = ctx.n();
    for lam in admissible(ctx, deg) {
        let omega = omega_lambda(ctx, &lam)?;
        let part = |k: usize| lam.part(k) as i64;
        for j in 1..=n {
            let ji = j as i64;
            let gaps = (1..j).fold(rat_int(1), |acc, l| {
                acc * rat_int(part(l) - part(j) - l as i64 + ji)
            });
            let expected = omega_shifted(ctx, &lam, j, 1)?.scaled(&(d_plus(ctx, &lam, j) * gaps));
            let up = z_plus(ctx, j, &omega)?;
            check.record(ctx.equals(&up, &expected)?, || {
                format!("λ = {lam}, z_{j}^+")
            });

            let gaps = (j + 1..=n).fold(rat_int(1), |acc, l| {
                acc * rat_int(part(j) - part(l) - ji + l as i64)
            });
            let expected = omega_shifted(ctx, &lam, j, -1)?.scaled(&(d_minus(ctx, &lam, j) * gaps));
            let down = z_minus(ctx, j, &omega)?;
            check.record(ctx.equals(&down, &expected)?, || {
                format!("λ = {lam}, z_{j}^−")
            });
        }
    }
    Ok(check)
}

/// The closed-form pB_j^±Ω_λ equals the projector applied to B_j^±Ω_λ on
/// every nonsingular weight.
pub fn projected_generators(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "projected generators",
        "pB_j^± v = p(B_j^± v) on highest weight vectors",
    );
    for lam in admissible(ctx, deg) {
        let omega = omega_lambda(ctx, &lam)?;
        for j in 1..=ctx.n() {
            for sign in [Sign::Plus, Sign::Minus] {
                let projected = match extremal_project(ctx, &ctx.apply_b(sign, j, &omega)) {
                    Err(MzError::Singular { .. }) => continue,
                    other => other?,
                };
                let closed = match sign {
                    Sign::Plus => pb_plus(ctx, j, &omega)?,
                    Sign::Minus => pb_minus(ctx, j, &omega)?,
                };
                check.record(ctx.equals(&closed, &projected)?, || {
                    format!("λ = {lam}, j = {j}, sign {}", sign.symbol())
                });
            }
        }
    }
    Ok(check)
}
