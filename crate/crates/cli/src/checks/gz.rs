use bases::{apply_e_gamma, big_omega, omega_lambda, pbw_scalar};
use combinatorics::{
    enumerate_ssyt, exponent_matrix, partitions_of, tableau_from_matrix, Partition, YoungTableau,
};
use exactlinalg::{rat, rat_int, RatMatrix, Rational};
use fockspace::{FockContext, FockVector};
use mzops::{
    bracket_expansion, closed_form_expansion, closed_form_terms, gz_vector, transition_matrix,
    MzError,
};

use super::Check;
use crate::Result;

fn tab(rows: &[&[usize]]) -> YoungTableau {
    YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("fixed tableau")
}

fn rows_label(a: &YoungTableau) -> String {
    format!("{:?}", a.rows())
}

fn admissible_of(ctx: &FockContext, d: usize) -> Vec<Partition> {
    partitions_of(d, ctx.n())
        .into_iter()
        .filter(|l| l.length() <= ctx.p() as usize)
        .collect()
}

/// The three tableaux of shape (4,2) and weight (2,2,2) in basis order.
pub fn worked_tableaux() -> [YoungTableau; 3] {
    [
        tab(&[&[1, 1, 3, 3], &[2, 2]]),
        tab(&[&[1, 1, 2, 3], &[2, 3]]),
        tab(&[&[1, 1, 2, 2], &[3, 3]]),
    ]
}

/// Gelfand-Tsetlin vectors of one degree are pairwise orthogonal with
/// nonzero norm for every |λ| ≤ deg.
pub fn gz_orthogonal(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "gz orthogonality",
        "⟨v_A, v_B⟩ = 0 for A ≠ B and ⟨v_A, v_A⟩ ≠ 0",
    );
    for d in 0..=deg {
        let mut vectors = Vec::new();
        for lam in admissible_of(ctx, d) {
            for a in enumerate_ssyt(&lam, ctx.n()) {
                let v = gz_vector(ctx, &a)?;
                check.record(v.norm2 != rat_int(0), || {
                    format!("{} has zero norm", rows_label(&a))
                });
                vectors.push(v);
            }
        }
        for (k, a) in vectors.iter().enumerate() {
            for b in &vectors[k + 1..] {
                if a.tableau.weight(ctx.n()) != b.tableau.weight(ctx.n()) {
                    continue;
                }
                let ip = ctx.inner_product(&a.vector, &b.vector)?;
                check.record(ip == rat_int(0), || {
                    format!(
                        "⟨v_{}, v_{}⟩ = {ip}",
                        rows_label(&a.tableau),
                        rows_label(&b.tableau)
                    )
                });
            }
        }
    }
    Ok(check)
}

/// Every weight block of T is upper triangular with nonzero diagonal and
/// the stored inverse satisfies T·T⁻¹ = I.
pub fn transition_triangular(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "transition triangular",
        "T is upper triangular with nonzero diagonal in basis order and T·T⁻¹ = I",
    );
    for d in 1..=deg {
        for lam in admissible_of(ctx, d) {
            let blocks = match transition_matrix(ctx, &lam) {
                Err(MzError::NotTriangular(msg)) => {
                    check.record(false, || msg);
                    continue;
                }
                other => other?,
            };
            for block in blocks {
                let size = block.tableaux.len();
                let diagonal = (0..size).all(|r| *block.matrix.get(r, r) != rat_int(0));
                let ok = diagonal
                    && block.matrix.is_upper_triangular()
                    && block.matrix.mul(&block.inverse)? == RatMatrix::identity(size);
                check.record(ok, || format!("λ = {lam}, content {:?}", block.content));
            }
        }
    }
    Ok(check)
}

/// For n = 3 every row of T equals the closed-form sum, terms flagged as
/// vanishing are zero vectors, and the others are λ!/diag(γ)! multiples of
/// Ω_{D(γ)}.
pub fn closed_form_rows(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "closed form rows",
        "v_A = Σ_ℓ d(λ)·C(γ_31,ℓ)·(λ_1−λ_2+2−γ_31+γ_32+ℓ)_{γ_31−ℓ}·E^{γ(ℓ)}Ω_λ, zero for ℓ > λ_2−λ_3−γ_32",
    );
    if ctx.n() != 3 {
        check.note(format!("stated for n = 3, skipped for n = {}", ctx.n()));
        return Ok(check);
    }
    for d in 1..=deg {
        for lam in admissible_of(ctx, d) {
            let hw = omega_lambda(ctx, &lam)?;
            for block in transition_matrix(ctx, &lam)? {
                for (r, a) in block.tableaux.iter().enumerate() {
                    let closed = closed_form_expansion(ctx, a)?;
                    let mut row_ok = true;
                    for (k, b) in block.tableaux.iter().enumerate() {
                        let gb = exponent_matrix(b, 3)?;
                        let c = closed
                            .terms()
                            .iter()
                            .find(|t| t.gamma == gb)
                            .map(|t| t.coeff.clone())
                            .unwrap_or_else(|| rat_int(0));
                        row_ok &= &c == block.matrix.get(r, k);
                    }
                    check.record(row_ok, || format!("row {}", rows_label(a)));
                    for t in closed_form_terms(ctx, a)? {
                        let e = apply_e_gamma(ctx, &t.gamma, &hw);
                        let ok = if t.vanishes {
                            ctx.is_zero(&e)?
                        } else {
                            let scaled = big_omega(ctx, &tableau_from_matrix(&t.gamma)?)?
                                .scaled(&pbw_scalar(&lam, &t.gamma));
                            !ctx.is_zero(&e)? && ctx.equals(&e, &scaled)?
                        };
                        check.record(ok, || format!("term ℓ = {} of {}", t.ell, rows_label(a)));
                    }
                }
            }
        }
    }
    Ok(check)
}

/// The (4,2) block of weight (2,2,2) for n = 3.
pub fn golden_block(ctx: &FockContext) -> Result<Check> {
    let mut check = Check::new(
        "worked transition block",
        "λ = (4,2,0), weight (2,2,2): T rows (−1/2,−1/2,−1/12), (0,−1/3,−1/12), (0,0,−1/12); T⁻¹ rows (−2,3,−1), (0,−3,3), (0,0,−12)",
    );
    let lam = Partition::new(vec![4, 2])?;
    let blocks = transition_matrix(ctx, &lam)?;
    let Some(block) = blocks.iter().find(|b| b.content == vec![1, 1, 2, 2, 3, 3]) else {
        check.record(false, || "no block of weight (2,2,2)".into());
        return Ok(check);
    };
    let z = || rat_int(0);
    let matrix = vec![
        vec![rat(-1, 2), rat(-1, 2), rat(-1, 12)],
        vec![z(), rat(-1, 3), rat(-1, 12)],
        vec![z(), z(), rat(-1, 12)],
    ];
    let inverse = vec![
        vec![rat_int(-2), rat_int(3), rat_int(-1)],
        vec![z(), rat_int(-3), rat_int(3)],
        vec![z(), z(), rat_int(-12)],
    ];
    check.record(block.tableaux == worked_tableaux().to_vec(), || {
        "basis order".into()
    });
    check.record(block.matrix.to_rows() == matrix, || {
        format!("T = {:?}", block.matrix.string_rows())
    });
    check.record(block.inverse.to_rows() == inverse, || {
        format!("T⁻¹ = {:?}", block.inverse.string_rows())
    });
    Ok(check)
}

/// v_{A(k)} = Σ c_k·Ω_{A(·)} for the three worked tableaux, with the given
/// rows of coefficients.
pub fn omega_display(ctx: &FockContext, name: &str, coeffs: [[i64; 3]; 3]) -> Result<Check> {
    let fmt_row = |k: usize, row: &[i64; 3]| {
        let mut rhs = String::new();
        for b in (0..3).filter(|&b| row[b] != 0) {
            let sign = match (rhs.is_empty(), row[b] < 0) {
                (true, true) => "−",
                (true, false) => "",
                (false, true) => " − ",
                (false, false) => " + ",
            };
            rhs.push_str(&format!("{sign}{}·Ω_A({})", row[b].abs(), b + 1));
        }
        format!("v_A({}) = {rhs}", k + 1)
    };
    let statement: Vec<String> = coeffs
        .iter()
        .enumerate()
        .map(|(k, r)| fmt_row(k, r))
        .collect();
    let mut check = Check::new(name, statement.join("; "));
    let tabs = worked_tableaux();
    let omegas: Vec<FockVector> = tabs
        .iter()
        .map(|a| big_omega(ctx, a))
        .collect::<bases::Result<_>>()?;
    for (k, row) in coeffs.iter().enumerate() {
        let mut rhs = FockVector::zero();
        for (b, &c) in row.iter().enumerate() {
            rhs.add_scaled(&rat_int(c), &omegas[b]);
        }
        let v = gz_vector(ctx, &tabs[k])?.vector;
        check.record(ctx.equals(&v, &rhs)?, || fmt_row(k, row));
    }
    Ok(check)
}

fn creations(ctx: &FockContext, letters: &[usize], v: &FockVector) -> FockVector {
    letters
        .iter()
        .rev()
        .fold(v.clone(), |acc, &j| ctx.create(j, &acc))
}

/// E_31²Ω_(4,2,0) = 12·{B_3^+,B_1^−}²[B_1^+,B_2^+]²(B_1^+)²v_0.
pub fn e31_squared_display(ctx: &FockContext) -> Result<Check> {
    let mut check = Check::new(
        "lowering display",
        "E_31²Ω_(4,2,0) = 12·{B_3^+,B_1^−}²[B_1^+,B_2^+]²(B_1^+)²v_0",
    );
    let lam = Partition::new(vec![4, 2])?;
    let lhs = ctx.gl_power(3, 1, 2, &omega_lambda(ctx, &lam)?);
    let bracket = |v: &FockVector| {
        ctx.create(1, &ctx.create(2, v))
            .minus(&ctx.create(2, &ctx.create(1, v)))
    };
    let anti = |v: &FockVector| {
        ctx.create(3, &ctx.annihilate(1, v))
            .plus(&ctx.annihilate(1, &ctx.create(3, v)))
    };
    let mut rhs = creations(ctx, &[1, 1], &FockVector::vacuum());
    rhs = bracket(&bracket(&rhs));
    rhs = anti(&anti(&rhs)).scaled(&rat_int(12));
    check.record(ctx.equals(&lhs, &rhs)?, || "vectors differ".into());
    Ok(check)
}

/// Bracket-monomial expansions of v_A(3) (six terms −16) and v_A(2) (ten
/// terms ±16).
pub fn worked_bracket_expansions(ctx: &FockContext) -> Result<Check> {
    let mut check = Check::new(
        "worked bracket expansions",
        "v_A(3) = −16·Σ over the six row-1 arrangements of {1,1,2,2}; v_A(2) has ten terms ±16",
    );
    let [_, a2, a3] = worked_tableaux();
    let third = bracket_expansion(ctx, &a3)?;
    let arrangements: [&[usize]; 6] = [
        &[1, 1, 2, 2],
        &[1, 2, 1, 2],
        &[1, 2, 2, 1],
        &[2, 1, 1, 2],
        &[2, 1, 2, 1],
        &[2, 2, 1, 1],
    ];
    let mut expected3: Vec<(Rational, YoungTableau)> = arrangements
        .iter()
        .map(|r| (rat_int(-16), tab(&[r, &[3, 3]])))
        .collect();
    expected3.sort_by(|a, b| a.1.cmp(&b.1));
    check.record(third == expected3, || {
        format!("v_A(3) has {} terms", third.len())
    });

    let second = bracket_expansion(ctx, &a2)?;
    let ok = second.len() == 10
        && second
            .iter()
            .all(|(c, _)| *c == rat_int(16) || *c == rat_int(-16));
    check.record(ok, || format!("v_A(2) has {} terms", second.len()));
    Ok(check)
}
