use std::collections::{BTreeMap, HashMap};

use bases::{apply_e_gamma, big_omega, omega_arrangements, omega_lambda, pbw_scalar};
use combinatorics::{
    enumerate_ssyt, exponent_matrix, partitions_of, ExponentMatrix, Partition, YoungTableau,
};
use exactlinalg::{inverse, rat_int, solve_in_span, RatMatrix, Rational};
use fockspace::{FockContext, FockVector, Word};
use serde::{Serialize, Serializer};

use crate::coeffs::{hw_chain_coefficient, pochhammer};
use crate::expansion::HwExpansion;
use crate::gz::{check_tableau, gz_vector_from_chain, hw_chain};
use crate::{MzError, Result};

/// The part of T with v_A = Σ_B T_AB E^{γ_B} Ω_{λ_B} on one weight space,
/// rows and columns indexed by the same tableaux of shape λ.
#[derive(Debug, Clone, Serialize)]
pub struct TransitionBlock {
    pub lambda: Partition,
    pub content: Word,
    pub tableaux: Vec<YoungTableau>,
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: RatMatrix,
    #[serde(serialize_with = "ser_matrix")]
    pub inverse: RatMatrix,
}

fn ser_matrix<S: Serializer>(m: &RatMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.string_rows().serialize(s)
}

fn content_of_tableau(a: &YoungTableau, n: usize) -> Word {
    a.weight(n)
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u8 + 1, m))
        .collect()
}

/// Basis order: shape (see `Partition::shape_cmp`), then γ in reading order.
fn basis_order(ctx: &FockContext, a: &YoungTableau, b: &YoungTableau) -> std::cmp::Ordering {
    let ga = exponent_matrix(a, ctx.n()).expect("tableau fits n");
    let gb = exponent_matrix(b, ctx.n()).expect("tableau fits n");
    a.shape()
        .shape_cmp(&b.shape())
        .then_with(|| ga.reading_order().cmp(gb.reading_order()))
}

struct PbwColumns {
    tableaux: Vec<YoungTableau>,
    coords: Vec<Vec<Rational>>,
}

fn pbw_columns(ctx: &FockContext, content: &Word, degree: usize) -> Result<PbwColumns> {
    let mut tableaux: Vec<YoungTableau> = partitions_of(degree, ctx.n())
        .iter()
        .filter(|l| l.length() <= ctx.p() as usize)
        .flat_map(|l| enumerate_ssyt(l, ctx.n()))
        .filter(|b| &content_of_tableau(b, ctx.n()) == content)
        .collect();
    tableaux.sort_by(|a, b| basis_order(ctx, a, b));
    let mut hw: HashMap<Vec<usize>, FockVector> = HashMap::new();
    let mut coords = Vec::new();
    for b in &tableaux {
        let shape = b.shape();
        let key = shape.parts().to_vec();
        if !hw.contains_key(&key) {
            hw.insert(key.clone(), omega_lambda(ctx, &shape)?);
        }
        let v = apply_e_gamma(ctx, &exponent_matrix(b, ctx.n())?, &hw[&key]);
        coords.push(ctx.canonical_form_in(content, &v)?.coords);
    }
    Ok(PbwColumns { tableaux, coords })
}

fn block_for(
    ctx: &FockContext,
    lambda: &Partition,
    hw: &FockVector,
    content: &Word,
    rows: &[YoungTableau],
) -> Result<TransitionBlock> {
    let cols = pbw_columns(ctx, content, lambda.size())?;
    let dim = ctx.space(content)?.rank();
    let basis = RatMatrix::from_columns(&cols.coords, dim)
        .expect("coordinate vectors share the space rank");
    let keep: Vec<usize> = (0..cols.tableaux.len())
        .filter(|&b| &cols.tableaux[b].shape() == lambda)
        .collect();
    let mut matrix = RatMatrix::zeros(rows.len(), keep.len());
    for (r, a) in rows.iter().enumerate() {
        let v = gz_vector_from_chain(ctx, a, hw)?.vector;
        let target = ctx.canonical_form_in(content, &v)?.coords;
        let coeffs = solve_in_span(&basis, &target)
            .expect("dimensions agree")
            .ok_or_else(|| MzError::NotInSpan(a.to_text()))?;
        for (b, c) in coeffs.iter().enumerate() {
            if !keep.contains(&b) && *c != rat_int(0) {
                return Err(MzError::NotTriangular(format!(
                    "v for\n{}\nhas a component along a different shape\n{}",
                    a.to_text(),
                    cols.tableaux[b].to_text()
                )));
            }
        }
        for (k, &b) in keep.iter().enumerate() {
            matrix.set(r, k, coeffs[b].clone());
        }
    }
    for r in 0..rows.len() {
        if *matrix.get(r, r) == rat_int(0) {
            return Err(MzError::NotTriangular(format!(
                "zero diagonal entry at {r} for weight {content:?}"
            )));
        }
    }
    if !matrix.is_upper_triangular() {
        return Err(MzError::NotTriangular(format!(
            "weight {content:?} of shape {lambda}"
        )));
    }
    let inv = inverse(&matrix)
        .expect("square")
        .expect("triangular with nonzero diagonal");
    Ok(TransitionBlock {
        lambda: lambda.clone(),
        content: content.clone(),
        tableaux: rows.to_vec(),
        matrix,
        inverse: inv,
    })
}

fn tableaux_by_weight(ctx: &FockContext, lambda: &Partition) -> BTreeMap<Word, Vec<YoungTableau>> {
    let mut tabs = enumerate_ssyt(lambda, ctx.n());
    tabs.sort_by(|a, b| basis_order(ctx, a, b));
    let mut groups: BTreeMap<Word, Vec<YoungTableau>> = BTreeMap::new();
    for a in tabs {
        groups
            .entry(content_of_tableau(&a, ctx.n()))
            .or_default()
            .push(a);
    }
    groups
}

/// Transition blocks of shape λ, one per weight, ordered by weight. Each
/// block is checked to be upper triangular with nonzero diagonal. Empty when
/// ℓ(λ) > p.
pub fn transition_matrix(ctx: &FockContext, lambda: &Partition) -> Result<Vec<TransitionBlock>> {
    if lambda.length() > ctx.n() {
        return Err(MzError::ShapeTooLong {
            shape: lambda.to_string(),
            n: ctx.n(),
        });
    }
    if lambda.length() > ctx.p() as usize {
        return Ok(Vec::new());
    }
    let hw = hw_chain(ctx, lambda)?;
    tableaux_by_weight(ctx, lambda)
        .iter()
        .map(|(content, rows)| block_for(ctx, lambda, &hw, content, rows))
        .collect()
}

fn block_containing(ctx: &FockContext, a: &YoungTableau) -> Result<(TransitionBlock, usize)> {
    check_tableau(ctx, a)?;
    let lambda = a.shape();
    let content = content_of_tableau(a, ctx.n());
    let rows = tableaux_by_weight(ctx, &lambda)
        .remove(&content)
        .unwrap_or_default();
    let hw = hw_chain(ctx, &lambda)?;
    let block = block_for(ctx, &lambda, &hw, &content, &rows)?;
    let r = block
        .tableaux
        .iter()
        .position(|t| t == a)
        .expect("A lies in its own weight block");
    Ok((block, r))
}

/// v_A = Σ_B c_B Ω_B over semistandard B, obtained from the row of T and
/// E^{γ_B} Ω_λ = (λ!/diag(γ_B)!) Ω_B.
pub fn gz_omega_expansion(
    ctx: &FockContext,
    a: &YoungTableau,
) -> Result<Vec<(Rational, YoungTableau)>> {
    let (block, r) = block_containing(ctx, a)?;
    let mut out = Vec::new();
    for (k, b) in block.tableaux.iter().enumerate() {
        let t = block.matrix.get(r, k);
        if *t == rat_int(0) {
            continue;
        }
        let scale = pbw_scalar(&block.lambda, &exponent_matrix(b, ctx.n())?);
        out.push((t * scale, b.clone()));
    }
    Ok(out)
}

/// v_A as an explicit combination of creation words on v_0, assembled from
/// the Ω_B expansion.
pub fn gz_from_creation_polynomials(ctx: &FockContext, a: &YoungTableau) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (c, b) in gz_omega_expansion(ctx, a)? {
        out.add_scaled(&c, &big_omega(ctx, &b)?);
    }
    Ok(out)
}

/// Sorts every column increasingly, returning the sign of the sorting
/// permutation, or None when a column repeats an entry (the multibracket then
/// vanishes).
fn normalize_columns(t: &YoungTableau) -> Option<(i64, YoungTableau)> {
    let mut sign = 1;
    let mut cols = t.columns();
    for col in &mut cols {
        let inversions = (0..col.len())
            .flat_map(|a| (a + 1..col.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| col[a] > col[b])
            .count();
        col.sort_unstable();
        if col.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        if inversions % 2 == 1 {
            sign = -sign;
        }
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for col in &cols {
        for (k, &x) in col.iter().enumerate() {
            if rows.len() <= k {
                rows.push(Vec::new());
            }
            rows[k].push(x);
        }
    }
    Some((sign, YoungTableau::new(rows).expect("columns of a diagram")))
}

fn add_omega_terms(
    merged: &mut BTreeMap<YoungTableau, Rational>,
    c: &Rational,
    gamma: &ExponentMatrix,
) -> Result<()> {
    let (stabilizer, arrangements) = omega_arrangements(gamma)?;
    let weight = c * Rational::from_integer(stabilizer);
    for t in arrangements {
        if let Some((sign, normal)) = normalize_columns(&t) {
            *merged.entry(normal).or_insert_with(|| rat_int(0)) += &weight * rat_int(sign);
        }
    }
    Ok(())
}

fn collect_terms(merged: BTreeMap<YoungTableau, Rational>) -> Vec<(Rational, YoungTableau)> {
    merged
        .into_iter()
        .filter(|(_, c)| *c != rat_int(0))
        .map(|(t, c)| (c, t))
        .collect()
}

/// Ω_{D(γ)} = Σ c_T ω_T with each ω_T a product of column multibrackets with
/// increasing entries; like terms merged, ordered by the tableau rows.
pub fn omega_bracket_terms(gamma: &ExponentMatrix) -> Result<Vec<(Rational, YoungTableau)>> {
    let mut merged = BTreeMap::new();
    add_omega_terms(&mut merged, &rat_int(1), gamma)?;
    Ok(collect_terms(merged))
}

/// v_A = Σ c_T ω_T in the same normal form as `omega_bracket_terms`.
pub fn bracket_expansion(
    ctx: &FockContext,
    a: &YoungTableau,
) -> Result<Vec<(Rational, YoungTableau)>> {
    let mut merged = BTreeMap::new();
    for (c, b) in gz_omega_expansion(ctx, a)? {
        add_omega_terms(&mut merged, &c, &exponent_matrix(&b, ctx.n())?)?;
    }
    Ok(collect_terms(merged))
}

/// One term of the n = 3 closed form v_A = Σ_ℓ d(λ) C(γ_31, ℓ)
/// (λ_1 − λ_2 + 2 − γ_31 + γ_32 + ℓ)_{γ_31 − ℓ} E^{γ(ℓ)} Ω_λ with
/// γ(ℓ) = γ + ℓ(e_21 − e_31 + e_32 − e_22). Terms with ℓ > λ_2 − λ_3 − γ_32
/// are flagged as vanishing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTerm {
    pub ell: usize,
    pub coeff: Rational,
    pub gamma: ExponentMatrix,
    pub vanishes: bool,
}

pub fn closed_form_terms(ctx: &FockContext, a: &YoungTableau) -> Result<Vec<ClosedFormTerm>> {
    if ctx.n() != 3 {
        return Err(MzError::Unsupported(format!(
            "the closed form transition is stated for n = 3, got n = {}",
            ctx.n()
        )));
    }
    let gamma = check_tableau(ctx, a)?;
    let lambda = a.shape();
    let l = |k: usize| lambda.part(k) as i64;
    let d = hw_chain_coefficient(ctx, &lambda);
    let g31 = gamma.get(3, 1);
    let g32 = gamma.get(3, 2);
    let mut out = Vec::new();
    let mut binom = rat_int(1);
    for ell in 0..=g31 {
        if ell > 0 {
            binom = binom * rat_int(g31 - ell + 1) / rat_int(ell);
        }
        let base = rat_int(l(1) - l(2) + 2 - g31 + g32 + ell);
        let coeff = &d * &binom * pochhammer(&base, (g31 - ell) as usize);
        let g = gamma
            .with_added(2, 1, ell)
            .with_added(3, 1, -ell)
            .with_added(3, 2, ell)
            .with_added(2, 2, -ell);
        out.push(ClosedFormTerm {
            ell: ell as usize,
            coeff,
            gamma: g,
            vanishes: ell > l(2) - l(3) - g32,
        });
    }
    Ok(out)
}

/// The non-vanishing part of the n = 3 closed form as an expansion in the
/// PBW-type basis.
pub fn closed_form_expansion(ctx: &FockContext, a: &YoungTableau) -> Result<HwExpansion> {
    let lambda = a.shape();
    let terms = closed_form_terms(ctx, a)?
        .into_iter()
        .filter(|t| !t.vanishes)
        .map(|t| (t.coeff, t.gamma, lambda.clone()));
    Ok(HwExpansion::from_terms(terms))
}
