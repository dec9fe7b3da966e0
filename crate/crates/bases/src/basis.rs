use std::collections::BTreeMap;

use combinatorics::{enumerate_ssyt, exponent_matrix, partitions_of, ExponentMatrix, YoungTableau};
use exactlinalg::{fmt_rational, rank, RatMatrix, Rational};
use fockspace::{FockContext, FockVector, Word};
use serde::Serialize;

use crate::egamma::pbw_identity_sides;
use crate::omega::creation_vector;
use crate::{BasesError, Result};

/// One element E^{γ_A} Ω_{λ_A} of the PBW-type basis.
#[derive(Debug, Clone, Serialize)]
pub struct BasisElement {
    pub tableau: YoungTableau,
    pub gamma: ExponentMatrix,
    #[serde(serialize_with = "ser_rational")]
    pub coeff_norm2: Rational,
    pub vector: FockVector,
}

fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

fn content_of_tableau(a: &YoungTableau, n: usize) -> Word {
    a.weight(n)
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u8 + 1, m))
        .collect()
}

/// Semistandard tableaux of size d with at most min(n, p) rows, grouped by
/// shape in reverse lex order and sorted within a shape.
pub fn basis_tableaux(ctx: &FockContext, degree: usize) -> Vec<YoungTableau> {
    partitions_of(degree, ctx.n())
        .iter()
        .filter(|l| l.length() <= ctx.p() as usize)
        .flat_map(|l| enumerate_ssyt(l, ctx.n()))
        .collect()
}

/// The PBW-type basis of the degree-d part of L(p). For each element both
/// sides of E^{γ_A}Ω_{λ_A} = (λ_A!/diag(γ_A)!)Ω_A are built and compared;
/// a mismatch is reported as an error.
pub fn pbw_basis(ctx: &FockContext, degree: usize) -> Result<Vec<BasisElement>> {
    let mut out = Vec::new();
    for a in basis_tableaux(ctx, degree) {
        let gamma = exponent_matrix(&a, ctx.n())?;
        let (lhs, rhs) = pbw_identity_sides(ctx, &gamma)?;
        if !ctx.equals(&lhs, &rhs)? {
            return Err(BasesError::IdentityFailure(a.to_text()));
        }
        out.push(BasisElement {
            coeff_norm2: ctx.norm_squared(&lhs)?,
            tableau: a,
            gamma,
            vector: lhs,
        });
    }
    Ok(out)
}

/// Per-weight independence data for a family of vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRank {
    pub content: Word,
    pub vectors: usize,
    pub rank: usize,
    pub dimension: usize,
}

/// Groups vectors by content and measures the rank of their canonical forms
/// against the dimension of the weight space.
pub fn weight_ranks(ctx: &FockContext, vectors: &[(Word, FockVector)]) -> Result<Vec<WeightRank>> {
    let mut groups: BTreeMap<Word, Vec<&FockVector>> = BTreeMap::new();
    for (c, v) in vectors {
        groups.entry(c.clone()).or_default().push(v);
    }
    let mut out = Vec::new();
    for (content, vs) in groups {
        let space = ctx.space(&content)?;
        let mut cols = Vec::new();
        for v in &vs {
            cols.push(ctx.canonical_form_in(&content, v)?.coords);
        }
        let m = RatMatrix::from_columns(&cols, space.rank()).expect("consistent dimensions");
        out.push(WeightRank {
            content,
            vectors: vs.len(),
            rank: rank(&m),
            dimension: space.rank(),
        });
    }
    Ok(out)
}

/// Rank data of the PBW-type basis in degree d.
pub fn pbw_weight_ranks(ctx: &FockContext, degree: usize) -> Result<Vec<WeightRank>> {
    let vectors: Vec<(Word, FockVector)> = pbw_basis(ctx, degree)?
        .into_iter()
        .map(|e| (content_of_tableau(&e.tableau, ctx.n()), e.vector))
        .collect();
    weight_ranks(ctx, &vectors)
}

/// A weight space in which the vectors B_A^+ v_0 (A semistandard, at most p
/// rows) are linearly dependent.
#[derive(Debug, Clone, Serialize)]
pub struct CreationDependency {
    pub content: Word,
    pub tableaux: Vec<YoungTableau>,
    pub rank: usize,
}

/// Searches degree d for a weight where {B_A^+ v_0} fails to be independent.
pub fn creation_dependency(ctx: &FockContext, degree: usize) -> Result<Option<CreationDependency>> {
    let tabs = basis_tableaux(ctx, degree);
    let mut vectors = Vec::new();
    for a in &tabs {
        vectors.push((content_of_tableau(a, ctx.n()), creation_vector(ctx, a)?));
    }
    for wr in weight_ranks(ctx, &vectors)? {
        if wr.rank < wr.vectors {
            let tableaux = tabs
                .iter()
                .filter(|a| content_of_tableau(a, ctx.n()) == wr.content)
                .cloned()
                .collect();
            return Ok(Some(CreationDependency {
                content: wr.content,
                tableaux,
                rank: wr.rank,
            }));
        }
    }
    Ok(None)
}
