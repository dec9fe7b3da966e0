use std::collections::{BTreeMap, HashMap};

use bases::{apply_e_gamma, big_omega_of_matrix, omega_lambda, pbw_scalar, BasesError};
use combinatorics::{complement, enumerate_index_tuples, ExponentMatrix, IndexTuple, Partition};
use exactlinalg::{rat_int, rational_serde, Rational};
use fockspace::{FockContext, FockVector, Sign};
use serde::Serialize;

use crate::coeffs::{d_minus, d_plus};
use crate::{MzError, Result};

/// One term c · E^γ Ω_λ. The diagonal of γ completes its column sums to λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwTerm {
    #[serde(with = "rational_serde")]
    pub coeff: Rational,
    pub gamma: ExponentMatrix,
    pub lambda: Partition,
}

/// Σ c · E^γ Ω_λ with like terms merged and zero terms removed, ordered by
/// λ and then by the reading order of γ.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HwExpansion {
    terms: Vec<HwTerm>,
}

impl HwExpansion {
    pub fn from_terms<I: IntoIterator<Item = (Rational, ExponentMatrix, Partition)>>(
        terms: I,
    ) -> Self {
        let mut merged: BTreeMap<(Vec<usize>, ExponentMatrix), Rational> = BTreeMap::new();
        for (c, g, l) in terms {
            *merged
                .entry((l.parts().to_vec(), g))
                .or_insert_with(|| rat_int(0)) += c;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| *c != rat_int(0))
            .map(|((parts, gamma), coeff)| HwTerm {
                coeff,
                gamma,
                lambda: Partition::new(parts).expect("stored parts form a partition"),
            })
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[HwTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Σ c · E^γ Ω_λ as a word combination.
    pub fn to_vector(&self, ctx: &FockContext) -> Result<FockVector> {
        let mut cache: HashMap<Vec<usize>, FockVector> = HashMap::new();
        let mut out = FockVector::zero();
        for t in &self.terms {
            let key = t.lambda.parts().to_vec();
            if !cache.contains_key(&key) {
                cache.insert(key.clone(), omega_lambda(ctx, &t.lambda)?);
            }
            out.add_scaled(&t.coeff, &apply_e_gamma(ctx, &t.gamma, &cache[&key]));
        }
        Ok(out)
    }

    /// Σ c · (λ!/diag(γ)!) Ω_{D(γ)}, the same vector rewritten through the
    /// PBW-type identity.
    pub fn to_omega_vector(&self, ctx: &FockContext) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for t in &self.terms {
            let c = &t.coeff * pbw_scalar(&t.lambda, &t.gamma);
            out.add_scaled(&c, &big_omega_of_matrix(ctx, &t.gamma)?);
        }
        Ok(out)
    }
}

fn check_inputs(ctx: &FockContext, lambda: &Partition) -> Result<()> {
    if lambda.length() > ctx.n() {
        return Err(MzError::ShapeTooLong {
            shape: lambda.to_string(),
            n: ctx.n(),
        });
    }
    Ok(())
}

/// Diagonal completion: strictly lower part of `lower`, with γ_ll chosen so
/// that the column sums equal λ. None if a diagonal entry would be negative.
fn complete_diagonal(lower: &ExponentMatrix, lambda: &Partition) -> Option<ExponentMatrix> {
    let n = lower.n();
    let mut g = lower.strictly_lower();
    for l in 1..=n {
        let below: i64 = (l + 1..=n).map(|m| g.get(m, l)).sum();
        let d = lambda.part(l) as i64 - below;
        if d < 0 {
            return None;
        }
        g.set(l, l, d);
    }
    Some(g)
}

fn chain_gamma(n: usize, tuple: &IndexTuple) -> ExponentMatrix {
    let mut g = ExponentMatrix::zero(n);
    for (a, b) in tuple.lowering_pairs() {
        g.add(a, b, 1);
    }
    g
}

struct HwTermRaw {
    coeff: Rational,
    tuple: IndexTuple,
    lambda: Partition,
}

/// The I-sum expansion of B_j^± Ω_λ: terms c · E^{e_I} Ω_{λ±ε_i} with
/// λ±ε_i a partition.
fn hw_terms(ctx: &FockContext, sign: Sign, j: usize, lambda: &Partition) -> Vec<HwTermRaw> {
    let n = ctx.n();
    let l = |k: usize| lambda.part(k) as i64;
    let mut out = Vec::new();
    match sign {
        Sign::Plus => {
            for i in 1..=j {
                let Some(shifted) = lambda.shifted(i, 1) else {
                    continue;
                };
                if shifted.length() > n {
                    continue;
                }
                let d = d_plus(ctx, lambda, i);
                let mut den = rat_int(1);
                for m in i + 1..=j {
                    den *= rat_int(l(i) - l(m) - i as i64 + m as i64);
                }
                for tuple in enumerate_index_tuples(i, j) {
                    let mut num = rat_int(1);
                    for m in complement(&tuple) {
                        num *= rat_int(l(i) - l(m) - i as i64 + m as i64 + 1);
                    }
                    out.push(HwTermRaw {
                        coeff: &d * num / &den,
                        tuple,
                        lambda: shifted.clone(),
                    });
                }
            }
        }
        Sign::Minus => {
            for i in j..=n {
                let Some(shifted) = lambda.shifted(i, -1) else {
                    continue;
                };
                let d = d_minus(ctx, lambda, i);
                for tuple in enumerate_index_tuples(j, i) {
                    let mut den = rat_int(1);
                    for &m in tuple.items().iter().filter(|&&m| m != i) {
                        den *= rat_int(l(i) - l(m) - i as i64 + m as i64);
                    }
                    out.push(HwTermRaw {
                        coeff: &d / den,
                        tuple,
                        lambda: shifted.clone(),
                    });
                }
            }
        }
    }
    out
}

/// B_j^± Ω_λ = Σ_i Σ_I (d_i^±(λ) · product factors) E^{e_I} Ω_{λ±ε_i}, with
/// Ω_{λ±ε_i} := 0 when λ±ε_i is not a partition.
pub fn expand_b_on_hw(
    ctx: &FockContext,
    sign: Sign,
    j: usize,
    lambda: &Partition,
) -> Result<HwExpansion> {
    check_inputs(ctx, lambda)?;
    let n = ctx.n();
    let terms = hw_terms(ctx, sign, j, lambda).into_iter().filter_map(|t| {
        complete_diagonal(&chain_gamma(n, &t.tuple), &t.lambda).map(|g| (t.coeff, g, t.lambda))
    });
    Ok(HwExpansion::from_terms(terms))
}

/// Moves B_ℓ^± to the right of E^γ on highest weight vectors:
/// B_ℓ^+ E^γ = Σ_{j ≥ ℓ} Σ_{J ∈ I_ℓj} (−1)^{|J|−1} ∏_u γ_{j_{u+1} j_u} E^{γ−e_J} B_j^+ and
/// B_ℓ^− E^γ = E^γ B_ℓ^− + Σ_{j < ℓ} γ_ℓj E^{γ−e_ℓj} B_j^−.
/// Returns (coefficient, γ', j); only the strictly lower part of γ is used.
pub fn creation_past_lowering(
    sign: Sign,
    ell: usize,
    gamma: &ExponentMatrix,
) -> Vec<(Rational, ExponentMatrix, usize)> {
    let n = gamma.n();
    let g = gamma.strictly_lower();
    let mut out = Vec::new();
    match sign {
        Sign::Plus => {
            for j in ell..=n {
                for tuple in enumerate_index_tuples(ell, j) {
                    let mut coeff = rat_int(if tuple.len() % 2 == 1 { 1 } else { -1 });
                    let mut reduced = g.clone();
                    for (a, b) in tuple.lowering_pairs() {
                        coeff *= rat_int(g.get(a, b));
                        reduced.add(a, b, -1);
                    }
                    if coeff != rat_int(0) {
                        out.push((coeff, reduced, j));
                    }
                }
            }
        }
        Sign::Minus => {
            out.push((rat_int(1), g.clone(), ell));
            for j in 1..ell {
                let c = g.get(ell, j);
                if c != 0 {
                    out.push((rat_int(c), g.with_added(ell, j, -1), j));
                }
            }
        }
    }
    out
}

/// E^γ E^{e_I} = Σ_v ∏_{u: v_u ≠ i_u} γ_{v_u i_u} E^{γ + Σ_u (e_{v_u i_{u−1}} − e_{v_u i_u})}
/// over v_u ∈ {i_u, …, n}, modulo the diagonal (which acts by scalars on
/// weight vectors and is returned zeroed).
pub fn lowering_past_index_chain(
    gamma: &ExponentMatrix,
    tuple: &IndexTuple,
) -> Vec<(Rational, ExponentMatrix)> {
    let n = gamma.n();
    let items = tuple.items();
    let mut out = Vec::new();
    fn rec(
        u: usize,
        items: &[usize],
        n: usize,
        gamma: &ExponentMatrix,
        coeff: Rational,
        acc: ExponentMatrix,
        out: &mut Vec<(Rational, ExponentMatrix)>,
    ) {
        if u == items.len() {
            out.push((coeff, acc.strictly_lower()));
            return;
        }
        for v in items[u]..=n {
            let c = if v == items[u] {
                coeff.clone()
            } else {
                &coeff * rat_int(gamma.get(v, items[u]))
            };
            if c == rat_int(0) {
                continue;
            }
            let next = acc
                .with_added(v, items[u - 1], 1)
                .with_added(v, items[u], -1);
            rec(u + 1, items, n, gamma, c, next, out);
        }
    }
    rec(1, items, n, gamma, rat_int(1), gamma.clone(), &mut out);
    out
}

/// B_ℓ^± E^γ Ω_λ as Σ c · E^{γ̄} Ω_{λ±ε_i}: the lowering monomial is moved
/// past B_ℓ^±, the highest weight expansion is applied, and the resulting
/// E^{e_I} chain is absorbed back into normal order. Each γ̄ has its diagonal
/// completed to the new shape; terms needing a negative diagonal vanish.
pub fn expand_b_on_egamma(
    ctx: &FockContext,
    sign: Sign,
    ell: usize,
    gamma: &ExponentMatrix,
    lambda: &Partition,
) -> Result<HwExpansion> {
    check_inputs(ctx, lambda)?;
    if !gamma.is_lower_triangular() {
        return Err(BasesError::NotLowerTriangular(gamma.to_string()).into());
    }
    let mut terms = Vec::new();
    for (c1, reduced, j) in creation_past_lowering(sign, ell, gamma) {
        for t in hw_terms(ctx, sign, j, lambda) {
            for (c2, moved) in lowering_past_index_chain(&reduced, &t.tuple) {
                if let Some(g) = complete_diagonal(&moved, &t.lambda) {
                    terms.push((&c1 * &t.coeff * c2, g, t.lambda.clone()));
                }
            }
        }
    }
    Ok(HwExpansion::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_creation_on_vacuum_is_one_box() {
        let ctx = FockContext::new(3, 2).unwrap();
        let e = expand_b_on_hw(&ctx, Sign::Plus, 1, &Partition::empty()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.terms()[0].coeff, rat_int(1));
        assert_eq!(e.terms()[0].lambda, Partition::new(vec![1]).unwrap());
    }

    #[test]
    fn annihilation_of_vacuum_is_empty() {
        let ctx = FockContext::new(3, 2).unwrap();
        for j in 1..=3 {
            assert!(expand_b_on_hw(&ctx, Sign::Minus, j, &Partition::empty())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn merges_like_terms() {
        let l = Partition::new(vec![1]).unwrap();
        let g = ExponentMatrix::from_rows(vec![vec![1, 0], vec![0, 0]]).unwrap();
        let e = HwExpansion::from_terms([(rat_int(1), g.clone(), l.clone()), (rat_int(-1), g, l)]);
        assert!(e.is_empty());
    }

    #[test]
    fn single_chain_without_lowering() {
        let g = ExponentMatrix::zero(3);
        let t = IndexTuple(vec![1, 2, 3]);
        let out = lowering_past_index_chain(&g, &t);
        assert_eq!(out.len(), 1);
        assert_eq!(
            out[0].1,
            ExponentMatrix::from_rows(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
        );
    }
}
