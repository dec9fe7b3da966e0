//! The three subcommands as pure functions from a configuration to a report.

use bases::{omega_lambda, pbw_basis, pbw_scalar};
use combinatorics::{ExponentMatrix, Partition, YoungTableau};
use exactlinalg::{fmt_rational, Rational};
use fockspace::{FockVector, Word};
use mzops::{omega_bracket_terms, transition_matrix, TransitionBlock};
use serde::{Serialize, Serializer};

use crate::suites::{verify, VerifyReport};
use crate::{CliError, JobConfig, Result, SuiteName};

fn ser_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

/// c·ω_T, with ω_T the product of the column multibrackets of T.
#[derive(Debug, Clone, Serialize)]
pub struct BracketTerm {
    #[serde(serialize_with = "ser_rational")]
    pub coeff: Rational,
    pub tableau: YoungTableau,
}

/// One basis vector E^{γ_A}Ω_{λ_A}.
#[derive(Debug, Clone, Serialize)]
pub struct BasisRecord {
    pub index: usize,
    pub degree: usize,
    pub shape: Partition,
    pub tableau: YoungTableau,
    pub gamma: ExponentMatrix,
    pub content: Word,
    #[serde(serialize_with = "ser_rational")]
    pub coeff_norm2: Rational,
    pub vector: FockVector,
    pub brackets: Vec<BracketTerm>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerateReport {
    pub n: usize,
    pub p: u32,
    pub deg: usize,
    pub records: Vec<BasisRecord>,
}

fn content_of_tableau(a: &YoungTableau, n: usize) -> Word {
    a.weight(n)
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as u8 + 1, m))
        .collect()
}

/// The PBW-type basis of the degree-`deg` part of L(p).
pub fn enumerate(cfg: &JobConfig) -> Result<EnumerateReport> {
    let ctx = cfg.context(0)?;
    let mut records = Vec::new();
    for (index, e) in pbw_basis(&ctx, cfg.deg)?.into_iter().enumerate() {
        let shape = e.tableau.shape();
        let scale = pbw_scalar(&shape, &e.gamma);
        let brackets = omega_bracket_terms(&e.gamma)?
            .into_iter()
            .map(|(c, tableau)| BracketTerm {
                coeff: &scale * c,
                tableau,
            })
            .collect();
        records.push(BasisRecord {
            index,
            degree: cfg.deg,
            content: content_of_tableau(&e.tableau, cfg.n),
            shape,
            tableau: e.tableau,
            gamma: e.gamma,
            coeff_norm2: e.coeff_norm2,
            vector: e.vector,
            brackets,
        });
    }
    Ok(EnumerateReport {
        n: cfg.n,
        p: cfg.p,
        deg: cfg.deg,
        records,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TransitionReport {
    pub n: usize,
    pub p: u32,
    pub lambda: Partition,
    #[serde(rename = "d_lambda", serialize_with = "ser_rational")]
    pub chain_coefficient: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hw_norm2: Rational,
    pub blocks: Vec<TransitionBlock>,
    #[serde(skip)]
    pub message: Option<String>,
}

/// Transition blocks of shape λ. When λ has more than p rows the report is
/// empty and carries a message instead.
pub fn transition(cfg: &JobConfig, lambda: &Partition) -> Result<TransitionReport> {
    if lambda.length() > cfg.n {
        return Err(CliError::Usage(format!(
            "λ = {lambda} has more than n = {} rows",
            cfg.n
        )));
    }
    let ctx = cfg
        .context(0)?
        .with_degree_bound(lambda.size().max(fockspace::DEFAULT_DEGREE_BOUND));
    let chain_coefficient = mzops::hw_chain_coefficient(&ctx, lambda);
    if lambda.length() > cfg.p as usize {
        return Ok(TransitionReport {
            n: cfg.n,
            p: cfg.p,
            lambda: lambda.clone(),
            chain_coefficient,
            hw_norm2: Rational::from_integer(0.into()),
            blocks: Vec::new(),
            message: Some(format!(
                "λ = {lambda} has {} rows but p = {}: Ω_λ vanishes in L(p), no blocks",
                lambda.length(),
                cfg.p
            )),
        });
    }
    let hw_norm2 = ctx.norm_squared(&omega_lambda(&ctx, lambda)?)?;
    Ok(TransitionReport {
        n: cfg.n,
        p: cfg.p,
        lambda: lambda.clone(),
        chain_coefficient,
        hw_norm2,
        blocks: transition_matrix(&ctx, lambda)?,
        message: None,
    })
}

pub fn run_verify(cfg: &JobConfig, suite: SuiteName) -> Result<VerifyReport> {
    verify(cfg, suite)
}
