//! Verification suites run by `verify`.

use fockspace::FockContext;
use serde::Serialize;

use crate::checks::appendix::{self, SlotRule};
use crate::checks::{bases, gz, mz, relations, Check};
use crate::words::{sample_words, words_up_to};
use crate::{JobConfig, Result, SuiteName};

/// Random words drawn for the bracket identities.
pub const SAMPLED_WORDS: usize = 12;
/// Longest multibracket in the bracket identities.
pub const BRACKET_LENGTH: usize = 3;
/// Corrected coefficients of v_A(k) in the Ω_A(·) basis.
pub const WORKED_OMEGA_ROWS: [[i64; 3]; 3] = [[-6, -12, -2], [0, -8, -2], [0, 0, -2]];

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: SuiteName,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub p: u32,
    pub deg: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

pub fn relations_suite(ctx: &FockContext, deg: usize) -> Result<Vec<Check>> {
    let words = words_up_to(ctx.n(), deg);
    Ok(vec![
        relations::triple_relations(ctx, &words)?,
        relations::gl_commutators(ctx, &words)?,
        relations::gl_generators(ctx, &words)?,
        relations::adjointness(ctx, &words)?,
        relations::gram_positive(ctx, deg)?,
    ])
}

pub fn bases_suite(ctx: &FockContext, deg: usize) -> Result<Vec<Check>> {
    let (identity, rank) = bases::pbw_basis_checks(ctx, deg)?;
    Ok(vec![
        identity,
        rank,
        bases::highest_weight_vectors(ctx, deg)?,
        bases::dimension_count(ctx, deg)?,
        bases::omega_routes(ctx, deg)?,
    ])
}

pub fn mz_suite(ctx: &FockContext, deg: usize) -> Result<Vec<Check>> {
    let mut checks = vec![mz::d_coefficients(ctx, deg)?];
    checks.extend(mz::projector_checks(ctx, deg)?);
    checks.push(mz::hw_expansions(ctx, deg)?);
    checks.push(mz::egamma_expansions(ctx, deg)?);
    checks.push(mz::raising_scalars(ctx, deg)?);
    checks.push(mz::projected_generators(ctx, deg)?);
    Ok(checks)
}

/// The worked (4,2) example needs n = 3, two rows and degree 6.
pub fn worked_example_applies(ctx: &FockContext, deg: usize) -> bool {
    ctx.n() == 3 && ctx.p() >= 2 && deg >= 6
}

pub fn gz_suite(ctx: &FockContext, deg: usize) -> Result<Vec<Check>> {
    let mut checks = vec![
        gz::gz_orthogonal(ctx, deg)?,
        gz::transition_triangular(ctx, deg)?,
        gz::closed_form_rows(ctx, deg)?,
    ];
    if worked_example_applies(ctx, deg) {
        checks.push(gz::golden_block(ctx)?);
        checks.push(gz::omega_display(
            ctx,
            "worked omega expansions",
            WORKED_OMEGA_ROWS,
        )?);
        checks.push(gz::e31_squared_display(ctx)?);
        checks.push(gz::worked_bracket_expansions(ctx)?);
    }
    Ok(checks)
}

/// Bracket identities on seeded random words, plus the coefficient
/// identities. The i-entry reading of the gl identity is reported as a note.
pub fn appendix_suite(ctx: &FockContext, deg: usize, seed: u64) -> Result<Vec<Check>> {
    let words = sample_words(ctx.n(), deg, SAMPLED_WORDS, seed);
    let mut gl = appendix::gl_past_brackets(ctx, &words, BRACKET_LENGTH, SlotRule::Replaced)?;
    let printed = appendix::gl_past_brackets(ctx, &words, BRACKET_LENGTH, SlotRule::Printed)?;
    gl.note(format!(
        "with δ_{{i,i_t}} in place of δ_{{j,i_t}} the identity fails in {} of {} cases",
        printed.failed, printed.cases
    ));
    gl.note(format!("{} words sampled with seed {seed}", words.len()));
    Ok(vec![
        gl,
        appendix::creation_past_brackets(ctx, &words, BRACKET_LENGTH)?,
        appendix::annihilation_past_brackets(ctx, &words, BRACKET_LENGTH)?,
        appendix::d_minus_special_value(ctx, deg)?,
        appendix::c_identities(ctx, deg)?,
    ])
}

pub fn run_suite(cfg: &JobConfig, suite: SuiteName) -> Result<SuiteReport> {
    let ctx = cfg.context(BRACKET_LENGTH + 2)?;
    let deg = cfg.deg;
    let checks = match suite {
        SuiteName::Relations => relations_suite(&ctx, deg)?,
        SuiteName::Bases => bases_suite(&ctx, deg)?,
        SuiteName::Mz => mz_suite(&ctx, deg)?,
        SuiteName::Gz => gz_suite(&ctx, deg)?,
        SuiteName::Appendix => appendix_suite(&ctx, deg, cfg.seed)?,
        SuiteName::All => unreachable!("expanded before dispatch"),
    };
    Ok(SuiteReport {
        name: suite,
        checks,
    })
}

pub fn verify(cfg: &JobConfig, suite: SuiteName) -> Result<VerifyReport> {
    let suites = suite
        .expand()
        .into_iter()
        .map(|s| run_suite(cfg, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        n: cfg.n,
        p: cfg.p,
        deg: cfg.deg,
        seed: cfg.seed,
        suites,
    })
}
