use combinatorics::ExponentMatrix;
use exactlinalg::{rat_int, BigInt, Rational};
use fockspace::{FockContext, FockVector};
use serde::Serialize;

use crate::omega::big_omega_of_matrix;
use crate::Result;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(label());
        }
    }
}

fn falling(k: i64, m: i64) -> BigInt {
    (0..m).map(|t| BigInt::from(k - t)).product()
}

/// Checks E_ij Ω_{D(γ)} = δ_ij (p/2) Ω_{D(γ)} + Σ_k γ_jk Ω_{D(γ+e_ik−e_jk)} for
/// all i, j, and, for every j whose entries of D(γ) sit in a single row k,
/// E_ij^m Ω_{D(γ)} = γ_jk!/(γ_jk−m)! Ω_{D(γ+m(e_ik−e_jk))} for i ≠ j and
/// 1 ≤ m ≤ γ_jk + 1 (zero once m exceeds γ_jk).
pub fn verify_gl_action_on_big_omega(
    ctx: &FockContext,
    gamma: &ExponentMatrix,
) -> Result<IdentityReport> {
    let n = ctx.n();
    let base = big_omega_of_matrix(ctx, gamma)?;
    let mut report = IdentityReport::default();
    for i in 1..=n {
        for j in 1..=n {
            let lhs = ctx.gl(i, j, &base);
            let mut rhs = if i == j {
                base.scaled(&ctx.half_p())
            } else {
                FockVector::zero()
            };
            for k in 1..=n {
                let c = gamma.get(j, k);
                if c == 0 {
                    continue;
                }
                let moved = gamma.with_added(i, k, 1).with_added(j, k, -1);
                rhs.add_scaled(&rat_int(c), &big_omega_of_matrix(ctx, &moved)?);
            }
            report.record(ctx.equals(&lhs, &rhs)?, || format!("E_{i}{j} on {gamma}"));
        }
    }
    for j in 1..=n {
        let support: Vec<usize> = (1..=n).filter(|&k| gamma.get(j, k) != 0).collect();
        if support.len() > 1 {
            continue;
        }
        let k = support.first().copied().unwrap_or(1);
        let g = gamma.get(j, k);
        for i in (1..=n).filter(|&i| i != j) {
            let mut power = base.clone();
            for m in 1..=g + 1 {
                power = ctx.gl(i, j, &power);
                let rhs = if m > g {
                    FockVector::zero()
                } else {
                    let moved = gamma.with_added(i, k, m).with_added(j, k, -m);
                    big_omega_of_matrix(ctx, &moved)?.scaled(&Rational::from_integer(falling(g, m)))
                };
                report.record(ctx.equals(&power, &rhs)?, || {
                    format!("E_{i}{j}^{m} on {gamma}")
                });
            }
        }
    }
    Ok(report)
}
