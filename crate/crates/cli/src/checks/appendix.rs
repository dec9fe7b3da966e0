use combinatorics::{partitions_up_to, Partition};
use exactlinalg::{rat, rat_int};
use fockspace::{FockContext, FockVector, Word};
use mzops::{c_minus_squared, c_plus_squared, d_minus, d_plus};

use super::Check;
use crate::Result;

/// Index lists of length 1..=max_len over 1..=n.
fn index_lists(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (1..=n).map(move |l| [w.as_slice(), &[l]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn without(idx: &[usize], t: usize) -> Vec<usize> {
    idx.iter()
        .enumerate()
        .filter(|&(s, _)| s != t)
        .map(|(_, &x)| x)
        .collect()
}

/// Which bracket slots the gl action rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotRule {
    /// δ_{j,i_t}: E_ij turns a j-entry into i.
    Replaced,
    /// δ_{i,i_t} with the entry set to i, i.e. an i-entry left unchanged.
    Printed,
}

/// E_ij[B_{i_1}^+, …, B_{i_k}^+] v = [B_{i_1}^+, …, B_{i_k}^+] E_ij v
/// + Σ_t δ_{j,i_t} [B_{i_1}^+, …, B_i^+, …, B_{i_k}^+] v.
pub fn gl_past_brackets(
    ctx: &FockContext,
    words: &[Word],
    max_len: usize,
    rule: SlotRule,
) -> Result<Check> {
    let (name, statement) = match rule {
        SlotRule::Replaced => (
            "gl action past brackets",
            "E_ij[B_{i_1}^+,…,B_{i_k}^+] = [B_{i_1}^+,…,B_{i_k}^+]E_ij + Σ_t δ_{j,i_t}[B_{i_1}^+,…,B_i^+,…,B_{i_k}^+]",
        ),
        SlotRule::Printed => (
            "gl action past brackets, i-entry rule",
            "E_ij[B_{i_1}^+,…,B_{i_k}^+] = [B_{i_1}^+,…,B_{i_k}^+]E_ij + Σ_t δ_{i,i_t}[B_{i_1}^+,…,B_i^+,…,B_{i_k}^+]",
        ),
    };
    let mut check = Check::new(name, statement);
    let n = ctx.n();
    let lists = index_lists(n, max_len);
    for w in words {
        let v = FockVector::word(w.clone());
        for i in 1..=n {
            for j in 1..=n {
                let moved = ctx.gl(i, j, &v);
                for idx in &lists {
                    let lhs = ctx.gl(i, j, &ctx.multibracket(idx, &v));
                    let mut rhs = ctx.multibracket(idx, &moved);
                    for t in 0..idx.len() {
                        let hit = match rule {
                            SlotRule::Replaced => idx[t] == j,
                            SlotRule::Printed => idx[t] == i,
                        };
                        if hit {
                            let mut swapped = idx.clone();
                            swapped[t] = i;
                            rhs = rhs.plus(&ctx.multibracket(&swapped, &v));
                        }
                    }
                    check.record(ctx.equals(&lhs, &rhs)?, || {
                        format!("word {w:?}, E_{i}{j}, bracket {idx:?}")
                    });
                }
            }
        }
    }
    Ok(check)
}

/// B_i^+[B_{i_1}^+,…,B_{i_k}^+] = (−1)^{k+1}[…]B_i^+ + (−1)^k 2/(k+1) [B_{i_1}^+,…,B_{i_k}^+,B_i^+].
pub fn creation_past_brackets(ctx: &FockContext, words: &[Word], max_len: usize) -> Result<Check> {
    let mut check = Check::new(
        "creation past brackets",
        "B_i^+[B_{i_1}^+,…,B_{i_k}^+] = (−1)^{k+1}[B_{i_1}^+,…,B_{i_k}^+]B_i^+ + (−1)^k 2/(k+1)·[B_{i_1}^+,…,B_{i_k}^+,B_i^+]",
    );
    let n = ctx.n();
    let lists = index_lists(n, max_len);
    for w in words {
        let v = FockVector::word(w.clone());
        for i in 1..=n {
            let created = ctx.create(i, &v);
            for idx in &lists {
                let k = idx.len();
                let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
                let lhs = ctx.create(i, &ctx.multibracket(idx, &v));
                let mut longer = idx.clone();
                longer.push(i);
                let rhs = FockVector::linear_combination([
                    (rat_int(-sign), &ctx.multibracket(idx, &created)),
                    (rat(2 * sign, k as i64 + 1), &ctx.multibracket(&longer, &v)),
                ]);
                check.record(ctx.equals(&lhs, &rhs)?, || {
                    format!("word {w:?}, B_{i}^+, bracket {idx:?}")
                });
            }
        }
    }
    Ok(check)
}

/// B_i^−[B_{i_1}^+,…,B_{i_k}^+] = (−1)^k[…]B_i^− + Σ_t (−1)^{t−1}2k[…∖t]E_{i_t i}
/// + Σ_t δ_{i,i_t}(−1)^t k(k−1)[…∖t], with t counted from 1.
pub fn annihilation_past_brackets(
    ctx: &FockContext,
    words: &[Word],
    max_len: usize,
) -> Result<Check> {
    let mut check = Check::new(
        "annihilation past brackets",
        "B_i^−[B_{i_1}^+,…,B_{i_k}^+] = (−1)^k[…]B_i^− + Σ_t (−1)^{t−1}2k[…∖B_{i_t}^+]E_{i_t i} + Σ_t δ_{i,i_t}(−1)^t k(k−1)[…∖B_{i_t}^+]",
    );
    let n = ctx.n();
    let lists = index_lists(n, max_len);
    for w in words {
        let v = FockVector::word(w.clone());
        for i in 1..=n {
            let annihilated = ctx.annihilate(i, &v);
            for idx in &lists {
                let k = idx.len();
                let kk = k as i64;
                let lhs = ctx.annihilate(i, &ctx.multibracket(idx, &v));
                let mut rhs = ctx
                    .multibracket(idx, &annihilated)
                    .scaled(&rat_int(if k % 2 == 0 { 1 } else { -1 }));
                for t in 0..k {
                    let rest = without(idx, t);
                    let alt: i64 = if t % 2 == 0 { 1 } else { -1 };
                    rhs.add_scaled(
                        &rat_int(alt * 2 * kk),
                        &ctx.multibracket(&rest, &ctx.gl(idx[t], i, &v)),
                    );
                    if idx[t] == i {
                        rhs.add_scaled(
                            &rat_int(-alt * kk * (kk - 1)),
                            &ctx.multibracket(&rest, &v),
                        );
                    }
                }
                check.record(ctx.equals(&lhs, &rhs)?, || {
                    format!("word {w:?}, B_{i}^−, bracket {idx:?}")
                });
            }
        }
    }
    Ok(check)
}

/// d_j^−(μ + ε_j) = (−1)^{j+1} j (p − j + 1) for μ supported on the first
/// j − 1 rows, |μ| < deg and j ≤ min(n, p).
pub fn d_minus_special_value(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new("d^− special value", "d_j^−(μ+ε_j) = (−1)^{j+1} j (p−j+1)");
    let p = ctx.p() as i64;
    for j in 1..=ctx.n().min(ctx.p() as usize) {
        for mu in partitions_up_to(deg.saturating_sub(1), j - 1) {
            let Some(lam) = mu.shifted(j, 1) else {
                continue;
            };
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let expected = rat_int(sign * j as i64 * (p - j as i64 + 1));
            check.record(d_minus(ctx, &lam, j) == expected, || {
                format!("μ = {mu}, j = {j}")
            });
        }
    }
    Ok(check)
}

/// d_j^+(λ) d_j^−(λ+ε_j) = c_j^+(λ)² and c_j^−(λ)² = c_j^+(λ−ε_j)².
pub fn c_identities(ctx: &FockContext, deg: usize) -> Result<Check> {
    let mut check = Check::new(
        "c coefficients",
        "d_j^+(λ)·d_j^−(λ+ε_j) = c_j^+(λ)², c_j^−(λ) = c_j^+(λ−ε_j)",
    );
    let p = ctx.p() as usize;
    for lam in partitions_up_to(deg, ctx.n())
        .into_iter()
        .filter(|l| l.length() <= p)
    {
        for j in 1..=ctx.n() {
            if let Some(up) = lam.shifted(j, 1).filter(|s| s.length() <= p) {
                let lhs = d_plus(ctx, &lam, j) * d_minus(ctx, &up, j);
                check.record(lhs == c_plus_squared(ctx, &lam, j), || {
                    format!("λ = {lam}, j = {j}, product form")
                });
            }
            let expected = lam
                .shifted(j, -1)
                .map(|down: Partition| c_plus_squared(ctx, &down, j))
                .unwrap_or_else(|| rat_int(0));
            check.record(c_minus_squared(ctx, &lam, j) == expected, || {
                format!("λ = {lam}, j = {j}, shift form")
            });
        }
    }
    Ok(check)
}
